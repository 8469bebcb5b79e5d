//! Hodge numbers, Euler characteristics and asymptotic constants.
use genus_one::topology;

fn main() -> genus_one::Result<()> {
    for n in 4..=8 {
        let t = topology::topology_report(n)?;
        println!(
            "n={n}: chi_X={} chi_Z={} int c H={} a={} b={} c={} sigma={:?}",
            t.chi_x,
            t.chi_z,
            t.c_integral,
            t.abc.a,
            t.abc.b,
            t.abc.c,
            t.sigma.map(|s| s.to_string())
        );
    }
    println!("c(T) of the quintic: {}", topology::chern_class(4)?);
    Ok(())
}
