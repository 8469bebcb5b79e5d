//! Genus-zero instanton numbers of the quintic from the Yukawa coupling.
use genus_one::{gw, mirror_map, picard_fuchs};

fn main() -> genus_one::Result<()> {
    let order = 8;
    let table = picard_fuchs::build_tower(4, order)?;
    let map = mirror_map::mirror_map(&table)?;
    let report = gw::genus0_quintic(&table, &map, order)?;
    for (d, n0) in report.n0.iter().enumerate() {
        println!("n0({}) = {n0}", d + 1);
    }
    println!("Yukawa coupling in q: {}", report.coupling);
    Ok(())
}
