//! The Picard-Fuchs operator kills every Frobenius solution, exactly.
use genus_one::picard_fuchs;

fn main() -> genus_one::Result<()> {
    for n in 4..=6 {
        for (q, x) in picard_fuchs::i_0q(n, 12)?.iter().enumerate() {
            let r = picard_fuchs::pf_apply(n, x)?;
            println!("n={n} q={q}: D I_0{q} = {r}");
        }
    }
    Ok(())
}
