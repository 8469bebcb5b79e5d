//! The solution tower I_{p,q} of the quintic mirror family.
use genus_one::picard_fuchs;

fn main() -> genus_one::Result<()> {
    let table = picard_fuchs::build_tower(4, 5)?;
    for (p, d) in table.diagonals().iter().enumerate() {
        println!("I_{p}{p} = {d}");
    }
    println!("I_01 = {}", table.entry(0, 1).expect("entry"));
    Ok(())
}
