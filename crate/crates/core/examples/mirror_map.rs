//! The mirror map q = Q exp(G(Q)) and its inverse.
use genus_one::{mirror_map, picard_fuchs};

fn main() -> genus_one::Result<()> {
    let table = picard_fuchs::build_tower(4, 5)?;
    let map = mirror_map::mirror_map(&table)?;
    println!("G(Q)  = {}", map.g);
    println!("q(Q)  = {}", map.q_of_big_q);
    println!("Q(q)  = {}", map.big_q_of_q);
    println!("dT/dt = {}", mirror_map::jacobian(&table)?);
    Ok(())
}
