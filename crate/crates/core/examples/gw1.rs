//! Genus-one Gromov-Witten invariants N_1(d) for several dimensions.
use genus_one::{gw, mirror_map, picard_fuchs};

fn main() -> genus_one::Result<()> {
    for n in 4..=6 {
        let table = picard_fuchs::build_tower(n, 6)?;
        let map = mirror_map::mirror_map(&table)?;
        let report = gw::extract_gw1(&table, &map)?;
        println!("{report}");
        println!("round trip: {}", report.round_trip_holds(&map)?);
    }
    Ok(())
}
