//! The parity-split identity among log I_{p,p}, under both readings of its
//! even-dimensional coefficients.
use genus_one::{gw, picard_fuchs};

fn main() -> genus_one::Result<()> {
    for n in 4..=7 {
        let table = picard_fuchs::build_tower(n, 8)?;
        for reading in [gw::Reading::Squared, gw::Reading::Literal] {
            let r = gw::identity_residual_with(&table, reading)?;
            println!("n={n} {:<8} first nonzero degree: {:?}", reading.name(), r.first_nonzero_degree());
        }
    }
    Ok(())
}
