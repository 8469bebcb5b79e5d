//! Vanishing orders of eta_k at an ordinary double point.
use genus_one::topology;

fn main() -> genus_one::Result<()> {
    for n in 4..=9 {
        let orders = (0..n).map(|k| topology::eta_order_odp(n, k)).collect::<genus_one::Result<Vec<_>>>()?;
        println!("n={n}: {orders:?}");
    }
    Ok(())
}
