//! F_1^B(psi) at 128 bits along a ray, compared across truncation orders.
use genus_one::numeric::{self, BigComplex};

fn main() -> genus_one::Result<()> {
    for re in [2.0, 3.0, 5.0] {
        let psi = BigComplex::from_f64(re, 0.5, 192);
        let lo = numeric::f1b_eval(4, &psi, 8, 128)?;
        let hi = numeric::f1b_eval(4, &psi, 12, 128)?;
        println!("psi = {psi}");
        println!("  D=8  {} (tail ~ {})", lo.value.value, lo.tail);
        println!("  D=12 {} (tail ~ {})", hi.value.value, hi.tail);
    }
    Ok(())
}
