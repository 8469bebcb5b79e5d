//! The fundamental period by its series and by torus quadrature.
use genus_one::numeric::{self, BigComplex};
use num::complex::Complex64;

fn main() -> genus_one::Result<()> {
    for psi in [Complex64::new(1.5, 0.0), Complex64::from_polar(2.0, 0.4), Complex64::new(3.0, 0.0)] {
        let series = numeric::period_i0(4, &BigComplex::from_f64(psi.re, psi.im, 192), 128)?;
        let quad = numeric::torus_quadrature(4, psi, 32)?;
        println!("psi = {psi:.3}");
        println!("  series     {} (err <= {}, {} terms)", series.value.value, series.value.err, series.terms);
        println!("  quadrature {:.15} (err ~ {:.1e})", quad.value, quad.err);
    }
    Ok(())
}
