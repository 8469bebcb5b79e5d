//! The fundamental period `I_0(psi) = sum_d ((n+1)d)!/(d!)^{n+1} ((n+1) psi)^{-(n+1)d}`
//! by its series and, independently, by the trapezoid rule on the unit torus.

use std::f64::consts::PI;

use astro_float::BigFloat;
use num::complex::Complex64;
use rayon::prelude::*;

use super::{
    check_prec, err_add, err_mul, from_usize, lt, pow2, working_precision, BigComplex, ComplexApprox, ERR_P, RM,
};
use crate::error::{Error, Result};

/// Smallest `|psi|` accepted by [`period_i0`].
pub const PERIOD_MIN_ABS_PSI: f64 = 1.05;

#[derive(Clone, Debug)]
pub struct PeriodValue {
    pub value: ComplexApprox,
    /// Number of series terms summed, including `d = 0`.
    pub terms: usize,
}

/// `((n+1) psi)^{-(n+1)}`.
pub(crate) fn big_q_of_psi(n: usize, psi: &BigComplex, p: usize) -> BigComplex {
    psi.scale(&from_usize(n + 1, p), p).powi(n + 1, p).recip(p)
}

pub fn period_i0(n: usize, psi: &BigComplex, prec: usize) -> Result<PeriodValue> {
    crate::check_n(n)?;
    check_prec(prec)?;
    let wp = working_precision(prec);
    let abs_psi = psi.abs(wp);
    if !lt(&BigFloat::from_f64(PERIOD_MIN_ABS_PSI, ERR_P), &abs_psi) {
        return Err(Error::pre(format!(
            "|psi| must exceed {PERIOD_MIN_ABS_PSI} for the period series, got {abs_psi}"
        )));
    }
    // |t_{d+1} / t_d| < (n+1)^{n+1} |Q| = |psi|^{-(n+1)} =: r
    let r = abs_psi.powi(n + 1, ERR_P, RM).reciprocal(ERR_P, astro_float::RoundingMode::Up);
    let r = err_mul(&r, &BigFloat::from_f64(1.0 + 1e-15, ERR_P));
    let one = BigFloat::from_u8(1, ERR_P);
    let tail_factor = r.div(&one.sub(&r, ERR_P, astro_float::RoundingMode::Down), ERR_P, astro_float::RoundingMode::Up);
    let target = pow2(-(prec as i64) - 2, ERR_P);

    let q = big_q_of_psi(n, psi, wp);
    let mut term = BigComplex::real(BigFloat::from_u8(1, wp), wp);
    let mut sum = term.clone();
    let mut abs_sum = BigFloat::from_u8(1, ERR_P);
    let mut d = 0usize;
    let tail = loop {
        for r in 1..=n + 1 {
            term = term.scale(&from_usize((n + 1) * d + r, wp), wp);
        }
        d += 1;
        let d_pow = from_usize(d, wp).powi(n + 1, wp, RM);
        term = term.mul(&q, wp).scale(&d_pow.reciprocal(wp, RM), wp);
        sum = sum.add(&term, wp);
        let size = term.abs(ERR_P);
        abs_sum = err_add(&abs_sum, &size);
        let bound = err_mul(&size, &tail_factor);
        if lt(&bound, &target) {
            break bound;
        }
        if d > 10_000_000 {
            return Err(Error::inconsistent("period series failed to converge"));
        }
    };
    // each term carries O(n) roundings relative to itself; the additions add O(d) more
    let ops = from_usize((2 * n + 8) * (d + 1), ERR_P);
    let rounding = err_mul(&err_mul(&abs_sum, &ops), &pow2(-(wp as i64), ERR_P));
    let rounded = sum.rounded(prec);
    let cut = rounded.sub(&sum, wp).abs(ERR_P);
    let err = err_add(&err_add(&tail, &rounding), &cut);
    Ok(PeriodValue {
        value: ComplexApprox { value: rounded, prec, err },
        terms: d + 1,
    })
}

/// Trapezoid-rule value of the torus integral, in double precision.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadrature {
    pub value: Complex64,
    /// `|Q_m - Q_{m/2}| + rounding allowance`.
    pub err: f64,
    pub m: usize,
    /// Smallest `|F_psi(1, z)|` met on the grid.
    pub min_modulus: f64,
}

/// Mean over the `m^n` grid of `-(n+1) psi prod z / (1 + sum z^{n+1} - (n+1) psi prod z)`,
/// with the grid minimum of the denominator's modulus.
fn trapezoid(n: usize, psi: Complex64, m: usize) -> (Complex64, f64) {
    let roots: Vec<Complex64> = (0..m).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64)).collect();
    let powers: Vec<Complex64> = roots.iter().map(|z| z.powu(n as u32 + 1)).collect();
    let c = psi * (n as f64 + 1.0);
    let inner = m.pow(n as u32 - 1);
    let (sum, min) = (0..m)
        .into_par_iter()
        .map(|first| {
            let mut idx = vec![0usize; n - 1];
            let mut acc = Complex64::new(0.0, 0.0);
            let mut min = f64::INFINITY;
            for _ in 0..inner {
                let mut prod = roots[first];
                let mut sum = Complex64::new(1.0, 0.0) + powers[first];
                for &i in &idx {
                    prod *= roots[i];
                    sum += powers[i];
                }
                let cp = c * prod;
                let den = sum - cp;
                min = min.min(den.norm());
                acc += -cp / den;
                for slot in idx.iter_mut() {
                    *slot += 1;
                    if *slot < m {
                        break;
                    }
                    *slot = 0;
                }
            }
            (acc, min)
        })
        .reduce(|| (Complex64::new(0.0, 0.0), f64::INFINITY), |a, b| (a.0 + b.0, a.1.min(b.1)));
    (sum / (m as f64).powi(n as i32), min)
}

/// Certifies that `F_psi(1, z)` has no zero on the torus. For `|psi| > 1`
/// this follows from `|1 + sum z^{n+1}| <= n+1 < (n+1)|psi|`; otherwise a
/// coarse grid minimum must exceed the Lipschitz slack between grid points.
fn certify_no_pole(n: usize, psi: Complex64) -> Result<()> {
    if psi.norm() > 1.0 {
        return Ok(());
    }
    let coarse = ((2_000_000f64).powf(1.0 / n as f64).floor() as usize).clamp(4, 16);
    let (_, min) = trapezoid(n, psi, coarse);
    let nf = n as f64;
    let lipschitz = (nf + 1.0) * (1.0 + psi.norm());
    let slack = lipschitz * nf * PI / coarse as f64;
    if min <= slack {
        return Err(Error::pre(format!(
            "integrand may have a pole on the torus at psi = {psi} (grid minimum {min:.3e})"
        )));
    }
    Ok(())
}

pub fn torus_quadrature(n: usize, psi: Complex64, m: usize) -> Result<Quadrature> {
    crate::check_n(n)?;
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::pre(format!("m must be even and at least 4, got {m}")));
    }
    if (m as f64).powi(n as i32) > 5e8 {
        return Err(Error::pre(format!("m^n = {m}^{n} grid points is too many")));
    }
    certify_no_pole(n, psi)?;
    let (value, min_modulus) = trapezoid(n, psi, m);
    if min_modulus == 0.0 || !value.is_finite() {
        return Err(Error::pre("integrand pole met on the grid"));
    }
    let (coarse, _) = trapezoid(n, psi, m / 2);
    let rounding = 1e-13 * (1.0 + value.norm());
    Ok(Quadrature {
        value,
        err: (value - coarse).norm() + rounding,
        m,
        min_modulus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::to_f64;

    fn psi(re: f64, im: f64) -> BigComplex {
        BigComplex::from_f64(re, im, 256)
    }

    #[test]
    fn large_psi_tends_to_one() {
        let v = period_i0(4, &psi(1e6, 0.0), 128).unwrap();
        assert!((v.value.value.to_c64() - Complex64::new(1.0, 0.0)).norm() < 1e-25);
    }

    #[test]
    fn invariant_under_roots_of_unity() {
        let z = Complex64::from_polar(2.0, 0.3);
        let zeta = Complex64::from_polar(1.0, 2.0 * PI / 5.0);
        let a = period_i0(4, &psi(z.re, z.im), 128).unwrap().value.value.to_c64();
        let w = z * zeta;
        let b = period_i0(4, &psi(w.re, w.im), 128).unwrap().value.value.to_c64();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn first_terms_by_hand() {
        // 1 + 120 Q + 113400 Q^2 + O(Q^3) with Q = 50^-5
        let v = period_i0(4, &psi(10.0, 0.0), 64).unwrap().value.value.to_c64();
        let q = 50f64.powi(-5);
        assert!((v.re - (1.0 + 120.0 * q + 113400.0 * q * q)).abs() < 1e-16);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn rejects_small_psi() {
        assert!(period_i0(4, &psi(1.0, 0.0), 64).is_err());
        assert!(period_i0(4, &psi(0.0, 1.04), 64).is_err());
    }

    #[test]
    fn error_bound_covers_precision_doubling() {
        let lo = period_i0(4, &psi(1.5, 0.4), 128).unwrap().value;
        let hi = period_i0(4, &psi(1.5, 0.4), 256).unwrap().value;
        let d = lo.distance(&hi);
        assert!(lt(&d, &err_add(&lo.err, &hi.err)));
        assert!(to_f64(&lo.err) < 2f64.powi(-126));
    }

    #[test]
    fn quadrature_matches_series_at_two() {
        let s = period_i0(4, &psi(2.0, 0.0), 64).unwrap().value.value.to_c64();
        let q = torus_quadrature(4, Complex64::new(2.0, 0.0), 24).unwrap();
        assert!((s - q.value).norm() < 1e-6);
        assert!(q.value.im.abs() < 1e-12);
        let finer = torus_quadrature(4, Complex64::new(2.0, 0.0), 48).unwrap();
        assert!((finer.value - q.value).norm() < 1e-8);
    }

    #[test]
    fn quadrature_preconditions() {
        assert!(torus_quadrature(4, Complex64::new(2.0, 0.0), 7).is_err());
        assert!(torus_quadrature(4, Complex64::new(0.0, 0.0), 8).is_err());
    }
}
