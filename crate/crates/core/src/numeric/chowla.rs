//! The logarithm of the Γ-value product attached to the fiber at `psi = 0`:
//!
//! ```text
//! 2p [ chi/12 ln Γ(1/p) + sum_{k=1}^{p-1} (p-k-1) ln Γ(k/p) ] - sigma ln pi.
//! ```

use astro_float::BigFloat;
use num::{BigInt, BigRational, Zero};

use super::lngamma::ln_gamma;
use super::{check_prec, consts, err_add, err_mul, from_rational, lt, pow2, round_abs, working_precision, Approx, ERR_P, RM};
use crate::error::Result;
use crate::topology::{chowla_selberg_exponents, ChowlaSelbergData};

#[derive(Clone, Debug)]
pub struct ChowlaValue {
    pub value: Approx,
    pub data: ChowlaSelbergData,
}

pub fn chowla_selberg_log(p: usize, prec: usize) -> Result<ChowlaValue> {
    check_prec(prec)?;
    let data = chowla_selberg_exponents(p)?;
    let wp = working_precision(prec);
    let mut cc = consts();
    let mut sum = BigFloat::from_u8(0, wp);
    let mut err = BigFloat::from_u8(0, ERR_P);
    let mut magnitude = BigFloat::from_u8(0, ERR_P);
    for k in 1..p {
        let e = data.total_exponent(k);
        if e.is_zero() {
            continue;
        }
        // ln Γ is evaluated at the working precision so that its rounding
        // to `prec` does not dominate
        let lg = ln_gamma(&BigRational::new(BigInt::from(k), BigInt::from(p)), wp)?;
        let e_f = from_rational(&e, wp, &mut cc);
        let term = e_f.mul(&lg.value, wp, RM);
        magnitude = err_add(&magnitude, &term.abs());
        err = err_add(&err, &err_mul(&e_f.abs(), &lg.err));
        sum = sum.add(&term, wp, RM);
    }
    let ln_pi = cc.pi(wp, RM).ln(wp, RM, &mut cc);
    let sigma_term = from_rational(&data.sigma, wp, &mut cc).mul(&ln_pi, wp, RM);
    magnitude = err_add(&magnitude, &sigma_term.abs());
    sum = sum.sub(&sigma_term, wp, RM);

    let rounding = err_mul(&err_mul(&magnitude, &BigFloat::from_u8(8, ERR_P)), &pow2(-(wp as i64), ERR_P));
    err = err_add(&err, &rounding);
    let rounded = round_abs(&sum, prec);
    err = err_add(&err, &rounded.sub(&sum, wp, RM).abs());
    Ok(ChowlaValue {
        value: Approx { value: rounded, prec, err },
        data,
    })
}

/// `ln Γ(1/p) + ln Γ(1 - 1/p)` against `ln pi - ln sin(pi/p)`.
#[derive(Clone, Debug)]
pub struct ReflectionCheck {
    pub lhs: BigFloat,
    pub rhs: BigFloat,
    pub diff: BigFloat,
    pub tolerance: BigFloat,
    pub passed: bool,
}

pub fn reflection_check(p: usize, prec: usize) -> Result<ReflectionCheck> {
    check_prec(prec)?;
    chowla_selberg_exponents(p)?;
    let wp = working_precision(prec);
    let mut cc = consts();
    let pb = BigInt::from(p);
    let a = ln_gamma(&BigRational::new(BigInt::from(1), pb.clone()), prec)?;
    let b = ln_gamma(&BigRational::new(pb.clone() - 1, pb), prec)?;
    let lhs = a.value.add(&b.value, wp, RM);
    let pi = cc.pi(wp, RM);
    let angle = pi.div(&BigFloat::from_u64(p as u64, wp), wp, RM);
    let rhs = pi
        .ln(wp, RM, &mut cc)
        .sub(&angle.sin(wp, RM, &mut cc).ln(wp, RM, &mut cc), wp, RM);
    let diff = lhs.sub(&rhs, wp, RM).abs();
    let tolerance = pow2(-(prec as i64) + 4, ERR_P);
    Ok(ReflectionCheck {
        passed: lt(&diff, &tolerance),
        lhs,
        rhs,
        diff,
        tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::to_f64;

    /// The same sum in `f64`, from `ln Γ` values computed by Lanczos.
    fn f64_oracle(p: usize) -> f64 {
        fn ln_gamma_lanczos(x: f64) -> f64 {
            const G: f64 = 7.0;
            const C: [f64; 9] = [
                0.999_999_999_999_809_9,
                676.520_368_121_885_1,
                -1_259.139_216_722_402_8,
                771.323_428_777_653_1,
                -176.615_029_162_140_6,
                12.507_343_278_686_905,
                -0.138_571_095_265_720_12,
                9.984_369_578_019_572e-6,
                1.505_632_735_149_311_6e-7,
            ];
            let x = x - 1.0;
            let mut a = C[0];
            let t = x + G + 0.5;
            for (i, c) in C.iter().enumerate().skip(1) {
                a += c / (x + i as f64);
            }
            0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
        }
        let data = chowla_selberg_exponents(p).unwrap();
        let f = |r: &BigRational| r.numer().to_string().parse::<f64>().unwrap() / r.denom().to_string().parse::<f64>().unwrap();
        let mut acc = 0.0;
        for k in 1..p {
            acc += f(&data.total_exponent(k)) * ln_gamma_lanczos(k as f64 / p as f64);
        }
        acc - f(&data.sigma) * std::f64::consts::PI.ln()
    }

    #[test]
    fn p5_against_double_precision() {
        let v = chowla_selberg_log(5, 128).unwrap();
        let oracle = f64_oracle(5);
        assert!((to_f64(&v.value.value) - oracle).abs() < 1e-9 * oracle.abs().max(1.0));
    }

    #[test]
    fn precision_doubling() {
        let lo = chowla_selberg_log(5, 128).unwrap().value;
        let hi = chowla_selberg_log(5, 256).unwrap().value;
        assert!(lo.within(&hi, &pow2(-120, ERR_P)));
        assert!(lo.within(&hi, &err_add(&lo.err, &hi.err)));
    }

    #[test]
    fn reproducible_bits() {
        let a = chowla_selberg_log(5, 128).unwrap().value.value;
        let b = chowla_selberg_log(5, 128).unwrap().value.value;
        assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn reflection() {
        for p in [5, 7, 11] {
            assert!(reflection_check(p, 192).unwrap().passed, "p={p}");
        }
    }

    #[test]
    fn needs_prime() {
        assert!(chowla_selberg_log(4, 128).is_err());
        assert!(chowla_selberg_log(3, 128).is_err());
    }
}
