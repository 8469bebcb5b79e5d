//! `ln Γ(x)` for positive rational `x`.
//!
//! The argument is shifted to `z = x + N` with the exact rational product
//! `x (x+1) ... (x+N-1)` and then fed to the Stirling series
//!
//! ```text
//! ln Γ(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum_{k=1}^{K} B_{2k} / (2k (2k-1) z^{2k-1}) + R_K,
//! ```
//!
//! where for real `z > 0` the remainder is bounded by the first omitted term.

use astro_float::{BigFloat, RoundingMode};
use num::{BigInt, BigRational, One, Signed, Zero};

use super::{check_prec, consts, err_add, err_mul, from_rational, from_usize, lt, pow2, round_abs, working_precision, Approx, ERR_P, RM};
use crate::error::{Error, Result};

/// `B_0, ..., B_m` (with `B_1 = -1/2`).
pub fn bernoulli_numbers(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    for k in 1..=m {
        if k > 1 && k % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        // sum_{j<k} C(k+1, j) B_j = -(k+1) B_k
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * &binom;
            binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(k + 1)));
    }
    b
}

/// `ln Γ(x)` with an absolute error bound, for rational `x > 0`.
pub fn ln_gamma(x: &BigRational, prec: usize) -> Result<Approx> {
    check_prec(prec)?;
    if !x.is_positive() {
        return Err(Error::pre(format!("ln Gamma needs a positive argument, got {x}")));
    }
    let wp = working_precision(prec);
    let mut cc = consts();

    // 2 pi z > wp ln 2 puts the smallest Stirling term well below 2^-wp
    let shift = (wp as f64 * 0.12).ceil() as usize + 4;
    let mut product = BigRational::one();
    for j in 0..shift {
        product *= x + BigRational::from_integer(BigInt::from(j));
    }
    let z_exact = x + BigRational::from_integer(BigInt::from(shift));
    let z = from_rational(&z_exact, wp, &mut cc);
    let ln_z = z.ln(wp, RM, &mut cc);
    let half = BigFloat::from_f64(0.5, wp);
    let two_pi = cc.pi(wp, RM).mul(&BigFloat::from_u8(2, wp), wp, RM);

    let mut value = z
        .sub(&half, wp, RM)
        .mul(&ln_z, wp, RM)
        .sub(&z, wp, RM)
        .add(&two_pi.ln(wp, RM, &mut cc).mul(&half, wp, RM), wp, RM);

    let target = pow2(-(wp as i64), ERR_P);
    let z_inv = z.reciprocal(wp, RM);
    let z_inv2 = z_inv.mul(&z_inv, wp, RM);
    let mut power = z_inv.clone();
    let mut terms = 0usize;
    let mut bernoulli = bernoulli_numbers(2);
    let remainder = loop {
        terms += 1;
        let k = terms;
        if bernoulli.len() < 2 * k + 3 {
            bernoulli = bernoulli_numbers(4 * k + 4);
        }
        let denom = BigRational::from_integer(BigInt::from(2 * k * (2 * k - 1)));
        let coeff = from_rational(&(&bernoulli[2 * k] / denom), wp, &mut cc);
        value = value.add(&coeff.mul(&power, wp, RM), wp, RM);
        power = power.mul(&z_inv2, wp, RM);
        let next = BigRational::from_integer(BigInt::from((2 * k + 2) * (2 * k + 1)));
        let next = from_rational(&(bernoulli[2 * k + 2].abs() / next), ERR_P, &mut cc).abs();
        let bound = err_mul(&next, &power.abs());
        if lt(&bound, &target) {
            break bound;
        }
        if terms > 4 * wp {
            return Err(Error::inconsistent("Stirling series failed to converge"));
        }
    };

    let ln_product = from_rational(&product, wp, &mut cc).ln(wp, RM, &mut cc);
    value = value.sub(&ln_product, wp, RM);

    // rounding: each of the O(terms) steps loses at most a few ulps of a
    // quantity bounded by |z ln z| + |z| + |ln product| + 4
    let magnitude = err_add(
        &err_add(&err_mul(&z, &ln_z.abs()), &z),
        &err_add(&ln_product.abs(), &BigFloat::from_u8(4, ERR_P)),
    );
    let steps = from_usize(4 * terms + 64, ERR_P);
    let rounding = err_mul(&err_mul(&magnitude, &steps), &pow2(-(wp as i64), ERR_P));
    let mut err = err_add(&remainder, &rounding);

    let rounded = round_abs(&value, prec);
    let cut = rounded.sub(&value, wp, RM).abs();
    err = err_add(&err, &cut);
    Ok(Approx {
        value: rounded,
        prec,
        err: err.add(&BigFloat::from_u8(0, ERR_P), ERR_P, RoundingMode::Up),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::to_f64;
    use crate::rat;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[8], rat(-1, 30));
        assert_eq!(b[10], rat(5, 66));
        assert_eq!(b[12], rat(-691, 2730));
        assert_eq!(b[3], rat(0, 1));
    }

    #[test]
    fn integers_give_factorials() {
        for (x, f) in [(1, 1.0f64), (2, 1.0), (5, 24.0), (10, 362880.0)] {
            let v = ln_gamma(&rat(x, 1), 128).unwrap();
            assert!((to_f64(&v.value) - f.ln()).abs() < 1e-14, "x={x}");
        }
    }

    #[test]
    fn half_gives_root_pi() {
        let prec = 256;
        let v = ln_gamma(&rat(1, 2), prec).unwrap();
        let mut cc = consts();
        let wp = prec + 64;
        let expected = cc.pi(wp, RM).ln(wp, RM, &mut cc).div(&BigFloat::from_u8(2, wp), wp, RM);
        let diff = v.value.sub(&expected, wp, RM).abs();
        assert!(lt(&diff, &pow2(-(prec as i64) + 2, 64)));
        assert!(lt(&v.err, &pow2(-(prec as i64) + 1, 64)));
    }

    /// Γ(x) = Γ(x+1)/x with Γ(x+1) = ∫_0^∞ exp(-u^{1/x}) du, by composite Simpson.
    fn gamma_by_quadrature(x: f64) -> f64 {
        let upper = 60f64.powf(x);
        let steps = 400_000;
        let h = upper / steps as f64;
        let f = |u: f64| (-u.powf(1.0 / x)).exp();
        let mut acc = f(0.0) + f(upper);
        for i in 1..steps {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(i as f64 * h);
        }
        acc * h / 3.0 / x
    }

    #[test]
    fn fifths_match_integral_representation() {
        for k in 1..5 {
            let v = ln_gamma(&rat(k, 5), 128).unwrap();
            let oracle = gamma_by_quadrature(k as f64 / 5.0).ln();
            assert!((to_f64(&v.value) - oracle).abs() < 1e-7, "k={k}");
        }
    }

    #[test]
    fn rejects_non_positive() {
        assert!(ln_gamma(&rat(0, 1), 128).is_err());
        assert!(ln_gamma(&rat(-1, 2), 128).is_err());
        assert!(ln_gamma(&rat(1, 2), 20).is_err());
    }
}
