//! `F_1^B(psi) = N_1(0) t + S(Q)` at `Q = ((n+1) psi)^{-(n+1)}`.
//!
//! The series `S` is exact; only its evaluation is numeric. The tail beyond
//! the last retained degree `D` is estimated geometrically with the ratio
//! `rho = max(|S_D / S_{D-1}|, (n+1)^{n+1}) |Q|`. This is an estimate from
//! the last coefficients, not a proof.

use astro_float::{BigFloat, RoundingMode};
use num::{BigInt, Zero};

use super::period::big_q_of_psi;
use super::{
    check_prec, consts, err_add, err_mul, from_bigint, from_rational, from_usize, lt, pow2, working_precision,
    BigComplex, ComplexApprox, ERR_P,
};
use crate::error::{Error, Result};
use crate::gw::{f1_b_series, n1_zero, s_series_split, Reading};
use crate::mirror_map::mirror_map;
use crate::picard_fuchs::build_tower;
use crate::series::RationalSeries;

/// Which assembly of `S(Q)` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum F1bForm {
    /// The single sum over `C(n-p, 2) log I_pp`.
    Canonical,
    /// The parity-split right-hand side of the identity.
    Split(Reading),
}

#[derive(Clone, Debug)]
pub struct F1bValue {
    pub value: ComplexApprox,
    /// The principal `t = Log Q`.
    pub t: BigComplex,
    pub order: usize,
    /// Estimated size of the omitted terms.
    pub tail: BigFloat,
}

pub fn f1b_eval(n: usize, psi: &BigComplex, order: usize, prec: usize) -> Result<F1bValue> {
    f1b_eval_form(n, psi, order, prec, F1bForm::Canonical)
}

pub fn f1b_eval_form(n: usize, psi: &BigComplex, order: usize, prec: usize, form: F1bForm) -> Result<F1bValue> {
    crate::check_n(n)?;
    check_prec(prec)?;
    if order < 2 {
        return Err(Error::pre("F_1^B needs order >= 2 for its tail estimate"));
    }
    let wp = working_precision(prec);
    if !lt(&BigFloat::from_u8(1, ERR_P), &psi.abs(wp)) {
        return Err(Error::pre(format!(
            "|psi| must exceed 1 so that |Q| < (n+1)^-(n+1), got psi = {psi}"
        )));
    }
    let table = build_tower(n, order)?;
    let s = match form {
        F1bForm::Canonical => f1_b_series(&table, &mirror_map(&table)?)?.1,
        F1bForm::Split(reading) => s_series_split(&table, reading)?,
    };
    evaluate(n, &n1_zero(n)?, &s, psi, prec)
}

fn evaluate(
    n: usize,
    n1zero: &num::BigRational,
    s: &RationalSeries,
    psi: &BigComplex,
    prec: usize,
) -> Result<F1bValue> {
    let wp = working_precision(prec);
    let mut cc = consts();
    let order = s.order();
    let q = big_q_of_psi(n, psi, wp);
    let abs_q = q.abs(ERR_P);
    let t = q.ln(wp, &mut cc);

    let mut sum = t.scale(&from_rational(n1zero, wp, &mut cc), wp);
    let mut abs_sum = err_mul(&from_rational(n1zero, ERR_P, &mut cc).abs(), &t.abs(ERR_P));
    let mut power = BigComplex::real(BigFloat::from_u8(1, wp), wp);
    for d in 1..=order {
        power = power.mul(&q, wp);
        let c = s.coeff(d);
        if c.is_zero() {
            continue;
        }
        let term = power.scale(&from_rational(c, wp, &mut cc), wp);
        abs_sum = err_add(&abs_sum, &term.abs(ERR_P));
        sum = sum.add(&term, wp);
    }

    let last = from_rational(s.coeff(order), ERR_P, &mut cc).abs();
    let prev = from_rational(s.coeff(order - 1), ERR_P, &mut cc).abs();
    let radius = from_bigint(&num::pow(BigInt::from(n + 1), n + 1), ERR_P, &mut cc);
    let ratio = if prev.is_zero() {
        radius
    } else {
        last.div(&prev, ERR_P, RoundingMode::Up).max(&radius)
    };
    let rho = err_mul(&ratio, &abs_q);
    let one = BigFloat::from_u8(1, ERR_P);
    if !lt(&rho, &one) {
        return Err(Error::pre(format!(
            "tail ratio {rho} is not below 1; raise the order or |psi|"
        )));
    }
    let last_term = err_mul(&last, &abs_q.powi(order, ERR_P, RoundingMode::Up));
    let tail = err_mul(&last_term, &rho.div(&one.sub(&rho, ERR_P, RoundingMode::Down), ERR_P, RoundingMode::Up));

    let ops = from_usize(8 * (order + 4), ERR_P);
    let rounding = err_mul(&err_mul(&abs_sum, &ops), &pow2(-(wp as i64), ERR_P));
    let rounded = sum.rounded(prec);
    let cut = rounded.sub(&sum, wp).abs(ERR_P);
    let err = err_add(&err_add(&tail, &rounding), &cut);
    Ok(F1bValue {
        value: ComplexApprox { value: rounded, prec, err },
        t: t.rounded(prec),
        order,
        tail,
    })
}
