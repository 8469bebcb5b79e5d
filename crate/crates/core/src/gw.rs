//! Genus-one Gromov–Witten invariants from the B-model series, and the
//! genus-zero instanton numbers of the quintic.
//!
//! The genus-one potential is assembled as
//!
//! ```text
//! F_1^A = N_1(0) t + S(Q),
//! S = chi/24 log I_00 - n(3n-5)/48 log(1 - (n+1)^{n+1} Q) - 1/2 sum_{p=0}^{n-2} C(n-p,2) log I_pp,
//! ```
//!
//! and the invariants solve `N_1(0) G + sum_d N_1(d) Q^d e^{d G} = S`, using
//! `e^{dT} = Q^d e^{d G(Q)}`. The solve never passes through `q`.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::mirror_map::MirrorMap;
use crate::picard_fuchs::{conifold_factor, HypergeomTable};
use crate::series::RationalSeries;
use crate::topology::{binomial, chern_h_integral, euler_chars};

fn big(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `N_1(0)`, evaluated by three independent routes that must agree.
pub fn n1_zero(n: usize) -> Result<BigRational> {
    crate::check_n(n)?;
    let ni = n as i64;
    let n1sq = big((ni + 1) * (ni + 1));
    let power = BigRational::from_integer(num::pow(BigInt::from(-ni), n + 1));
    let first = -(big((ni - 1) * (ni + 2)) / big(48) + (BigRational::one() - power) / (big(24) * n1sq));
    let (chi_x, _) = euler_chars(n)?;
    let second = (big(-ni * (ni + 1)) / big(2) + BigRational::from_integer(chi_x) / big(ni + 1)) / big(24);
    let third = -BigRational::from_integer(chern_h_integral(n)?) / big(24);
    if first != second || second != third {
        return Err(Error::inconsistent(format!(
            "N_1(0) routes disagree: {first}, {second}, {third}"
        )));
    }
    Ok(first)
}

fn check_orders(table: &HypergeomTable, map: &MirrorMap) -> Result<()> {
    if table.order() != map.order || table.n() != map.n {
        return Err(Error::pre(format!(
            "table (n={}, order {}) and mirror map (n={}, order {}) do not match",
            table.n(),
            table.order(),
            map.n,
            map.order
        )));
    }
    Ok(())
}

/// `(N_1(0), S(Q))` with `F_1^A = N_1(0) t + S(Q)`.
pub fn f1_b_series(table: &HypergeomTable, map: &MirrorMap) -> Result<(BigRational, RationalSeries)> {
    check_orders(table, map)?;
    let n = table.n();
    let ni = n as i64;
    let (chi_x, _) = euler_chars(n)?;
    let mut s = table
        .diagonal(0)
        .log()?
        .scale(&(BigRational::from_integer(chi_x) / big(24)));
    let conifold = conifold_factor(n, table.order()).log()?;
    s = s.sub(&conifold.scale(&(big(ni * (3 * ni - 5)) / big(48))))?;
    for p in 0..=n - 2 {
        let c = BigRational::new(binomial(ni - p as i64, 2), BigInt::from(2));
        s = s.sub(&table.diagonal(p).log()?.scale(&c))?;
    }
    Ok((n1_zero(n)?, s))
}

/// Genus-one invariants up to the truncation order of the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwReport {
    pub n: usize,
    pub order: usize,
    pub n1zero: BigRational,
    /// `n1[d - 1] = N_1(d)` for `d = 1..=order`.
    pub n1: Vec<BigRational>,
    /// The `t`-free part `S(Q)` of `F_1^A`.
    pub s_series: RationalSeries,
}

impl GwReport {
    /// `N_1(d)`, with `d = 0` giving `N_1(0)`.
    pub fn invariant(&self, d: usize) -> Option<&BigRational> {
        if d == 0 {
            Some(&self.n1zero)
        } else {
            self.n1.get(d - 1)
        }
    }

    /// `N_1(0) G + sum_d N_1(d) Q^d e^{d G}` rebuilt from the invariants.
    pub fn reconstruct(&self, map: &MirrorMap) -> Result<RationalSeries> {
        let mut acc = map.g.truncate(self.order).scale(&self.n1zero);
        let base = map.q_of_big_q.truncate(self.order);
        let mut power = RationalSeries::one(base.var(), self.order);
        for c in &self.n1 {
            power = power.mul(&base)?;
            acc = acc.add(&power.scale(c))?;
        }
        Ok(acc)
    }

    pub fn round_trip_holds(&self, map: &MirrorMap) -> Result<bool> {
        Ok(self.reconstruct(map)? == self.s_series)
    }
}

impl fmt::Display for GwReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, order = {}", self.n, self.order)?;
        writeln!(f, "N_1(0) = {}", self.n1zero)?;
        for (i, c) in self.n1.iter().enumerate() {
            writeln!(f, "N_1({}) = {}", i + 1, c)?;
        }
        Ok(())
    }
}

pub fn extract_gw1(table: &HypergeomTable, map: &MirrorMap) -> Result<GwReport> {
    let (n1zero, s_series) = f1_b_series(table, map)?;
    let order = table.order();
    let mut rest = s_series.sub(&map.g.scale(&n1zero))?;
    let mut power = RationalSeries::one(rest.var(), order);
    let mut n1 = Vec::with_capacity(order);
    for d in 1..=order {
        // Q^d e^{dG} starts at Q^d with coefficient 1
        power = power.mul(&map.q_of_big_q)?;
        let c = rest.coeff(d).clone();
        rest = rest.sub(&power.scale(&c))?;
        n1.push(c);
    }
    if !rest.is_zero() {
        return Err(Error::inconsistent("triangular solve left a non-zero remainder"));
    }
    Ok(GwReport {
        n: table.n(),
        order,
        n1zero,
        n1,
        s_series,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// How to read the even-case coefficient of `log I_pp` on the right-hand
/// side, printed as `(n-2p^2)/8`. The odd case does not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// `(n - 2p)^2 / 8`.
    Squared,
    /// `(n - 2p^2) / 8`, exactly as printed.
    Literal,
}

impl Reading {
    pub fn name(self) -> &'static str {
        match self {
            Reading::Squared => "squared",
            Reading::Literal => "literal",
        }
    }
}

/// `LHS - RHS` of the parity-split identity among the diagonal series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    pub order: usize,
    pub parity: Parity,
    pub reading: Reading,
    pub residual: RationalSeries,
}

impl IdentityReport {
    pub fn first_nonzero_degree(&self) -> Option<usize> {
        self.residual.first_nonzero_degree()
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// The residual under the squared reading of the even case.
pub fn identity_residual(table: &HypergeomTable) -> Result<IdentityReport> {
    identity_residual_with(table, Reading::Squared)
}

/// Both sides of the identity, as `Q`-series.
fn identity_sides(table: &HypergeomTable, reading: Reading) -> Result<(RationalSeries, RationalSeries)> {
    let n = table.n();
    let ni = n as i64;
    let log_l = conifold_factor(n, table.order()).log()?;
    let logs = table
        .diagonals()
        .iter()
        .map(RationalSeries::log)
        .collect::<Result<Vec<_>>>()?;

    let mut lhs = log_l.scale(&(big(ni * (3 * ni - 5)) / big(48)));
    for (p, log_p) in logs.iter().enumerate().take(n - 1) {
        let c = BigRational::new(binomial(ni - p as i64, 2), BigInt::from(2));
        lhs = lhs.add(&log_p.scale(&c))?;
    }

    let mut rhs;
    match Parity::of(n) {
        Parity::Even => {
            rhs = log_l.scale(&(big(ni) / big(48)));
            for (p, log_p) in logs.iter().enumerate().take((n - 2) / 2 + 1) {
                let pi = p as i64;
                let num = match reading {
                    Reading::Squared => (ni - 2 * pi) * (ni - 2 * pi),
                    Reading::Literal => ni - 2 * pi * pi,
                };
                rhs = rhs.add(&log_p.scale(&(big(num) / big(8))))?;
            }
        }
        Parity::Odd => {
            rhs = log_l.scale(&(big(ni - 3) / big(48)));
            for (p, log_p) in logs.iter().enumerate().take((n - 3) / 2 + 1) {
                let pi = p as i64;
                let c = big((ni + 1 - 2 * pi) * (ni - 1 - 2 * pi)) / big(8);
                rhs = rhs.add(&log_p.scale(&c))?;
            }
        }
    }
    Ok((lhs, rhs))
}

pub fn identity_residual_with(table: &HypergeomTable, reading: Reading) -> Result<IdentityReport> {
    let (lhs, rhs) = identity_sides(table, reading)?;
    Ok(IdentityReport {
        n: table.n(),
        order: table.order(),
        parity: Parity::of(table.n()),
        reading,
        residual: lhs.sub(&rhs)?,
    })
}

/// `S(Q)` assembled with the right-hand side of the identity in place of
/// the single-sum form. Agrees with [`f1_b_series`] exactly when the
/// identity residual vanishes.
pub fn s_series_split(table: &HypergeomTable, reading: Reading) -> Result<RationalSeries> {
    let (chi_x, _) = euler_chars(table.n())?;
    let (_, rhs) = identity_sides(table, reading)?;
    table
        .diagonal(0)
        .log()?
        .scale(&(BigRational::from_integer(chi_x) / big(24)))
        .sub(&rhs)
}

/// Yukawa coupling of the quintic in `q` and the instanton numbers read off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus0Report {
    pub order: usize,
    /// `5 + sum_d n_0(d) d^3 q^d / (1 - q^d)`.
    pub coupling: RationalSeries,
    /// `n0[d - 1] = n_0(d)`.
    pub n0: Vec<BigRational>,
    pub all_integral: bool,
}

pub fn genus0_quintic(table: &HypergeomTable, map: &MirrorMap, order: usize) -> Result<Genus0Report> {
    if table.n() != 4 {
        return Err(Error::Unsupported(format!(
            "genus-zero extraction is implemented for n = 4 only, got n = {}",
            table.n()
        )));
    }
    check_orders(table, map)?;
    if order > table.order() {
        return Err(Error::pre(format!(
            "requested order {order} exceeds the table order {}",
            table.order()
        )));
    }
    let i00 = table.diagonal(0).truncate(order);
    let i11 = table.diagonal(1).truncate(order);
    let denom = conifold_factor(4, order).mul(&i00.pow(2))?.mul(&i11.pow(3))?;
    let in_big_q = RationalSeries::constant(denom.var(), order, big(5)).div(&denom)?;
    let coupling = in_big_q.compose(&map.big_q_of_q.truncate(order))?;

    let mut n0: Vec<BigRational> = Vec::with_capacity(order);
    for m in 1..=order {
        let mut y = coupling.coeff(m).clone();
        for d in (1..m).filter(|d| m % d == 0) {
            y -= &n0[d - 1] * big((d * d * d) as i64);
        }
        n0.push(y / big((m * m * m) as i64));
    }
    let all_integral = n0.iter().all(|c| c.is_integer());
    Ok(Genus0Report {
        order,
        coupling,
        n0,
        all_integral,
    })
}

/// Rebuilds `5 + sum_d n_0(d) d^3 q^d/(1-q^d)` from the instanton numbers.
pub fn coupling_from_instantons(report: &Genus0Report) -> RationalSeries {
    let order = report.order;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    coeffs[0] = big(5);
    for (i, c) in report.n0.iter().enumerate() {
        let d = i + 1;
        let weight = c * big((d * d * d) as i64);
        for k in (d..=order).step_by(d) {
            coeffs[k] += &weight;
        }
    }
    RationalSeries::from_coeffs(report.coupling.var(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mirror_map::mirror_map;
    use crate::picard_fuchs::build_tower;
    use crate::rat;

    fn setup(n: usize, order: usize) -> (HypergeomTable, MirrorMap) {
        let table = build_tower(n, order).unwrap();
        let map = mirror_map(&table).unwrap();
        (table, map)
    }

    #[test]
    fn n1_zero_values() {
        // (1/24)(-10 - 200/5)
        assert_eq!(n1_zero(4).unwrap(), rat(-25, 12));
        // (1/24)(-15 + 2610/6)
        assert_eq!(n1_zero(5).unwrap(), rat(35, 2));
        for n in 4..=12 {
            n1_zero(n).unwrap();
        }
        assert!(n1_zero(3).is_err());
    }

    #[test]
    fn s_series_at_first_order() {
        let (table, map) = setup(4, 1);
        let (_, s) = f1_b_series(&table, &map).unwrap();
        assert_eq!(s.constant_term(), &rat(0, 1));
        // -(34/3) 120 - (3/2) 770 - (1/2) 1345 + (7/12) 3125
        let expected = rat(-34, 3) * rat(120, 1) - rat(3, 2) * rat(770, 1) - rat(1, 2) * rat(1345, 1)
            + rat(7, 12) * rat(3125, 1);
        assert_eq!(s.coeff(1), &expected);
    }

    #[test]
    fn quintic_genus_one_degree_one() {
        let (table, map) = setup(4, 3);
        let report = extract_gw1(&table, &map).unwrap();
        assert_eq!(report.n1zero, rat(-25, 12));
        assert_eq!(report.n1[0], rat(2875, 12));
        assert!(report.round_trip_holds(&map).unwrap());
    }

    #[test]
    fn quintic_genus_one_matches_gopakumar_vafa() {
        // Up to degree 3: N_1(d) = sum_{k|d} n_0(d/k)/(12k) + n_1(d), with the
        // genus-one BPS counts n_1 = 0, 0, 609250
        let (table, map) = setup(4, 3);
        let report = extract_gw1(&table, &map).unwrap();
        let g0 = genus0_quintic(&table, &map, 3).unwrap();
        let n0 = |d: usize| g0.n0[d - 1].clone();
        assert_eq!(report.n1[1], (n0(2) + n0(1) / rat(2, 1)) / rat(12, 1));
        assert_eq!(report.n1[1], rat(407125, 8));
        assert_eq!(report.n1[2], (n0(3) + n0(1) / rat(3, 1)) / rat(12, 1) + rat(609250, 1));
    }

    #[test]
    fn degree_zero_truncation() {
        let (table, map) = setup(4, 0);
        let report = extract_gw1(&table, &map).unwrap();
        assert!(report.n1.is_empty());
        assert_eq!(report.n1zero, rat(-25, 12));
    }

    #[test]
    fn round_trip_for_several_n() {
        for n in 4..=6 {
            let (table, map) = setup(n, 6);
            let report = extract_gw1(&table, &map).unwrap();
            assert!(report.round_trip_holds(&map).unwrap(), "n={n}");
        }
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let (table, _) = setup(4, 3);
        let (_, map) = setup(4, 2);
        assert!(f1_b_series(&table, &map).is_err());
    }

    #[test]
    fn quintic_instantons() {
        let (table, map) = setup(4, 4);
        let report = genus0_quintic(&table, &map, 4).unwrap();
        assert_eq!(report.coupling.constant_term(), &rat(5, 1));
        assert_eq!(report.n0[0], rat(2875, 1));
        assert_eq!(report.n0[1], rat(609250, 1));
        assert_eq!(report.n0[2], rat(317206375, 1));
        assert!(report.all_integral);
        assert_eq!(coupling_from_instantons(&report), report.coupling);
    }

    #[test]
    fn genus_zero_needs_quintic() {
        let (table, map) = setup(5, 2);
        assert!(matches!(genus0_quintic(&table, &map, 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn split_form_agrees_with_canonical() {
        for n in [4, 5] {
            let (table, map) = setup(n, 5);
            let (_, s) = f1_b_series(&table, &map).unwrap();
            assert_eq!(s_series_split(&table, Reading::Squared).unwrap(), s);
        }
    }

    #[test]
    fn identity_at_first_order_by_hand() {
        // n = 4, degree 1: I_00 = 1 + 120Q, I_11 = 1 + 770Q, I_22 = 1 + 1345Q
        // LHS = (7/12)(-3125) + (1/2)(6*120 + 3*770 + 1345)
        // RHS = (1/12)(-3125) + 2*120 + (1/2)*770
        let (table, _) = setup(4, 1);
        let lhs = rat(7, 12) * rat(-3125, 1) + rat(1, 2) * rat(720 + 2310 + 1345, 1);
        let rhs = rat(1, 12) * rat(-3125, 1) + rat(240, 1) + rat(385, 1);
        let report = identity_residual(&table).unwrap();
        assert_eq!(report.residual.coeff(1), &(&lhs - rhs));
        let literal = identity_residual_with(&table, Reading::Literal).unwrap();
        // RHS literal: (4/8)*120 + (2/8)*770
        let rhs_literal = rat(1, 12) * rat(-3125, 1) + rat(60, 1) + rat(385, 2);
        assert_eq!(literal.residual.coeff(1), &(lhs - rhs_literal));
        assert_eq!(literal.first_nonzero_degree(), Some(1));
    }

    #[test]
    fn identity_parity_dispatch_and_constant_term() {
        for n in 4..=7 {
            let (table, _) = setup(n, 3);
            let report = identity_residual(&table).unwrap();
            assert_eq!(report.parity, Parity::of(n));
            assert_eq!(report.residual.constant_term(), &rat(0, 1));
        }
    }
}
