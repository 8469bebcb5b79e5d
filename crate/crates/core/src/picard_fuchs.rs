//! Hypergeometric solutions of the Picard–Fuchs equation of the mirror family.
//!
//! Everything is expanded in `Q = e^t`, where `z = (n+1)^{n+1} Q` is the
//! parameter of the operator
//!
//! ```text
//! D = delta^n - z * prod_{j=1}^{n} (delta + j/(n+1)),   delta = z d/dz = d/dt.
//! ```
//!
//! The generating function
//! `R(w,t) = e^{wt} sum_d Q^d prod_{r=1}^{(n+1)d}((n+1)w + r) / prod_{r=1}^{d}(w + r)^{n+1}`
//! yields the solutions `I_{0,q}` as its `w^q` coefficients, and the tower
//! `I_{p,q} = d/dt (I_{p-1,q} / I_{p-1,p-1})` normalises them.

use num::{BigInt, BigRational, One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result, Var};
use crate::series::{LogSeries, RationalSeries};

/// `poly * (a w + b)`, keeping the order of `poly`.
fn mul_linear(poly: &mut [BigRational], a: &BigRational, b: &BigRational) {
    for k in (0..poly.len()).rev() {
        let mut c = &poly[k] * b;
        if k > 0 {
            c += &poly[k - 1] * a;
        }
        poly[k] = c;
    }
}

/// `F(w, Q)`'s degree-`d` coefficient as a polynomial in `w` truncated at `w^{n-1}`.
fn w_expansion(n: usize, d: usize) -> RationalSeries {
    let n1 = BigRational::from_integer(BigInt::from(n + 1));
    let one = BigRational::one();
    let mut num = vec![BigRational::zero(); n];
    num[0] = BigRational::one();
    for r in 1..=(n + 1) * d {
        mul_linear(&mut num, &n1, &BigRational::from_integer(r.into()));
    }
    let mut den = vec![BigRational::zero(); n];
    den[0] = BigRational::one();
    for r in 1..=d {
        mul_linear(&mut den, &one, &BigRational::from_integer(r.into()));
    }
    let num = RationalSeries::from_coeffs(Var::W, num);
    let den = RationalSeries::from_coeffs(Var::W, den).pow(n + 1);
    num.div(&den).expect("denominator has constant term (d!)^{n+1}")
}

/// The series `F_0, ..., F_{n-1}` with `F(w, Q) = sum_q F_q(Q) w^q`.
pub fn f_tower(n: usize, order: usize) -> Result<Vec<RationalSeries>> {
    crate::check_n(n)?;
    let by_degree: Vec<RationalSeries> = (0..=order).into_par_iter().map(|d| w_expansion(n, d)).collect();
    Ok((0..n)
        .map(|q| {
            RationalSeries::from_coeffs(Var::Q, by_degree.iter().map(|w| w.coeff(q).clone()).collect())
        })
        .collect())
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `I_{0,q} = sum_{j=0}^{q} (t^j / j!) F_{q-j}` for `q = 0..n-1`.
pub fn i_0q(n: usize, order: usize) -> Result<Vec<LogSeries>> {
    let f = f_tower(n, order)?;
    Ok(i_0q_from(&f))
}

fn i_0q_from(f: &[RationalSeries]) -> Vec<LogSeries> {
    (0..f.len())
        .map(|q| {
            let parts = (0..=q)
                .map(|j| f[q - j].scale(&BigRational::new(BigInt::one(), factorial(j))))
                .collect();
            LogSeries::from_parts(parts).expect("parts built from one tower")
        })
        .collect()
}

/// The grid `I_{p,q}`, `0 <= p <= q <= n-1`, at a fixed truncation order.
#[derive(Clone, Debug)]
pub struct HypergeomTable {
    n: usize,
    order: usize,
    f: Vec<RationalSeries>,
    // rows[p][q - p] = I_{p,q}
    rows: Vec<Vec<LogSeries>>,
    diagonal: Vec<RationalSeries>,
}

impl HypergeomTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `F_q`, the `w^q` coefficient of `F(w, Q)`.
    pub fn f_series(&self, q: usize) -> &RationalSeries {
        &self.f[q]
    }

    /// `I_{p,q}` for `p <= q < n`.
    pub fn entry(&self, p: usize, q: usize) -> Option<&LogSeries> {
        if p > q {
            return None;
        }
        self.rows.get(p).and_then(|row| row.get(q - p))
    }

    /// The `t`-free diagonal series `I_{p,p}`.
    pub fn diagonal(&self, p: usize) -> &RationalSeries {
        &self.diagonal[p]
    }

    pub fn diagonals(&self) -> &[RationalSeries] {
        &self.diagonal
    }
}

/// Runs the quotient-and-differentiate recursion for the whole tower.
pub fn build_tower(n: usize, order: usize) -> Result<HypergeomTable> {
    let f = f_tower(n, order)?;
    let first = i_0q_from(&f);
    let i00 = first[0]
        .clone()
        .into_t_free()
        .ok_or_else(|| Error::inconsistent("I_{0,0} is not t-free"))?;
    let mut rows = vec![first];
    let mut diagonal = vec![i00];
    for p in 1..n {
        let prev = &diagonal[p - 1];
        if prev.constant_term().is_zero() {
            return Err(Error::inconsistent(format!(
                "I_{{{0},{0}}} has vanishing constant term",
                p - 1
            )));
        }
        let row: Vec<LogSeries> = rows[p - 1][1..]
            .par_iter()
            .map(|entry| entry.div_series(prev).map(|x| x.dt()))
            .collect::<Result<_>>()?;
        let diag = row[0]
            .clone()
            .into_t_free()
            .ok_or_else(|| Error::inconsistent(format!("I_{{{p},{p}}} retains t-dependence")))?;
        if !diag.constant_term().is_one() {
            return Err(Error::inconsistent(format!(
                "I_{{{p},{p}}} has constant term {} instead of 1",
                diag.constant_term()
            )));
        }
        rows.push(row);
        diagonal.push(diag);
    }
    Ok(HypergeomTable {
        n,
        order,
        f,
        rows,
        diagonal,
    })
}

/// Applies the Picard–Fuchs operator in the `t` coordinate.
///
/// The result is reported to order `x.order() - 1`: the factor `z` shifts
/// the series up by one degree, and that top degree is not trusted.
pub fn pf_apply(n: usize, x: &LogSeries) -> Result<LogSeries> {
    crate::check_n(n)?;
    let order = x.order();
    if order < 1 {
        return Err(Error::pre("the Picard-Fuchs operator needs input of order >= 1"));
    }
    let mut principal = x.clone();
    for _ in 0..n {
        principal = principal.dt();
    }
    let mut tail = x.clone();
    for j in 1..=n {
        let shift = BigRational::new(BigInt::from(j), BigInt::from(n + 1));
        tail = tail.dt().add(&tail.scale(&shift))?;
    }
    let z_factor = BigRational::from_integer(num::pow(BigInt::from(n + 1), n + 1));
    let tail = tail.shift(1).scale(&z_factor);
    Ok(principal.sub(&tail)?.truncate(order - 1))
}

/// Outcome of comparing `prod_p I_{p,p}` against `(1 - (n+1)^{n+1} Q)^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductProbe {
    pub n: usize,
    pub order: usize,
    /// First degree at which the two sides differ, if any.
    pub first_mismatch: Option<usize>,
}

impl ProductProbe {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Empirical probe of the product relation among the diagonal series. The
/// relation is recorded, never assumed by the rest of the crate.
pub fn product_probe(table: &HypergeomTable) -> ProductProbe {
    let order = table.order();
    let prod = table
        .diagonals()
        .iter()
        .fold(RationalSeries::one(Var::Q, order), |acc, s| acc.mul(s).expect("series in Q"));
    let conifold = conifold_factor(table.n(), order);
    let lhs = prod.mul(&conifold).expect("series in Q");
    let diff = lhs.sub(&RationalSeries::one(Var::Q, order)).expect("series in Q");
    ProductProbe {
        n: table.n(),
        order,
        first_mismatch: diff.first_nonzero_degree(),
    }
}

/// `1 - (n+1)^{n+1} Q`, the discriminant factor in the `Q` coordinate.
pub fn conifold_factor(n: usize, order: usize) -> RationalSeries {
    let c = BigRational::from_integer(num::pow(BigInt::from(n + 1), n + 1));
    RationalSeries::one(Var::Q, order)
        .sub(&RationalSeries::monomial(Var::Q, order, c, 1))
        .expect("series in Q")
}
