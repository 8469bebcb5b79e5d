//! Truncated power series over arbitrary-precision rationals.
//!
//! A [`RationalSeries`] stores the coefficients of degrees `0..=order` of a
//! series in one named variable. Binary operations require equal variables
//! and truncate to the smaller of the two orders, so a result never claims
//! more precision than its inputs.
//!
//! [`LogSeries`] extends this to polynomials in the log coordinate `t`
//! (with `Q = e^t`) whose coefficients are rational series.

mod log_series;
mod transcendental;

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

pub use log_series::LogSeries;

use crate::error::{Error, Result, Var};

/// `c_0 + c_1 x + ... + c_D x^D + O(x^{D+1})` with exact rational `c_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    var: Var,
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn zero(var: Var, order: usize) -> Self {
        Self {
            var,
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::constant(var, order, BigRational::one())
    }

    pub fn constant(var: Var, order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    /// `c * var^k`, dropped entirely if `k > order`.
    pub fn monomial(var: Var, order: usize, c: BigRational, k: usize) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity series `var + O(var^{order+1})`.
    pub fn identity(var: Var, order: usize) -> Self {
        Self::monomial(var, order, BigRational::one(), 1)
    }

    /// Builds a series from its coefficient list; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty list, which has no meaningful order.
    pub fn from_coeffs(var: Var, coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        Self { var, coeffs }
    }

    pub fn from_integers(var: Var, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            var,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Highest degree whose coefficient is known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `var^d`. Panics if `d` lies beyond the truncation order.
    pub fn coeff(&self, d: usize) -> &BigRational {
        assert!(
            d <= self.order(),
            "coefficient of {}^{} requested from a series known to order {}",
            self.var,
            d,
            self.order()
        );
        &self.coeffs[d]
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn first_nonzero_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Relabels the variable without touching the coefficients.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// Truncates to `min(order, self.order())`.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self {
            var: self.var,
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var, other.var));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|d| &self.coeffs[d] + &other.coeffs[d]).collect();
        Ok(Self { var: self.var, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|d| &self.coeffs[d] - &other.coeffs[d]).collect();
        Ok(Self { var: self.var, coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self { var: self.var, coeffs })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Multiplies by `var^k`, keeping the order (top `k` coefficients fall off).
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.var, self.order());
        for d in k..=self.order() {
            s.coeffs[d] = self.coeffs[d - k].clone();
        }
        s
    }

    /// The Euler operator `var * d/dvar`, i.e. `d/dt` when `var = e^t`.
    pub fn theta(&self) -> Self {
        Self {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| c * BigInt::from(d))
                .collect(),
        }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var, self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same variable");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same variable");
            }
        }
        acc
    }

    /// Largest |numerator| and |denominator| bit lengths, for diagnostics.
    pub fn height_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        write!(f, "{}", self.var)?;
                    } else {
                        write!(f, "{}^{}", self.var, d)?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn q(coeffs: &[i64]) -> RationalSeries {
        RationalSeries::from_integers(Var::Q, coeffs)
    }

    #[test]
    fn difference_of_squares() {
        let a = q(&[1, 1, 0, 0]);
        let b = q(&[1, -1, 0, 0]);
        assert_eq!(a.mul(&b).unwrap(), q(&[1, 0, -1, 0]));
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let a = q(&[3, -7, 11, 2]);
        assert_eq!(a.mul(&RationalSeries::one(Var::Q, 3)).unwrap(), a);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = q(&[1, 2, 3, 4, 5]);
        let b = q(&[1, 1]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.order(), 1);
        assert_eq!(p, q(&[1, 3]));
        assert_eq!(a.add(&b).unwrap().order(), 1);
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = q(&[1, 1]);
        let b = RationalSeries::from_integers(Var::SMALL_Q, &[1, 1]);
        assert_eq!(a.add(&b), Err(Error::VariableMismatch(Var::Q, Var::SMALL_Q)));
        assert!(a.mul(&b).is_err());
        assert!(a.sub(&b).is_err());
    }

    #[test]
    fn theta_multiplies_by_degree() {
        let a = q(&[5, 1, 1, 1]);
        assert_eq!(a.theta(), q(&[0, 1, 2, 3]));
    }

    #[test]
    fn shift_and_pow() {
        let a = q(&[1, 1, 0, 0, 0]);
        assert_eq!(a.shift(2), q(&[0, 0, 1, 1, 0]));
        assert_eq!(a.pow(3), q(&[1, 3, 3, 1, 0]));
        assert_eq!(a.pow(0), RationalSeries::one(Var::Q, 4));
    }

    #[test]
    fn display_is_readable() {
        let a = RationalSeries::from_coeffs(Var::Q, vec![rat(1, 1), rat(-1, 2), rat(0, 1), rat(3, 1)]);
        assert_eq!(a.to_string(), "1 - 1/2*Q + 3*Q^3 + O(Q^4)");
        assert_eq!(RationalSeries::zero(Var::Q, 2).to_string(), "0 + O(Q^3)");
    }

    #[test]
    #[should_panic]
    fn coefficient_beyond_order_panics() {
        q(&[1, 2]).coeff(2);
    }
}
