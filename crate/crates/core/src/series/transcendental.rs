//! Inverse, logarithm, exponential, composition and reversion.

use num::{BigInt, BigRational, One, Zero};

use super::RationalSeries;
use crate::error::{Error, Result};

impl RationalSeries {
    /// Multiplicative inverse; requires a non-zero constant term.
    pub fn inv(&self) -> Result<Self> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::pre(format!(
                "cannot invert a series in {} with zero constant term",
                self.var
            )));
        }
        let a0_inv = a0.recip();
        let mut b = Vec::with_capacity(self.coeffs.len());
        b.push(a0_inv.clone());
        for d in 1..=self.order() {
            let mut acc = BigRational::zero();
            for k in 1..=d {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &b[d - k];
                }
            }
            b.push(-acc * &a0_inv);
        }
        Ok(Self::from_coeffs(self.var, b))
    }

    /// `self / other`, i.e. `self * other^{-1}`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::pre(format!(
                "log needs constant term 1, got {}",
                self.constant_term()
            )));
        }
        // theta(log u) = theta(u) / u
        let dlog = self.theta().mul(&self.inv()?)?;
        let coeffs = dlog
            .coeffs
            .into_iter()
            .enumerate()
            .map(|(d, c)| if d == 0 { BigRational::zero() } else { c / BigInt::from(d) })
            .collect();
        Ok(Self::from_coeffs(self.var, coeffs))
    }

    /// Formal exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::pre(format!(
                "exp needs constant term 0, got {}",
                self.constant_term()
            )));
        }
        let mut e = Vec::with_capacity(self.coeffs.len());
        e.push(BigRational::one());
        for d in 1..=self.order() {
            let mut acc = BigRational::zero();
            for k in 1..=d {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &e[d - k] * BigInt::from(k);
                }
            }
            e.push(acc / BigInt::from(d));
        }
        Ok(Self::from_coeffs(self.var, e))
    }

    /// `self(inner(x))`. The inner series must have zero constant term; the
    /// result is a series in the inner variable.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.constant_term().is_zero() {
            return Err(Error::pre("composition needs an inner series with zero constant term"));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(inner.var, order, self.coeffs[order].clone());
        for d in (0..order).rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] += &self.coeffs[d];
        }
        Ok(acc)
    }

    /// Compositional inverse of `x + s_2 x^2 + ...`, computed by Lagrange
    /// inversion: `[x^d] r = (1/d) [x^{d-1}] (x / s(x))^d`.
    pub fn revert(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::pre("reversion needs zero constant term"));
        }
        let order = self.order();
        if order == 0 {
            return Ok(Self::zero(self.var, 0));
        }
        if !self.coeffs[1].is_one() {
            return Err(Error::pre(format!(
                "reversion needs unit linear coefficient, got {}",
                self.coeffs[1]
            )));
        }
        // s / x, known to order D - 1
        let quotient = Self::from_coeffs(self.var, self.coeffs[1..].to_vec());
        let h = quotient.inv()?;
        let mut out = vec![BigRational::zero(); order + 1];
        let mut h_pow = h.clone();
        for (d, slot) in out.iter_mut().enumerate().skip(1) {
            *slot = h_pow.coeffs[d - 1].clone() / BigInt::from(d);
            if d < order {
                h_pow = h_pow.mul(&h)?;
            }
        }
        Ok(Self::from_coeffs(self.var, out))
    }
}
