//! Arbitrary-precision evaluation on top of `astro-float`.
//!
//! Every value is returned together with an error bound `err`, an absolute
//! tolerance on the complex (or real) result stored at low precision and
//! rounded upwards. Internal work runs at [`working_precision`] bits.
//!
//! A requested precision of `prec` bits is an absolute target: returned
//! values keep at least `prec` bits after the binary point, so doubling
//! `prec` moves a value by about `2^-prec` whatever its magnitude.

mod chowla;
mod f1b;
mod lngamma;
mod period;

use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num::complex::Complex64;
use num::{BigInt, BigRational, ToPrimitive};

use crate::error::{Error, Result};

pub use chowla::{chowla_selberg_log, reflection_check, ChowlaValue, ReflectionCheck};
pub use f1b::{f1b_eval, f1b_eval_form, F1bForm, F1bValue};
pub use lngamma::{bernoulli_numbers, ln_gamma};
pub use period::{period_i0, torus_quadrature, PeriodValue, Quadrature};

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;
/// Precision of error bounds.
pub(crate) const ERR_P: usize = 64;
/// Smallest accepted precision, that of an `f64`.
pub const MIN_PREC: usize = 53;

/// Guard bits added to a requested precision for intermediate work.
pub fn working_precision(prec: usize) -> usize {
    prec + 64
}

pub(crate) fn consts() -> Consts {
    Consts::new().expect("astro-float constant cache")
}

pub(crate) fn check_prec(prec: usize) -> Result<()> {
    if prec < MIN_PREC {
        return Err(Error::pre(format!("precision must be at least {MIN_PREC} bits, got {prec}")));
    }
    Ok(())
}

pub(crate) fn from_bigint(v: &BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    match v.to_i64() {
        Some(small) => BigFloat::from_i64(small, p),
        None => BigFloat::parse(&v.to_string(), Radix::Dec, p, RM, cc),
    }
}

pub(crate) fn from_rational(v: &BigRational, p: usize, cc: &mut Consts) -> BigFloat {
    from_bigint(v.numer(), p, cc).div(&from_bigint(v.denom(), p, cc), p, RM)
}

pub(crate) fn from_usize(v: usize, p: usize) -> BigFloat {
    BigFloat::from_u64(v as u64, p)
}

/// `2^e`.
pub(crate) fn pow2(e: i64, p: usize) -> BigFloat {
    let two = BigFloat::from_u8(2, p);
    let m = two.powi(e.unsigned_abs() as usize, p, RM);
    if e < 0 {
        m.reciprocal(p, RM)
    } else {
        m
    }
}

/// Rounds to `prec` bits after the binary point (and never fewer than `prec` bits in all).
pub(crate) fn round_abs(x: &BigFloat, prec: usize) -> BigFloat {
    let int_bits = x.exponent().map(|e| e.max(0) as usize).unwrap_or(0);
    let mut y = x.clone();
    y.set_precision(prec + int_bits, RM).expect("valid precision");
    y
}

pub(crate) fn lt(a: &BigFloat, b: &BigFloat) -> bool {
    a.cmp(b).map(|c| c < 0).unwrap_or(false)
}

/// Parses a decimal string at `p` bits.
pub fn parse_float(s: &str, p: usize) -> Result<BigFloat> {
    let mut cc = consts();
    let v = BigFloat::parse(s.trim(), Radix::Dec, p, RM, &mut cc);
    if v.is_nan() || v.is_inf() {
        return Err(Error::pre(format!("not a finite decimal number: {s:?}")));
    }
    Ok(v)
}

pub fn to_f64(v: &BigFloat) -> f64 {
    v.to_string().parse().unwrap_or(f64::NAN)
}

/// Sum of bounds, rounded up.
pub(crate) fn err_add(a: &BigFloat, b: &BigFloat) -> BigFloat {
    a.add(b, ERR_P, RoundingMode::Up)
}

pub(crate) fn err_mul(a: &BigFloat, b: &BigFloat) -> BigFloat {
    a.mul(b, ERR_P, RoundingMode::Up)
}

/// A complex number with `BigFloat` parts.
#[derive(Clone, Debug)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn zero(p: usize) -> Self {
        Self::new(BigFloat::from_u8(0, p), BigFloat::from_u8(0, p))
    }

    pub fn real(re: BigFloat, p: usize) -> Self {
        Self::new(re, BigFloat::from_u8(0, p))
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        Self::new(BigFloat::from_f64(re, p), BigFloat::from_f64(im, p))
    }

    /// Parses `"re,im"` or a bare real `"re"`.
    pub fn parse(s: &str, p: usize) -> Result<Self> {
        let mut parts = s.split(',');
        let re = parts.next().unwrap_or("");
        let im = parts.next();
        if parts.next().is_some() {
            return Err(Error::pre(format!("expected \"re,im\", got {s:?}")));
        }
        let re = parse_float(re, p)?;
        let im = match im {
            Some(im) => parse_float(im, p)?,
            None => BigFloat::from_u8(0, p),
        };
        Ok(Self::new(re, im))
    }

    pub fn add(&self, o: &Self, p: usize) -> Self {
        Self::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM))
    }

    pub fn sub(&self, o: &Self, p: usize) -> Self {
        Self::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM))
    }

    pub fn mul(&self, o: &Self, p: usize) -> Self {
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        Self::new(re, im)
    }

    pub fn scale(&self, c: &BigFloat, p: usize) -> Self {
        Self::new(self.re.mul(c, p, RM), self.im.mul(c, p, RM))
    }

    pub fn norm_sqr(&self, p: usize) -> BigFloat {
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self, p: usize) -> BigFloat {
        self.norm_sqr(p).sqrt(p, RM)
    }

    pub fn recip(&self, p: usize) -> Self {
        let d = self.norm_sqr(p);
        Self::new(self.re.div(&d, p, RM), self.im.neg().div(&d, p, RM))
    }

    pub fn div(&self, o: &Self, p: usize) -> Self {
        self.mul(&o.recip(p), p)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    pub fn powi(&self, k: usize, p: usize) -> Self {
        let mut acc = Self::real(BigFloat::from_u8(1, p), p);
        for _ in 0..k {
            acc = acc.mul(self, p);
        }
        acc
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self, p: usize, cc: &mut Consts) -> BigFloat {
        let pi = cc.pi(p, RM);
        if self.re.is_zero() {
            let half = pi.div(&BigFloat::from_u8(2, p), p, RM);
            return match self.im.cmp(&BigFloat::from_u8(0, p)) {
                Some(c) if c < 0 => half.neg(),
                Some(c) if c > 0 => half,
                _ => BigFloat::from_u8(0, p),
            };
        }
        let base = self.im.div(&self.re, p, RM).atan(p, RM, cc);
        if self.re.is_positive() {
            base
        } else if self.im.is_negative() {
            base.sub(&pi, p, RM)
        } else {
            base.add(&pi, p, RM)
        }
    }

    /// Principal logarithm.
    pub fn ln(&self, p: usize, cc: &mut Consts) -> Self {
        let modulus = self.norm_sqr(p).ln(p, RM, cc).div(&BigFloat::from_u8(2, p), p, RM);
        Self::new(modulus, self.arg(p, cc))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    /// Both parts rounded with [`round_abs`].
    pub fn rounded(&self, prec: usize) -> Self {
        Self::new(round_abs(&self.re, prec), round_abs(&self.im, prec))
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

/// A real value with an absolute error bound.
#[derive(Clone, Debug)]
pub struct Approx {
    pub value: BigFloat,
    pub prec: usize,
    pub err: BigFloat,
}

impl Approx {
    /// Whether `|self - other| <= tol`.
    pub fn within(&self, other: &Self, tol: &BigFloat) -> bool {
        let p = self.prec.max(other.prec) + 64;
        let diff = self.value.sub(&other.value, p, RM).abs();
        diff.cmp(tol).is_some_and(|c| c.cmp(&0) != Ordering::Greater)
    }
}

/// A complex value with an absolute error bound on the complex modulus.
#[derive(Clone, Debug)]
pub struct ComplexApprox {
    pub value: BigComplex,
    pub prec: usize,
    pub err: BigFloat,
}

impl ComplexApprox {
    pub fn distance(&self, other: &Self) -> BigFloat {
        let p = self.prec.max(other.prec) + 64;
        self.value.sub(&other.value, p).abs(ERR_P)
    }
}
