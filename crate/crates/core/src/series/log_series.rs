use std::fmt;

use num::{BigInt, BigRational, One};

use super::RationalSeries;
use crate::error::{Error, Result, Var};

/// `sum_j t^j A_j(Q)`: a polynomial in the log coordinate `t` with
/// truncated-series coefficients, where `Q = e^t`.
///
/// Parts are stored raw (no `1/j!` normalisation). All parts share the same
/// variable and order, and trailing zero parts are dropped so that
/// [`LogSeries::tdeg`] is the index of the highest non-zero part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSeries {
    parts: Vec<RationalSeries>,
}

impl LogSeries {
    pub fn from_parts(parts: Vec<RationalSeries>) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::pre("a log series needs at least one part"))?;
        let (var, order) = (first.var(), first.order());
        for p in &parts {
            if p.var() != var {
                return Err(Error::VariableMismatch(var, p.var()));
            }
            if p.order() != order {
                return Err(Error::pre("all parts of a log series must share one order"));
            }
        }
        Ok(Self::normalized(parts))
    }

    fn normalized(mut parts: Vec<RationalSeries>) -> Self {
        while parts.len() > 1 && parts.last().is_some_and(RationalSeries::is_zero) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn from_series(s: RationalSeries) -> Self {
        Self { parts: vec![s] }
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::from_series(RationalSeries::zero(var, order))
    }

    /// The coordinate `t` itself.
    pub fn t(var: Var, order: usize) -> Self {
        Self::normalized(vec![RationalSeries::zero(var, order), RationalSeries::one(var, order)])
    }

    pub fn var(&self) -> Var {
        self.parts[0].var()
    }

    pub fn order(&self) -> usize {
        self.parts[0].order()
    }

    /// Degree in `t` (0 for a `t`-free value, including zero).
    pub fn tdeg(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn parts(&self) -> &[RationalSeries] {
        &self.parts
    }

    /// Coefficient of `t^j`, zero above `tdeg`.
    pub fn part(&self, j: usize) -> RationalSeries {
        self.parts
            .get(j)
            .cloned()
            .unwrap_or_else(|| RationalSeries::zero(self.var(), self.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.tdeg() == 0 && self.parts[0].is_zero()
    }

    pub fn is_t_free(&self) -> bool {
        self.tdeg() == 0
    }

    /// The `t^0` part if nothing else is present.
    pub fn into_t_free(self) -> Option<RationalSeries> {
        if self.is_t_free() {
            self.parts.into_iter().next()
        } else {
            None
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::normalized(self.parts.iter().map(|p| p.truncate(order)).collect())
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&RationalSeries, &RationalSeries) -> Result<RationalSeries>,
    ) -> Result<Self> {
        if self.var() != other.var() {
            return Err(Error::VariableMismatch(self.var(), other.var()));
        }
        let len = self.parts.len().max(other.parts.len());
        let parts = (0..len)
            .map(|j| f(&self.part(j), &other.part(j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normalized(parts))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, RationalSeries::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, RationalSeries::sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.var() != other.var() {
            return Err(Error::VariableMismatch(self.var(), other.var()));
        }
        let order = self.order().min(other.order());
        let mut parts = vec![RationalSeries::zero(self.var(), order); self.tdeg() + other.tdeg() + 1];
        for (i, a) in self.parts.iter().enumerate() {
            for (j, b) in other.parts.iter().enumerate() {
                parts[i + j] = parts[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(Self::normalized(parts))
    }

    pub fn mul_series(&self, s: &RationalSeries) -> Result<Self> {
        let parts = self.parts.iter().map(|p| p.mul(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::normalized(parts))
    }

    /// Division by a `t`-free series with non-zero constant term.
    pub fn div_series(&self, s: &RationalSeries) -> Result<Self> {
        self.mul_series(&s.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::normalized(self.parts.iter().map(|p| p.scale(c)).collect())
    }

    /// Multiplies every part by `Q^k`.
    pub fn shift(&self, k: usize) -> Self {
        Self::normalized(self.parts.iter().map(|p| p.shift(k)).collect())
    }

    /// `d/dt`, acting as `d/dt` on the powers of `t` and as `Q d/dQ` on the parts.
    pub fn dt(&self) -> Self {
        let parts = (0..self.parts.len())
            .map(|j| {
                let own = self.parts[j].theta();
                match self.parts.get(j + 1) {
                    Some(next) => own
                        .add(&next.scale(&BigRational::from_integer(BigInt::from(j + 1))))
                        .expect("parts share a variable"),
                    None => own,
                }
            })
            .collect();
        Self::normalized(parts)
    }

    /// Evaluates `t` at the value `c`, giving a plain series.
    pub fn at_t(&self, c: &BigRational) -> RationalSeries {
        let mut acc = RationalSeries::zero(self.var(), self.order());
        let mut power = BigRational::one();
        for p in &self.parts {
            acc = acc.add(&p.scale(&power)).expect("parts share a variable");
            power *= c;
        }
        acc
    }
}

impl fmt::Display for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, p) in self.parts.iter().enumerate() {
            if p.is_zero() && (j > 0 || self.tdeg() > 0) {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            match j {
                0 => write!(f, "({p})")?,
                1 => write!(f, "t*({p})")?,
                _ => write!(f, "t^{j}*({p})")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
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
    fn derivative_of_t_is_one() {
        let t = LogSeries::t(Var::Q, 4);
        assert_eq!(t.dt(), LogSeries::from_series(RationalSeries::one(Var::Q, 4)));
    }

    #[test]
    fn derivative_of_monomial() {
        let x = LogSeries::from_series(q(&[0, 0, 0, 1, 0]));
        assert_eq!(x.dt(), LogSeries::from_series(q(&[0, 0, 0, 3, 0])));
    }

    #[test]
    fn derivative_product_rule_example() {
        // d/dt (t Q) = Q + t Q
        let x = LogSeries::from_parts(vec![q(&[0, 0, 0]), q(&[0, 1, 0])]).unwrap();
        let expected = LogSeries::from_parts(vec![q(&[0, 1, 0]), q(&[0, 1, 0])]).unwrap();
        assert_eq!(x.dt(), expected);
    }

    #[test]
    fn tdeg_drops_trailing_zero_parts() {
        let x = LogSeries::from_parts(vec![q(&[1, 2]), q(&[0, 0]), q(&[0, 0])]).unwrap();
        assert_eq!(x.tdeg(), 0);
        assert!(x.is_t_free());
        assert_eq!(LogSeries::zero(Var::Q, 3).tdeg(), 0);
    }

    #[test]
    fn parts_must_agree() {
        assert!(LogSeries::from_parts(vec![q(&[1, 2]), q(&[1])]).is_err());
        let other = RationalSeries::from_integers(Var::SMALL_Q, &[1, 2]);
        assert!(LogSeries::from_parts(vec![q(&[1, 2]), other]).is_err());
        assert!(LogSeries::from_parts(vec![]).is_err());
    }

    #[test]
    fn multiplication_in_t() {
        let t = LogSeries::t(Var::Q, 2);
        let tt = t.mul(&t).unwrap();
        assert_eq!(tt.tdeg(), 2);
        assert_eq!(tt.dt(), t.scale(&rat(2, 1)));
    }

    #[test]
    fn evaluation_at_t() {
        // t^2 (1 + Q) + Q at t = 3 gives 9 + 10 Q
        let x = LogSeries::from_parts(vec![q(&[0, 1]), q(&[0, 0]), q(&[1, 1])]).unwrap();
        assert_eq!(x.at_t(&rat(3, 1)), q(&[9, 10]));
    }
}
