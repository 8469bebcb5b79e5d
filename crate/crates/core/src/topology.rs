//! Closed-form topological and asymptotic constants.
//!
//! Conventions: `n >= 4`, `X` is a smooth degree-`n+1` hypersurface in `P^n`
//! (dimension `n-1`), and `Z` is a smooth fiber of the mirror family.
//!
//! The exponent `b` of the discriminant factor is displayed in one place as
//! `(-1)^n n(3n-5)/24`, while the derivation of the same constant gives the
//! opposite sign. [`abc_constants`] does not pick a transcription; it keeps
//! the sign for which `(n+1)(b-a)` reproduces the closed form of `kappa_inf`
//! and records whether that sign agrees with the displayed one.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result, Var};
use crate::series::RationalSeries;

pub(crate) fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn big(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Hodge numbers `h^{p,q}` of the mirror fiber, `0 <= p, q <= n-1`.
pub fn hodge_numbers(n: usize) -> Result<BTreeMap<(usize, usize), BigInt>> {
    crate::check_n(n)?;
    let mut table = BTreeMap::new();
    let (ni, m) = (n as i64, n - 1);
    for p in 0..=m {
        for q in 0..=m {
            let h = if p == q {
                let pi = p as i64;
                let mut acc = BigInt::zero();
                for j in 0..=pi {
                    let term = binomial(ni + 1, j) * binomial((pi + 1 - j) * ni + pi, ni);
                    acc += term * sign(j as usize);
                }
                if 2 * p == m {
                    acc += 1;
                }
                acc
            } else if p + q == m {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            table.insert((p, q), h);
        }
    }
    Ok(table)
}

/// Betti numbers `b_0 .. b_{2(n-1)}` of the mirror fiber.
pub fn betti_numbers(n: usize) -> Result<Vec<BigInt>> {
    let hodge = hodge_numbers(n)?;
    let mut betti = vec![BigInt::zero(); 2 * (n - 1) + 1];
    for ((p, q), h) in &hodge {
        betti[p + q] += h;
    }
    Ok(betti)
}

fn chi_x_closed_form(n: usize) -> BigInt {
    let ni = BigInt::from(n);
    let top = num::pow(-ni, n + 1) - 1;
    top / BigInt::from(n + 1) + BigInt::from(n + 1)
}

/// `(chi(X_{n+1}), chi(Z))`, cross-checked against the Betti numbers.
pub fn euler_chars(n: usize) -> Result<(BigInt, BigInt)> {
    crate::check_n(n)?;
    let chi_x = chi_x_closed_form(n);
    let chi_z = &chi_x * sign(n - 1);
    let betti = betti_numbers(n)?;
    let alternating: BigInt = betti.iter().enumerate().map(|(k, b)| b * sign(k)).sum();
    if alternating != chi_z {
        return Err(Error::inconsistent(format!(
            "chi(Z) = {chi_z} but the alternating Betti sum is {alternating}"
        )));
    }
    Ok((chi_x, chi_z))
}

/// Total Chern class `c(T_X) = (1+H)^{n+1} / (1+(n+1)H)` modulo `H^n`.
pub fn chern_class(n: usize) -> Result<RationalSeries> {
    crate::check_n(n)?;
    let order = n - 1;
    let one_plus_h = RationalSeries::from_integers(Var::H, &[1, 1]);
    let one_plus_h = RationalSeries::from_coeffs(Var::H, {
        let mut c = one_plus_h.coeffs().to_vec();
        c.resize(order + 1, BigRational::zero());
        c
    });
    let normal = RationalSeries::constant(Var::H, order, BigRational::one()).add(&RationalSeries::monomial(
        Var::H,
        order,
        big(n as i64 + 1),
        1,
    ))?;
    one_plus_h.pow(n + 1).div(&normal)
}

fn integrate_h_power(n: usize, c: &BigRational) -> BigRational {
    // deg X = n + 1
    c * BigInt::from(n + 1)
}

/// `int_X c_{n-2}(X) . H`, checked against the cotangent-sequence route
/// `int c_{n-2}(Omega_X) H = (-1)^{n-1} chi / (n+1) - int_{P^n} c_{n-1}(Omega_P) H`
/// and against `chi(X) = int_X c_{n-1}(X)`.
pub fn chern_h_integral(n: usize) -> Result<BigInt> {
    let c = chern_class(n)?;
    let (chi_x, _) = euler_chars(n)?;
    let via_chern = integrate_h_power(n, c.coeff(n - 2));
    let chi_via_chern = integrate_h_power(n, c.coeff(n - 1));
    if chi_via_chern != BigRational::from_integer(chi_x.clone()) {
        return Err(Error::inconsistent(format!(
            "chi(X) = {chi_x} but int c_{{n-1}} = {chi_via_chern}"
        )));
    }
    // c(Omega_P) = (1 - H)^{n+1}, so c_{n-1}(Omega_P) = (-1)^{n-1} C(n+1, n-1) H^{n-1}
    let ambient = BigRational::from_integer(binomial(n as i64 + 1, n as i64 - 1) * sign(n - 1));
    let cotangent = BigRational::from_integer(chi_x) * big(sign(n - 1)) / big(n as i64 + 1) - ambient;
    // c_{n-2}(T_X) = (-1)^{n-2} c_{n-2}(Omega_X)
    let via_cotangent = cotangent * big(sign(n - 2));
    if via_cotangent != via_chern {
        return Err(Error::inconsistent(format!(
            "int c_{{n-2}} H: {via_chern} from c(T_X), {via_cotangent} from the cotangent sequence"
        )));
    }
    if !via_chern.is_integer() {
        return Err(Error::inconsistent("int c_{n-2} H is not an integer"));
    }
    Ok(via_chern.to_integer())
}

/// Closed form of `kappa_inf`.
fn kappa_closed_form(n: usize) -> BigRational {
    let ni = n as i64;
    let n1 = big(ni + 1);
    let inner = big((ni - 1) * (ni + 2)) / big(2)
        + BigRational::from_integer(BigInt::one() - num::pow(BigInt::from(-ni), n + 1)) / (&n1 * &n1);
    big(sign(n)) * n1 / big(12) * inner
}

/// Closed form of `rho_inf`.
fn rho_closed_form(n: usize) -> BigRational {
    let ni = n as i64;
    let n1 = big(ni + 1);
    let inner = BigRational::from_integer(num::pow(BigInt::from(-ni), n + 1) - 1) / (&n1 * &n1) - big(2 * ni) + big(1);
    big(sign(n - 1)) * big((ni - 1) * (ni + 1)) / big(12) * inner
}

/// The exponents `a`, `b`, `c` of the rational part of the BCOV formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcConstants {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    /// Whether the resolved `b` equals the displayed `(-1)^n n(3n-5)/24`.
    pub b_matches_displayed_sign: bool,
}

pub fn abc_constants(n: usize) -> Result<AbcConstants> {
    let (_, chi_z) = euler_chars(n)?;
    let ni = n as i64;
    let a = big(sign(n - 1) * ni * (ni - 1)) / big(6) - BigRational::from_integer(chi_z) / big(12 * (ni + 1));
    let magnitude = big(ni * (3 * ni - 5)) / big(24);
    let displayed = &magnitude * big(sign(n));
    let kappa = kappa_closed_form(n);
    let candidates = [displayed.clone(), -displayed.clone()];
    let fits: Vec<&BigRational> =
        candidates.iter().filter(|b| (*b - &a) * big(ni + 1) == kappa).collect();
    let b = match fits.as_slice() {
        [b] => (*b).clone(),
        [] => {
            return Err(Error::inconsistent(format!(
                "no sign of b = ±{magnitude} gives (n+1)(b-a) = kappa_inf = {kappa}"
            )))
        }
        _ => return Err(Error::inconsistent("both signs of b satisfy the kappa identity")),
    };
    let betti = betti_numbers(n)?;
    let weighted: BigInt = betti
        .iter()
        .enumerate()
        .map(|(k, bk)| bk * BigInt::from(k * k) * sign(k + 1))
        .sum();
    let c = BigRational::new(weighted, BigInt::from(2));
    Ok(AbcConstants {
        b_matches_displayed_sign: b == displayed,
        a,
        b,
        c,
    })
}

/// The three routes to `kappa_inf`: the closed form, `(n+1)(b-a)` and
/// `(-1)^n (n+1)/12 * int c_{n-2} H`.
pub fn kappa_routes(n: usize) -> Result<[BigRational; 3]> {
    crate::check_n(n)?;
    let abc = abc_constants(n)?;
    let via_abc = (&abc.b - &abc.a) * big(n as i64 + 1);
    let via_chern = big(sign(n) * (n as i64 + 1)) / big(12) * BigRational::from_integer(chern_h_integral(n)?);
    Ok([kappa_closed_form(n), via_abc, via_chern])
}

/// `(kappa_inf, rho_inf)`, with `kappa_inf` confirmed by [`kappa_routes`].
pub fn kappa_rho(n: usize) -> Result<(BigRational, BigRational)> {
    let [kappa, via_abc, via_chern] = kappa_routes(n)?;
    if via_abc != kappa || via_chern != kappa {
        return Err(Error::inconsistent(format!(
            "kappa_inf routes disagree: closed form {kappa}, (n+1)(b-a) {via_abc}, Chern {via_chern}"
        )));
    }
    Ok((kappa, rho_closed_form(n)))
}

/// Order of zero or pole of `eta_k` at an ordinary double point.
pub fn eta_order_odp(n: usize, k: usize) -> Result<i32> {
    crate::check_n(n)?;
    if k >= n {
        return Err(Error::pre(format!("k must lie in 0..={}, got {k}", n - 1)));
    }
    let regular = if (n - 1) % 2 == 1 {
        // n even: k <= n/2 - 1
        k < n / 2
    } else {
        // n odd: k <= (n-3)/2
        k <= (n - 3) / 2
    };
    Ok(if regular { 0 } else { -1 })
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Exponent data of the Γ-value product for the fiber at `psi = 0`, with
/// `p = n + 1` prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowlaSelbergData {
    pub p: usize,
    pub chi_z: BigInt,
    /// Extra exponent `chi(Z_0)/12` on `Γ(1/p)`.
    pub chi_over_12: BigRational,
    /// `(k, p-k-1)` for `k = 1..p-1`.
    pub product_exponents: Vec<(usize, i64)>,
    /// The whole bracket is raised to this power (`2p`).
    pub outer_power: usize,
    /// Exponent of `1/pi`.
    pub sigma: BigRational,
}

impl ChowlaSelbergData {
    /// Total exponent of `Γ(k/p)` after expanding the outer power.
    pub fn total_exponent(&self, k: usize) -> BigRational {
        let mut e = self
            .product_exponents
            .iter()
            .find(|(j, _)| *j == k)
            .map(|(_, e)| big(*e))
            .unwrap_or_else(BigRational::zero);
        if k == 1 {
            e += &self.chi_over_12;
        }
        e * big(self.outer_power as i64)
    }
}

pub fn chowla_selberg_exponents(p: usize) -> Result<ChowlaSelbergData> {
    if p < 5 || !is_prime(p) {
        return Err(Error::pre(format!("p must be a prime >= 5, got {p}")));
    }
    let n = p - 1;
    let (_, chi_z) = euler_chars(n)?;
    let betti = betti_numbers(n)?;
    let chi_over_12 = BigRational::new(chi_z.clone(), BigInt::from(12));
    let pi = p as i64;
    let weighted: BigInt = betti
        .iter()
        .enumerate()
        .map(|(k, bk)| bk * BigInt::from(k * k) * sign(k))
        .sum();
    let sigma = big(pi) * (&chi_over_12 + big((pi - 1) * (pi - 2)) / big(2)) + BigRational::new(weighted, BigInt::from(2));
    Ok(ChowlaSelbergData {
        p,
        chi_z,
        chi_over_12,
        product_exponents: (1..p).map(|k| (k, pi - k as i64 - 1)).collect(),
        outer_power: 2 * p,
        sigma,
    })
}

/// Every closed-form constant for one value of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyReport {
    pub n: usize,
    pub hodge: BTreeMap<(usize, usize), BigInt>,
    pub betti: Vec<BigInt>,
    pub chi_x: BigInt,
    pub chi_z: BigInt,
    pub c_integral: BigInt,
    pub abc: AbcConstants,
    pub kappa_inf: BigRational,
    pub rho_inf: BigRational,
    /// Present when `n + 1` is a prime `>= 5`.
    pub sigma: Option<BigRational>,
}

pub fn topology_report(n: usize) -> Result<TopologyReport> {
    let hodge = hodge_numbers(n)?;
    let betti = betti_numbers(n)?;
    let (chi_x, chi_z) = euler_chars(n)?;
    let c_integral = chern_h_integral(n)?;
    let abc = abc_constants(n)?;
    let (kappa_inf, rho_inf) = kappa_rho(n)?;
    let sigma = if is_prime(n + 1) {
        Some(chowla_selberg_exponents(n + 1)?.sigma)
    } else {
        None
    };
    Ok(TopologyReport {
        n,
        hodge,
        betti,
        chi_x,
        chi_z,
        c_integral,
        abc,
        kappa_inf,
        rho_inf,
        sigma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn mirror_quintic_hodge_diamond() {
        let h = hodge_numbers(4).unwrap();
        assert_eq!(h[&(2, 1)], BigInt::from(1));
        assert_eq!(h[&(1, 1)], BigInt::from(101));
        assert_eq!(h[&(2, 2)], BigInt::from(101));
        assert_eq!(h[&(2, 0)], BigInt::from(0));
        assert_eq!(h[&(0, 0)], BigInt::from(1));
        assert_eq!(h[&(3, 3)], BigInt::from(1));
        assert_eq!(h[&(3, 0)], BigInt::from(1));
    }

    #[test]
    fn hodge_symmetries() {
        for n in 4..=10 {
            let h = hodge_numbers(n).unwrap();
            for (&(p, q), v) in &h {
                assert_eq!(&h[&(q, p)], v);
                assert_eq!(&h[&(n - 1 - p, n - 1 - q)], v);
            }
        }
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_chars(4).unwrap(), (BigInt::from(-200), BigInt::from(200)));
        assert_eq!(euler_chars(5).unwrap().0, BigInt::from(2610));
        for n in 4..=10 {
            let (chi_x, chi_z) = euler_chars(n).unwrap();
            assert_eq!(chi_z, chi_x * sign(n - 1));
        }
    }

    #[test]
    fn chern_integral_of_quintic() {
        let c = chern_class(4).unwrap();
        assert_eq!(c, RationalSeries::from_integers(Var::H, &[1, 0, 10, -40]));
        assert_eq!(chern_h_integral(4).unwrap(), BigInt::from(50));
    }

    #[test]
    fn abc_for_quintic() {
        let abc = abc_constants(4).unwrap();
        assert_eq!(abc.a, rat(-16, 3));
        assert_eq!(abc.b, rat(-7, 6));
        assert!(!abc.b_matches_displayed_sign);
        // -(4*101) + 9*4 - 16*101 - 36, halved
        assert_eq!(abc.c, rat(-1010, 1));
    }

    #[test]
    fn b_always_takes_the_derived_sign() {
        for n in 4..=10 {
            let abc = abc_constants(n).unwrap();
            let expected = rat(sign(n - 1) * (n as i64) * (3 * n as i64 - 5), 24);
            assert_eq!(abc.b, expected, "n={n}");
        }
    }

    #[test]
    fn kappa_and_rho_of_quintic() {
        assert_eq!(kappa_rho(4).unwrap(), (rat(125, 6), rat(60, 1)));
        assert_eq!(kappa_rho(5).unwrap().0, rat(210, 1));
    }

    #[test]
    fn odp_orders() {
        assert_eq!(eta_order_odp(4, 1).unwrap(), 0);
        assert_eq!(eta_order_odp(4, 2).unwrap(), -1);
        assert_eq!(eta_order_odp(5, 1).unwrap(), 0);
        assert_eq!(eta_order_odp(5, 2).unwrap(), -1);
        assert_eq!(eta_order_odp(5, 0).unwrap(), 0);
        assert!(eta_order_odp(4, 4).is_err());
    }

    #[test]
    fn chowla_selberg_for_p5() {
        let data = chowla_selberg_exponents(5).unwrap();
        assert_eq!(data.chi_over_12, rat(50, 3));
        assert_eq!(data.product_exponents[1], (2, 2));
        assert_eq!(data.outer_power, 10);
        // 5 (50/3 + 6) + 1010
        assert_eq!(data.sigma, rat(3370, 3));
        assert_eq!(data.total_exponent(1), (rat(50, 3) + rat(3, 1)) * rat(10, 1));
        assert_eq!(data.total_exponent(4), rat(0, 1));
    }

    #[test]
    fn chowla_selberg_needs_prime() {
        assert!(chowla_selberg_exponents(3).is_err());
        assert!(chowla_selberg_exponents(9).is_err());
        assert!(chowla_selberg_exponents(7).is_ok());
    }
}
