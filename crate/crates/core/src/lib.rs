//! Exact genus-one mirror symmetry for Calabi–Yau hypersurfaces of degree
//! `n + 1` in `P^n`.
//!
//! The crate builds, in exact rational arithmetic, the hypergeometric period
//! series of the mirror family, the mirror map, the genus-one generating
//! function `F_1^A` and its Gromov–Witten invariants `N_1(d)`, together with
//! the closed-form topological and asymptotic constants of the family. A
//! numeric layer evaluates periods, `F_1^B(psi)` and a Γ-value product at
//! arbitrary precision.
//!
//! ```
//! use genus_one::{gw, mirror_map, picard_fuchs};
//!
//! let table = picard_fuchs::build_tower(4, 3).unwrap();
//! let map = mirror_map::mirror_map(&table).unwrap();
//! let report = gw::extract_gw1(&table, &map).unwrap();
//! assert_eq!(report.n1[0], genus_one::rat(2875, 12));
//! ```
//!
//! Modules, bottom-up:
//!
//! - [`series`]: truncated rational power series and log-graded series.
//! - [`picard_fuchs`]: the solution tower `I_{p,q}` and the Picard–Fuchs operator.
//! - [`mirror_map`]: `T = I_{0,1}/I_{0,0}` and the coordinate changes `Q <-> q`.
//! - [`gw`]: genus-one (and, for the quintic, genus-zero) invariants.
//! - [`topology`]: Hodge numbers, Euler characteristics, Chern integrals,
//!   asymptotic constants.
//! - [`numeric`]: arbitrary-precision evaluation.
//! - [`cli`] and [`acceptance`]: the command-line front end and its self test.

pub mod acceptance;
pub mod cli;
pub mod error;
pub mod gw;
pub mod mirror_map;
pub mod numeric;
pub mod picard_fuchs;
pub mod series;
pub mod topology;

use num::{BigInt, BigRational};

pub use error::{Error, Result, Var};
pub use series::{LogSeries, RationalSeries};

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Smallest dimension parameter supported throughout (`n >= 4`, so the
/// hypersurface is at least a threefold).
pub const MIN_N: usize = 4;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n < MIN_N {
        return Err(Error::pre(format!("n must be at least {MIN_N}, got {n}")));
    }
    Ok(())
}
