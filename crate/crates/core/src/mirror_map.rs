//! The mirror map `T = I_{0,1}/I_{0,0} = t + G(Q)` and the coordinate
//! changes between `Q = e^t` and `q = e^T`.
//!
//! Normalisation: `T` carries no factor of `2 pi i`. The more common
//! convention for the mirror map differs from this one by exactly that
//! factor; only this one is offered.

use num::Zero;

use crate::error::{Error, Result, Var};
use crate::picard_fuchs::HypergeomTable;
use crate::series::{LogSeries, RationalSeries};

#[derive(Clone, Debug)]
pub struct MirrorMap {
    pub n: usize,
    pub order: usize,
    /// `G = T - t`, a series in `Q` with zero constant term.
    pub g: RationalSeries,
    /// `q = Q e^{G(Q)}`.
    pub q_of_big_q: RationalSeries,
    /// The compositional inverse `Q(q)`, a series in `q`.
    pub big_q_of_q: RationalSeries,
}

pub fn mirror_map(table: &HypergeomTable) -> Result<MirrorMap> {
    let order = table.order();
    let i00 = table.diagonal(0);
    let i01 = table.entry(0, 1).expect("n >= 4 gives I_{0,1}");
    let shifted = i01.div_series(i00)?.sub(&LogSeries::t(Var::Q, order))?;
    let g = shifted
        .into_t_free()
        .ok_or_else(|| Error::inconsistent("I_{0,1}/I_{0,0} - t depends on t"))?;
    if !g.constant_term().is_zero() {
        return Err(Error::inconsistent("G has a non-zero constant term"));
    }
    let q_of_big_q = g.exp()?.shift(1);
    let big_q_of_q = q_of_big_q.revert()?.with_var(Var::SMALL_Q);
    Ok(MirrorMap {
        n: table.n(),
        order,
        g,
        q_of_big_q,
        big_q_of_q,
    })
}

/// `dT/dt`, which the recursion identifies with `I_{1,1}`. Checked against
/// `1 + Q dG/dQ` before returning.
pub fn jacobian(table: &HypergeomTable) -> Result<RationalSeries> {
    let map = mirror_map(table)?;
    let i11 = table.diagonal(1).clone();
    let chain = RationalSeries::one(Var::Q, table.order()).add(&map.g.theta())?;
    if chain != i11 {
        return Err(Error::inconsistent("I_{1,1} differs from 1 + dG/dt"));
    }
    Ok(i11)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard_fuchs::build_tower;
    use crate::rat;

    #[test]
    fn quintic_mirror_map_low_orders() {
        let table = build_tower(4, 3).unwrap();
        let map = mirror_map(&table).unwrap();
        assert_eq!(map.g.constant_term(), &rat(0, 1));
        assert_eq!(map.g.coeff(1), &rat(770, 1));
        // Q exp(770 Q + ...) = Q + 770 Q^2 + ...
        assert_eq!(map.q_of_big_q.coeff(0), &rat(0, 1));
        assert_eq!(map.q_of_big_q.coeff(1), &rat(1, 1));
        assert_eq!(map.q_of_big_q.coeff(2), &rat(770, 1));
        assert_eq!(map.big_q_of_q.var(), Var::SMALL_Q);
    }

    #[test]
    fn coordinate_changes_invert_each_other() {
        for n in 4..=6 {
            let table = build_tower(n, 8).unwrap();
            let map = mirror_map(&table).unwrap();
            let forward = map.q_of_big_q.compose(&map.big_q_of_q).unwrap();
            assert_eq!(forward, RationalSeries::identity(Var::SMALL_Q, 8));
            let back = map.big_q_of_q.compose(&map.q_of_big_q).unwrap();
            assert_eq!(back, RationalSeries::identity(Var::Q, 8));
        }
    }

    #[test]
    fn jacobian_is_first_diagonal() {
        let table = build_tower(4, 5).unwrap();
        let j = jacobian(&table).unwrap();
        assert_eq!(j.constant_term(), &rat(1, 1));
        assert_eq!(j.coeff(1), &rat(770, 1));
    }
}
