use genus_one::numeric::{self, BigComplex};
use genus_one::{picard_fuchs, topology, LogSeries, RationalSeries, Var};
use num::{BigInt, BigRational, One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=12).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

/// A series of order `1..=7` whose first coefficients are `lead`.
fn series(lead: Vec<BigRational>) -> impl Strategy<Value = RationalSeries> {
    (1usize..=7).prop_flat_map(move |order| {
        let lead = lead.clone();
        prop::collection::vec(rational(), order + 1).prop_map(move |mut c| {
            for (slot, l) in c.iter_mut().zip(&lead) {
                *slot = l.clone();
            }
            RationalSeries::from_coeffs(Var::Q, c)
        })
    })
}

fn log_series() -> impl Strategy<Value = LogSeries> {
    (3usize..=6, 1usize..=3).prop_flat_map(|(order, parts)| {
        prop::collection::vec(prop::collection::vec(rational(), order + 1), parts).prop_map(|ps| {
            LogSeries::from_parts(ps.into_iter().map(|c| RationalSeries::from_coeffs(Var::Q, c)).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn log_inverts_exp(v in series(vec![BigRational::zero()])) {
        prop_assert_eq!(v.exp().unwrap().log().unwrap(), v);
    }

    #[test]
    fn exp_inverts_log(u in series(vec![BigRational::one()])) {
        prop_assert_eq!(u.log().unwrap().exp().unwrap(), u);
    }

    #[test]
    fn log_of_product(a in series(vec![BigRational::one()]), b in series(vec![BigRational::one()])) {
        let lhs = a.mul(&b).unwrap().log().unwrap();
        let rhs = a.log().unwrap().add(&b.log().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn revert_is_two_sided(f in series(vec![BigRational::zero(), BigRational::one()])) {
        let g = f.revert().unwrap();
        let id = RationalSeries::identity(Var::Q, f.order());
        prop_assert_eq!(f.compose(&g).unwrap(), id.clone());
        prop_assert_eq!(g.compose(&f).unwrap(), id);
    }

    #[test]
    fn inverse_is_reciprocal(u in series(vec![BigRational::one()])) {
        let one = RationalSeries::one(Var::Q, u.order());
        prop_assert_eq!(u.mul(&u.inv().unwrap()).unwrap(), one);
    }

    #[test]
    fn dt_is_a_derivation(a in log_series(), b in log_series()) {
        let lhs = a.mul(&b).unwrap().dt();
        let rhs = a.dt().mul(&b).unwrap().add(&a.mul(&b.dt()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_is_a_derivation(a in series(vec![]), b in series(vec![])) {
        let lhs = a.mul(&b).unwrap().theta();
        let rhs = a.theta().mul(&b).unwrap().add(&a.mul(&b.theta()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn serialized_rationals_round_trip(r in rational()) {
        let s = genus_one::cli::rational_json(&r);
        prop_assert_eq!(genus_one::cli::parse_rational(s.as_str().unwrap()).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hodge_diamond_symmetries(n in 4usize..=12) {
        let h = topology::hodge_numbers(n).unwrap();
        let m = n - 1;
        for p in 0..=m {
            for q in 0..=m {
                prop_assert_eq!(&h[&(p, q)], &h[&(q, p)]);
                prop_assert_eq!(&h[&(p, q)], &h[&(m - p, m - q)]);
            }
        }
        let (chi_x, chi_z) = topology::euler_chars(n).unwrap();
        let sign = if n % 2 == 0 { -1 } else { 1 };
        prop_assert_eq!(chi_z, chi_x * BigInt::from(sign));
    }

    #[test]
    fn diagonals_start_at_one(n in 4usize..=7, order in 1usize..=6) {
        let table = picard_fuchs::build_tower(n, order).unwrap();
        for d in table.diagonals() {
            prop_assert!(d.constant_term().is_one());
        }
    }

    #[test]
    fn period_invariant_under_roots_of_unity(r in 1.2f64..4.0, phase in 0f64..std::f64::consts::TAU, k in 1usize..5) {
        let z = num::complex::Complex64::from_polar(r, phase);
        let w = z * num::complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 5.0);
        let a = numeric::period_i0(4, &BigComplex::from_f64(z.re, z.im, 128), 64).unwrap();
        let b = numeric::period_i0(4, &BigComplex::from_f64(w.re, w.im, 128), 64).unwrap();
        prop_assert!((a.value.value.to_c64() - b.value.value.to_c64()).norm() < 1e-12);
    }
}
