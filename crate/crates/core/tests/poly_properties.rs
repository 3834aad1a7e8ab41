//! Property tests for the polynomial core: ring laws, the substitution
//! composition law, and basis-conversion inverses.

use gpl_core::polys::basis::{self, Basis};
use gpl_core::polys::{rat, MultiPoly};
use num::BigRational;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    // up to 4 terms in X, Y with exponents 0..4 and coefficients -5..5
    proptest::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 0..4).prop_map(|terms| {
        let mut acc = MultiPoly::zero();
        for ((ex, ey), c) in terms {
            acc = acc.add(&MultiPoly::monomial(
                &[("X", ex as i32), ("Y", ey as i32)],
                rat(c),
            ));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), MultiPoly::zero());
    }

    #[test]
    fn substitution_composition(
        p in small_poly(),
        q in small_poly(),
        xs in proptest::collection::vec((-6i64..=6, 1i64..=3), 10),
    ) {
        // (p[X := q]) evaluated at r equals p evaluated at (q(r)), both
        // sides sharing the Y assignment
        let composed = p.substitute("X", &q).unwrap();
        for (num, den) in xs {
            let mut point = BTreeMap::new();
            point.insert("X".to_string(), BigRational::new(num.into(), den.into()));
            point.insert("Y".to_string(), BigRational::new((num - 1).into(), den.into()));
            let qv = q.eval_rational(&point).unwrap();
            let mut inner = point.clone();
            inner.insert("X".to_string(), qv);
            let lhs = composed.eval_rational(&point).unwrap();
            let rhs = p.eval_rational(&inner).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn basis_conversions_invert(coeffs in proptest::collection::vec(-9i64..=9, 1..=9)) {
        // degree up to 8
        let p = MultiPoly::from_univariate_coeffs(
            "X",
            &coeffs.iter().map(|&c| rat(c)).collect::<Vec<_>>(),
        );
        for b in [Basis::Falling, Basis::Rising, Basis::Binomial] {
            let there = basis::convert(&p, Basis::Power, b).unwrap();
            let back = basis::convert(&there, b, Basis::Power).unwrap();
            prop_assert_eq!(&back, &p);
            // and through a second basis
            let via = basis::convert(&there, b, Basis::Binomial).unwrap();
            let home = basis::convert(&via, Basis::Binomial, Basis::Power).unwrap();
            prop_assert_eq!(&home, &p);
        }
    }
}
