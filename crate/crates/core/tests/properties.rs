//! Property tests for the exact-algebra layer and the bracket extension.

use std::collections::BTreeMap;

use proptest::prelude::*;

use hnlab_core::exactalg::{projector_onto, rat, Poly, RatMatrix, Rational, VarSet};
use hnlab_core::liealg::{catalog, Vector};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Polynomials over {a, b} with small exponents and a handful of terms.
fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..=2, 0u32..=2), -5i64..=5), 0..4).prop_map(|terms| {
        let vars = VarSet::ab();
        let mut acc = Poly::zero(&vars);
        for ((ea, eb), c) in terms {
            acc = &acc + &Poly::monomial(&vars, &[ea, eb], rat(c, 1));
        }
        acc
    })
}

fn assignment() -> impl Strategy<Value = BTreeMap<String, Rational>> {
    (small_rational(), small_rational()).prop_map(|(a, b)| {
        [("a".to_string(), a), ("b".to_string(), b)].into()
    })
}

proptest! {
    #[test]
    fn poly_ring_laws(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn poly_eval_is_a_ring_homomorphism(
        p in small_poly(),
        q in small_poly(),
        asgn in assignment(),
    ) {
        let sum = (&p + &q).eval(&asgn).unwrap();
        prop_assert_eq!(sum, p.eval(&asgn).unwrap() + q.eval(&asgn).unwrap());
        let prod = (&p * &q).eval(&asgn).unwrap();
        prop_assert_eq!(prod, p.eval(&asgn).unwrap() * q.eval(&asgn).unwrap());
    }

    #[test]
    fn poly_display_parse_round_trip(p in small_poly()) {
        let back = Poly::parse(&VarSet::ab(), &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn nullspace_vectors_annihilate(
        entries in prop::collection::vec(small_rational(), 12)
    ) {
        let m = RatMatrix::from_fn(3, 4, |i, j| entries[i * 4 + j].clone());
        let kernel = m.nullspace();
        // rank-nullity
        prop_assert_eq!(m.rank() + kernel.len(), 4);
        for k in &kernel {
            let image = m.mul_vec(k);
            prop_assert!(image.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn projector_is_idempotent(
        s in prop::collection::vec(small_rational(), 3),
        k in prop::collection::vec(small_rational(), 3),
    ) {
        let stacked = RatMatrix::from_rows(vec![s.clone(), k.clone()]);
        prop_assume!(stacked.rank() == 2);
        let p = projector_onto(&[s.clone()], &[k.clone()]).unwrap();
        prop_assert_eq!(p.mul(&p), p.clone());
        prop_assert_eq!(p.mul_vec(&s), s);
        prop_assert!(p.mul_vec(&k).iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(
        xs in prop::collection::vec(small_poly(), 4),
        ys in prop::collection::vec(small_poly(), 4),
        zs in prop::collection::vec(small_poly(), 4),
        scalar in small_poly(),
    ) {
        let alg = catalog::g4_5();
        let x = Vector([xs[0].clone(), xs[1].clone(), xs[2].clone(), xs[3].clone()]);
        let y = Vector([ys[0].clone(), ys[1].clone(), ys[2].clone(), ys[3].clone()]);
        let z = Vector([zs[0].clone(), zs[1].clone(), zs[2].clone(), zs[3].clone()]);

        // [x, y] = -[y, x]
        let xy = alg.bracket(&x, &y);
        let yx = alg.bracket(&y, &x);
        let sum = xy.add(&yx);
        prop_assert!(sum.is_zero());

        // [x + z, y] = [x, y] + [z, y]
        let left = alg.bracket(&x.add(&z), &y);
        let right = alg.bracket(&x, &y).add(&alg.bracket(&z, &y));
        prop_assert_eq!(left, right);

        // [c x, y] = c [x, y]
        let scaled = alg.bracket(&x.scale(&scalar), &y);
        let expect = alg.bracket(&x, &y).scale(&scalar);
        prop_assert_eq!(scaled, expect);
    }
}
