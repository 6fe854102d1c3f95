mod common;

use lie_jcd::linalg::{QMatrix, Rational};
use lie_jcd::{is_nilpotent_matrix, is_semisimple_matrix, matrix_jordan_chevalley};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn square() -> impl Strategy<Value = QMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(-2i64..=2, n * n)
            .prop_map(move |xs| QMatrix::from_vec(n, n, xs.into_iter().map(Rational::from).collect()).unwrap())
    })
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=5, 1i64..=4, any::<bool>()).prop_map(|(p, q, neg)| Rational::new(if neg { -p } else { p }, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn decomposition_invariants(a in square()) {
        let pair = matrix_jordan_chevalley(&a).unwrap();
        let (s, n) = (&pair.semisimple, &pair.nilpotent);
        prop_assert_eq!(&(s + n), &a);
        prop_assert!(s.commutator(n).is_zero());
        prop_assert!(is_semisimple_matrix(s).unwrap());
        prop_assert!(is_nilpotent_matrix(n).unwrap());
        prop_assert_eq!(&pair.witness_poly.eval_matrix(&a), s);
    }

    #[test]
    fn idempotence(a in square()) {
        let s = matrix_jordan_chevalley(&a).unwrap().semisimple;
        let again = matrix_jordan_chevalley(&s).unwrap();
        prop_assert_eq!(&again.semisimple, &s);
        prop_assert!(again.nilpotent.is_zero());
    }

    #[test]
    fn scaling(a in square(), lambda in nonzero_rational()) {
        let pair = matrix_jordan_chevalley(&a).unwrap();
        let scaled = matrix_jordan_chevalley(&a.scale(&lambda)).unwrap();
        prop_assert_eq!(scaled.semisimple, pair.semisimple.scale(&lambda));
        prop_assert_eq!(scaled.nilpotent, pair.nilpotent.scale(&lambda));
    }

    #[test]
    fn uniqueness_and_equivariance_on_conjugated_blocks(k in 0usize..7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let blocks = common::block_fixtures();
        let (s, n) = &blocks[k % blocks.len()];
        let g = common::random_invertible(&mut rng, s.rows());
        let (gs, gn) = (common::conjugate(&g, s), common::conjugate(&g, n));
        let a = &gs + &gn;
        let pair = matrix_jordan_chevalley(&a).unwrap();
        prop_assert_eq!(&pair.semisimple, &gs);
        prop_assert_eq!(&pair.nilpotent, &gn);
        let h = common::random_invertible(&mut rng, s.rows());
        let conj = matrix_jordan_chevalley(&common::conjugate(&h, &a)).unwrap();
        prop_assert_eq!(conj.semisimple, common::conjugate(&h, &gs));
        prop_assert_eq!(conj.nilpotent, common::conjugate(&h, &gn));
    }
}
