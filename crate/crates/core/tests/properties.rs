mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn polynomial_ring_axioms(a in poly_terms(), b in poly_terms(), c in poly_terms()) {
        poly_associative(&poly_text(&a), &poly_text(&b), &poly_text(&c))?;
    }

    #[test]
    fn rank_plus_nullity(m in small_matrix()) {
        rank_nullity(&m)?;
    }

    #[test]
    fn idempotents_of_gaussian_algebra(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29])) {
        idempotent_count(p)?;
    }

    #[test]
    fn serre_duality_on_smooth_fans((k, d, _m) in divisor_case()) {
        serre_duality(k, &d)?;
    }

    #[test]
    fn cohomology_depends_on_class((k, d, m) in divisor_case()) {
        class_invariance(k, &d, &m)?;
    }

    #[test]
    fn euler_characteristic_by_riemann_roch((k, d, _m) in divisor_case()) {
        euler_characteristic_matches_riemann_roch(k, &d)?;
    }

    #[test]
    fn les_zero_padding((s, q, pad) in les_case()) {
        les_padding(&s, &q, pad)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, ..ProptestConfig::default() })]

    #[test]
    fn resolutions_over_cone_are_complexes(g in cone_generators()) {
        resolution_is_complex(&g)?;
    }

    #[test]
    fn ext_ignores_presentation_order((m, n, gs, rs) in shuffle_case()) {
        ext_shuffle_invariant(&m, &n, gs, rs)?;
    }

    #[test]
    fn shift_is_an_involution_swapping_parity((n, i, j) in mf_case()) {
        mf_shift_properties(n, i, j)?;
    }
}
