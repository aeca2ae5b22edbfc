mod common;

use leibniz::algebra::trivial_algebra;
use leibniz::bimodule::{antisymmetric, check_bimodule, intertwiner_dim, symmetric};
use leibniz::cohomology::{leibniz_cohomology, leibniz_complex, trivial_algebra_closed_form};
use leibniz::ext::{ext1_hemi_closed, ext_hemi_spectral, ext_simple_closed, hemi_algebra, HemiSimple};
use leibniz::quiver::{quiver_hemi, quiver_trivial};
use leibniz::repsl2::{decompose, dual, hom_dim, simple_module, sl2, SL2Module};
use leibniz::Scalar;
use proptest::prelude::*;

fn sum_of(weights: &[usize]) -> SL2Module {
    let mut it = weights.iter().map(|&w| simple_module(w));
    let first = it.next().expect("nonempty weight list");
    it.fold(first, |acc, v| acc.direct_sum(&v))
}

fn weights() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..=3, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lifted_bimodules_satisfy_axioms(n in 1usize..=2, ws in weights()) {
        let h = hemi_algebra(n).unwrap();
        let v = sum_of(&ws);
        prop_assert!(check_bimodule(&symmetric(&h, v.module()).unwrap()));
        prop_assert!(check_bimodule(&antisymmetric(&h, v.module()).unwrap()));
    }

    #[test]
    fn hom_dim_matches_intertwiners(a in weights(), b in weights()) {
        let (u, v) = (sum_of(&a), sum_of(&b));
        let by_weights = hom_dim(&decompose(&u).unwrap(), &decompose(&v).unwrap());
        prop_assert_eq!(by_weights, intertwiner_dim(&sl2(), u.module(), v.module()));
    }

    #[test]
    fn sl2_modules_are_self_dual(ws in weights()) {
        let v = sum_of(&ws);
        prop_assert_eq!(decompose(&dual(&v)).unwrap(), decompose(&v).unwrap());
    }

    #[test]
    fn random_bimodules_give_complexes(seed in any::<u64>()) {
        let h = trivial_algebra();
        let m = common::random_trivial_bimodule(&mut common::rng(seed), 4);
        let complex = leibniz_complex(&h, &m, 4).unwrap();
        for q in 1..4 {
            prop_assert!((complex.differential(q) * complex.differential(q - 1)).is_zero());
        }
        let brute = leibniz_cohomology(&h, &m, 4).unwrap().dims();
        prop_assert_eq!(brute, trivial_algebra_closed_form(&m, 4).unwrap());
    }
}

fn all_simples(max_weight: usize) -> Vec<HemiSimple> {
    let mut out = vec![HemiSimple::Trivial];
    for w in 1..=max_weight {
        out.push(HemiSimple::symmetric(w));
        out.push(HemiSimple::antisymmetric(w));
    }
    out
}

#[test]
fn schur_in_degree_zero() {
    let simples = all_simples(4);
    for n in 1..=2 {
        for &a in &simples {
            for &b in &simples {
                assert_eq!(ext_simple_closed(n, a, b, 0).unwrap(), usize::from(a == b), "Hom({a}, {b})");
            }
        }
    }
}

#[test]
fn spectral_agrees_with_closed_form_in_degree_one() {
    for p in 0..=3 {
        for m in 0..=2 {
            let (src, dst) = (HemiSimple::symmetric(p), HemiSimple::antisymmetric(m));
            let r = ext_hemi_spectral(1, src, dst, 1).unwrap();
            assert!(r.certificate.is_certified());
            assert_eq!(r.dims[0], usize::from(src == dst), "Hom({src}, {dst})");
            assert_eq!(r.dims[1], ext1_hemi_closed(1, p, m), "Ext^1({src}, {dst})");
        }
    }
}

#[test]
fn widening_the_window_keeps_old_edges() {
    for n in 1..=2 {
        for k in 0..5 {
            let small = quiver_hemi(n, k, false).unwrap().edge_map();
            let large = quiver_hemi(n, k + 1, false).unwrap().edge_map();
            for (pair, mult) in &small {
                assert_eq!(large.get(pair), Some(mult), "n={n} k={k} {pair:?}");
            }
        }
    }
}

#[test]
fn dot_has_one_line_per_vertex_and_arrow() {
    let quivers = [
        quiver_trivial(&[Scalar::one(), Scalar::new(3, 2)]).unwrap(),
        quiver_hemi(1, 3, false).unwrap(),
        quiver_hemi(2, 4, false).unwrap(),
    ];
    for q in quivers {
        let dot = q.to_dot();
        assert_eq!(dot.lines().count(), 2 + q.vertices.len() + q.arrow_count());
        assert_eq!(dot.matches("->").count(), q.arrow_count());
    }
}
