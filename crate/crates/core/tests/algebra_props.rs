mod common;

use proptest::prelude::*;
use quiver_slope::catalog::poset_algebra;
use quiver_slope::rep::{hom_space, indecomposable_projective, is_isomorphic, loewy_structure};
use quiver_slope::{FieldSpec, K0Class};

use common::{all_reps, sl2, sl2_universe};

#[test]
fn hom_from_projective_counts_vertex_dimension() {
    let alg = sl2();
    for p in [2, 3] {
        let projectives: Vec<_> = (0..2).map(|i| indecomposable_projective(&alg, i, FieldSpec::Prime(p)).unwrap()).collect();
        for v in sl2_universe(p, if p == 2 { 2 } else { 1 }) {
            for (i, proj) in projectives.iter().enumerate() {
                assert_eq!(hom_space(&alg, proj, &v).unwrap().len(), v.dims()[i], "P({i}) into {v:?}");
            }
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_relation() {
    let alg = sl2();
    for dims in [[1, 1], [2, 1], [1, 2]] {
        let reps = all_reps(&alg, &dims, 2);
        let iso: Vec<Vec<bool>> = reps
            .iter()
            .map(|a| reps.iter().map(|b| is_isomorphic(&alg, a, b, 1_000_000).unwrap()).collect())
            .collect();
        let n = reps.len();
        for i in 0..n {
            assert!(iso[i][i]);
            for j in 0..n {
                assert_eq!(iso[i][j], iso[j][i]);
                for k in 0..n {
                    if iso[i][j] && iso[j][k] {
                        assert!(iso[i][k], "{dims:?}: {i} ~ {j} ~ {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn loewy_layers_sum_to_the_dimension_vector() {
    let alg = sl2();
    for v in sl2_universe(2, 2) {
        let layers = loewy_structure(&alg, &v).unwrap();
        let total = layers.iter().fold(K0Class::zero(2), |acc, l| acc.checked_add(l).unwrap());
        assert_eq!(total, v.dimension_vector());
        assert!(layers.iter().all(|l| !l.is_zero()));
    }
}

/// Pairs `x <= y` by reachability, computed one source at a time.
fn interval_count(n: usize, less_than: &[(usize, usize)]) -> usize {
    (0..n)
        .map(|x| {
            let mut seen = vec![false; n];
            let mut stack = vec![x];
            while let Some(v) = stack.pop() {
                if !seen[v] {
                    seen[v] = true;
                    stack.extend(less_than.iter().filter(|(a, _)| *a == v).map(|(_, b)| *b));
                }
            }
            seen.iter().filter(|s| **s).count()
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poset_algebra_dimension_counts_intervals(
        n in 1usize..=5,
        edges in prop::collection::vec((0usize..5, 0usize..5), 0..8),
    ) {
        let less_than: Vec<(usize, usize)> = edges.into_iter().filter(|&(a, b)| a < b && b < n).collect();
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        let alg = poset_algebra(labels, &less_than).unwrap();
        prop_assert_eq!(alg.dimension(), interval_count(n, &less_than));
        for i in 0..n {
            let proj = indecomposable_projective(&alg, i, FieldSpec::Rationals).unwrap();
            let layers = loewy_structure(&alg, &proj).unwrap();
            prop_assert_eq!(&layers[0], &K0Class::unit(n, i));
        }
    }
}
