//! The sl3 block data against an independent construction: weights from
//! permutations of coordinates, Bruhat order from the subword property.

use std::collections::BTreeSet;

use quiver_slope::catalog::{find_stability_certificate, sl3_data};
use quiver_slope::{OrderedVector, Verdict};

type Perm = [usize; 3];

const WORDS: [&[usize]; 6] = [&[], &[1], &[2], &[2, 1], &[1, 2], &[1, 2, 1]];

fn compose(u: Perm, v: Perm) -> Perm {
    [u[v[0]], u[v[1]], u[v[2]]]
}

fn simple(i: usize) -> Perm {
    let mut p = [0, 1, 2];
    p.swap(i - 1, i);
    p
}

fn element(word: &[usize]) -> Perm {
    word.iter().fold([0, 1, 2], |acc, &i| compose(acc, simple(i)))
}

/// Elements below `y`: products of subwords of a reduced word of `y`.
fn below(y: &[usize]) -> BTreeSet<Perm> {
    (0u32..1 << y.len())
        .map(|mask| {
            let sub: Vec<usize> = (0..y.len()).filter(|i| mask >> i & 1 == 1).map(|i| y[i]).collect();
            element(&sub)
        })
        .collect()
}

/// `w·0 = w(ρ) - ρ` with `ρ = (1, 0, -1)` in ε-coordinates, then paired with
/// the simple coroots.
fn dot_zero(word: &[usize]) -> OrderedVector {
    let rho = [1i64, 0, -1];
    let w = element(word);
    let mut image = [0i64; 3];
    for i in 0..3 {
        image[w[i]] = rho[i];
    }
    let lam: Vec<i64> = (0..3).map(|i| image[i] - rho[i]).collect();
    OrderedVector::from_ints(&[lam[0] - lam[1], lam[1] - lam[2]])
}

#[test]
fn weights_match_the_dot_action() {
    let d = sl3_data();
    let ours: Vec<OrderedVector> = WORDS.iter().map(|w| dot_zero(w)).collect();
    assert_eq!(d.weights.weights, ours);
    let distinct: BTreeSet<_> = ours.iter().map(|v| v.coords().to_vec()).collect();
    assert_eq!(distinct.len(), 6);
}

#[test]
fn verma_multiplicities_follow_bruhat_order() {
    let d = sl3_data();
    for (k, w) in WORDS.iter().enumerate() {
        for (j, y) in WORDS.iter().enumerate() {
            let expected = below(y).contains(&element(w)) as i64;
            assert_eq!(d.verma_classes[k].mults()[j], expected, "[M(λ{k}) : L(λ{j})]");
        }
        let subs: BTreeSet<_> = d.default_subobjects[k].iter().collect();
        let oracle: BTreeSet<_> = (0..6)
            .filter(|&j| j != k && below(WORDS[j]).contains(&element(w)))
            .map(|j| &d.verma_classes[j])
            .collect();
        assert_eq!(subs, oracle);
    }
}

#[test]
fn certificates_make_each_verma_stable() {
    let d = sl3_data();
    for k in 0..6 {
        let x = find_stability_certificate(&d.verma_classes[k], &d.default_subobjects[k], &d.weights)
            .unwrap()
            .unwrap_or_else(|| panic!("no certificate for M(λ{k})"));
        let s = d.weights.slope(&x).unwrap();
        for beta in &d.default_subobjects[k] {
            assert_eq!(s.compare_slopes(beta, &d.verma_classes[k]).unwrap(), std::cmp::Ordering::Less);
        }
        assert_eq!(s.k0_verdict(&d.verma_classes[k], &d.default_subobjects[k]).unwrap(), Verdict::Stable);
    }
}
