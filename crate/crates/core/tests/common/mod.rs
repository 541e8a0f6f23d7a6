//! Shared helpers and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use quiver_slope::catalog::{sl2_block, sl2_slope_at};
use quiver_slope::matrix::Matrix;
use quiver_slope::rational::{q, qf, Q};
use quiver_slope::{Algebra, FieldSpec, K0Class, OrderedSpace, OrderedVector, Representation, SlopeData};
use rand::Rng;

pub const GUARD: u64 = 10_000_000;

pub fn sl2() -> Algebra {
    sl2_block().algebra
}

pub fn sl2_over(p: u32, name: &str) -> Representation {
    sl2_block().reduce_mod(p).unwrap().get(name).unwrap().clone()
}

pub fn x2_slope(x2: i64) -> SlopeData {
    sl2_slope_at(q(x2))
}

/// Every relation-satisfying matrix tuple of the given dimension vector.
pub fn all_reps(alg: &Algebra, dims: &[usize], p: u32) -> Vec<Representation> {
    let shapes: Vec<(usize, usize)> = alg.quiver().arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let field = FieldSpec::Prime(p);
    let mut out = Vec::new();
    for idx in 0..(p as u64).pow(entries as u32) {
        let mut rest = idx;
        let mut digits = Vec::with_capacity(entries);
        for _ in 0..entries {
            digits.push(q((rest % p as u64) as i64));
            rest /= p as u64;
        }
        let mut offset = 0;
        let maps = shapes
            .iter()
            .map(|&(r, c)| {
                let m = Matrix::from_row_major(r, c, digits[offset..offset + r * c].to_vec()).unwrap();
                offset += r * c;
                m
            })
            .collect();
        let rep = Representation::new(field, dims.to_vec(), maps).unwrap();
        if rep.validate(alg).unwrap() {
            out.push(rep);
        }
    }
    out
}

/// The universe of the HN suite: every valid nonzero representation of the
/// sl2 algebra with dimension vector at most `(max, max)`.
pub fn sl2_universe(p: u32, max: usize) -> Vec<Representation> {
    let alg = sl2();
    let mut out = Vec::new();
    for d1 in 0..=max {
        for d2 in 0..=max {
            if d1 + d2 > 0 {
                out.extend(all_reps(&alg, &[d1, d2], p));
            }
        }
    }
    out
}

fn residues(m: &Matrix<Q>, p: u64) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.to_integer().to_u64().unwrap() % p).collect())
        .collect()
}

fn apply(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % p).collect()
}

fn all_vectors(d: usize, p: u64) -> Vec<Vec<u64>> {
    (0..p.pow(d as u32))
        .map(|mut i| {
            (0..d)
                .map(|_| {
                    let x = i % p;
                    i /= p;
                    x
                })
                .collect()
        })
        .collect()
}

/// Subspaces of `F_p^d` as sets of vectors: subsets containing zero and
/// closed under addition (which implies closure under scalars).
fn subspaces_as_sets(d: usize, p: u64) -> Vec<BTreeSet<Vec<u64>>> {
    let vecs = all_vectors(d, p);
    assert!(vecs.len() <= 16, "oracle only for tiny spaces");
    let mut out = Vec::new();
    for mask in 0u32..(1 << vecs.len()) {
        let set: BTreeSet<Vec<u64>> = (0..vecs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vecs[i].clone()).collect();
        if !set.contains(&vec![0; d]) {
            continue;
        }
        let closed = set.iter().all(|a| set.iter().all(|b| set.contains(&a.iter().zip(b).map(|(x, y)| (x + y) % p).collect::<Vec<_>>())));
        if closed {
            out.push(set);
        }
    }
    out
}

/// Dimension vectors of all subrepresentations, found without linear
/// algebra: vector sets closed under addition and under every arrow.
pub fn brute_subrep_classes(alg: &Algebra, rep: &Representation) -> BTreeSet<K0Class> {
    let FieldSpec::Prime(p) = rep.field() else { panic!("oracle needs F_p") };
    let p = p as u64;
    let maps: Vec<Vec<Vec<u64>>> = rep.maps().iter().map(|m| residues(m, p)).collect();
    let per_vertex: Vec<Vec<BTreeSet<Vec<u64>>>> = rep.dims().iter().map(|&d| subspaces_as_sets(d, p)).collect();
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; per_vertex.len()];
    loop {
        let sets: Vec<&BTreeSet<Vec<u64>>> = choice.iter().enumerate().map(|(v, &i)| &per_vertex[v][i]).collect();
        let invariant = alg.quiver().arrows().iter().enumerate().all(|(k, a)| {
            sets[a.source].iter().all(|x| sets[a.target].contains(&apply(&maps[k], x, p)))
        });
        if invariant {
            let dims = sets.iter().map(|s| log_p(s.len() as u64, p)).collect();
            out.insert(K0Class::new(dims));
        }
        let mut v = 0;
        loop {
            if v == choice.len() {
                return out;
            }
            choice[v] += 1;
            if choice[v] < per_vertex[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}

/// `k` with `p^k = n`.
fn log_p(mut n: u64, p: u64) -> i64 {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % p, 0);
        n /= p;
        k += 1;
    }
    k
}

pub fn random_q(rng: &mut impl Rng, bound: i64) -> Q {
    qf(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// Slope data with random `c` in a random-dimensional ordered space and
/// random positive `d`.
pub fn random_slope(rng: &mut impl Rng, labels: usize) -> SlopeData {
    let names = (1..=labels).map(|i| i.to_string()).collect();
    let dim = rng.gen_range(1..=3);
    let c = (0..labels)
        .map(|_| OrderedVector::new((0..dim).map(|_| if rng.gen_bool(0.3) { q(0) } else { random_q(rng, 6) }).collect()))
        .collect();
    let d = (0..labels).map(|_| qf(rng.gen_range(1..=6), rng.gen_range(1..=6))).collect();
    SlopeData::new(names, OrderedSpace::new(dim).unwrap(), c, d).unwrap()
}
