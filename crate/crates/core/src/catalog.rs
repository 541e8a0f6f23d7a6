//! Built-in examples: the principal block of category O for sl(2) as a
//! quiver with relations, weight data for sl(3), incidence algebras of
//! finite posets, and slopes built from composition multiplicities.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::k0::{K0Class, SlopeData, Verdict};
use crate::lp::{find_feasible_point, Constraint, Relation as LpRelation};
use crate::matrix::Matrix;
use crate::ordered::{OrderedSpace, OrderedVector};
use crate::quiver::{Algebra, Arrow, Path, Quiver, Relation};
use crate::rational::{q, Q};
use crate::rep::{Morphism, Representation};

/// Simple labels with their weights in a lexicographically ordered space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightData {
    pub space: OrderedSpace,
    pub labels: Vec<String>,
    pub weights: Vec<OrderedVector>,
}

impl WeightData {
    pub fn new(space: OrderedSpace, labels: Vec<String>, weights: Vec<OrderedVector>) -> Result<Self> {
        if labels.len() != weights.len() {
            return Err(Error::DimensionMismatch { expected: labels.len(), found: weights.len() });
        }
        for w in &weights {
            space.contains(w)?;
        }
        Ok(Self { space, labels, weights })
    }

    /// `c(λ_j) = x_j·λ_j`, `d ≡ 1`.
    pub fn slope(&self, x: &[Q]) -> Result<SlopeData> {
        jordan_holder_slope(self.labels.clone(), x, &vec![q(1); self.labels.len()], &self.weights, self.space)
    }
}

/// `c(λ) = f(λ)·embedding(λ)` and `d(λ) = g(λ)` for every simple label `λ`.
pub fn jordan_holder_slope(
    labels: Vec<String>,
    f: &[Q],
    g: &[Q],
    embedding: &[OrderedVector],
    space: OrderedSpace,
) -> Result<SlopeData> {
    for len in [f.len(), g.len(), embedding.len()] {
        if len != labels.len() {
            return Err(Error::DimensionMismatch { expected: labels.len(), found: len });
        }
    }
    let c = f.iter().zip(embedding).map(|(x, e)| e.scale(x)).collect();
    SlopeData::new(labels, space, c, g.to_vec())
}

/// Each label sent to its own coordinate, so that classes are compared by
/// lexicographic order on the labels.
pub fn basis_embedding(n: usize) -> Vec<OrderedVector> {
    (0..n)
        .map(|i| OrderedVector::new((0..n).map(|j| if i == j { q(1) } else { Q::zero() }).collect()))
        .collect()
}

/// `0 -> A -f-> B -g-> C -> 0`, naming catalog representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequence {
    pub terms: [String; 3],
    pub f: Morphism,
    pub g: Morphism,
}

/// An algebra together with named representations and weights for its
/// simples (one simple per vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: Algebra,
    pub representations: Vec<(String, Representation)>,
    pub weights: WeightData,
    pub sequences: Vec<ExactSequence>,
}

impl CatalogEntry {
    pub fn get(&self, name: &str) -> Option<&Representation> {
        self.representations.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    /// Every representation and morphism reduced modulo `p`.
    pub fn reduce_mod(&self, p: u32) -> Result<CatalogEntry> {
        let field = FieldSpec::prime(p)?;
        let representations = self
            .representations
            .iter()
            .map(|(n, r)| Ok((n.clone(), r.reduce_mod(p)?)))
            .collect::<Result<_>>()?;
        let reduce = |m: &Morphism| -> Result<Morphism> {
            let components = m
                .components
                .iter()
                .map(|c| c.try_map(|x| field.canonicalize(x)))
                .collect::<Result<_>>()?;
            Ok(Morphism { components })
        };
        let sequences = self
            .sequences
            .iter()
            .map(|s| Ok(ExactSequence { terms: s.terms.clone(), f: reduce(&s.f)?, g: reduce(&s.g)? }))
            .collect::<Result<_>>()?;
        Ok(CatalogEntry { representations, sequences, ..self.clone() })
    }

    pub fn slope(&self, x: &[Q]) -> Result<SlopeData> {
        self.weights.slope(x)
    }
}

pub const SL2_NAMES: [&str; 5] = ["L(0)", "L(-2)", "M(0)", "M*(0)", "P(-2)"];

fn int_matrix(rows: usize, cols: usize, entries: &[i64]) -> Matrix<Q> {
    Matrix::from_row_major(rows, cols, entries.iter().map(|&x| q(x)).collect()).expect("catalog matrix shape")
}

/// The sl(2) principal block: vertex `1` is `L(-2)`, vertex `2` is `L(0)`,
/// arrows `a: 1 -> 2` and `b: 2 -> 1`, relation `ab = 0` (apply `b`, then
/// `a`). Representations are over the rationals.
pub fn sl2_block() -> CatalogEntry {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            Arrow { name: "a".into(), source: 0, target: 1 },
            Arrow { name: "b".into(), source: 1, target: 0 },
        ],
    )
    .expect("sl2 quiver");
    let ab = Path::from_composition_order(&quiver, &["a", "b"]).expect("path ab");
    let algebra = Algebra::new(quiver.clone(), vec![Relation::monomial(&quiver, ab).expect("ab")]).expect("sl2 algebra");
    let rep = |dims: [usize; 2], a: &[i64], b: &[i64]| {
        let maps = vec![int_matrix(dims[1], dims[0], a), int_matrix(dims[0], dims[1], b)];
        Representation::new(FieldSpec::Rationals, dims.to_vec(), maps).expect("catalog representation")
    };
    let representations = vec![
        ("L(0)".to_string(), rep([0, 1], &[], &[])),
        ("L(-2)".to_string(), rep([1, 0], &[], &[])),
        ("M(0)".to_string(), rep([1, 1], &[0], &[1])),
        ("M*(0)".to_string(), rep([1, 1], &[1], &[0])),
        ("P(-2)".to_string(), rep([2, 1], &[1, 0], &[0, 1])),
    ];
    let morphism = |v1: (usize, usize, &[i64]), v2: (usize, usize, &[i64])| Morphism {
        components: vec![int_matrix(v1.0, v1.1, v1.2), int_matrix(v2.0, v2.1, v2.2)],
    };
    let seq = |names: [&str; 3], f: Morphism, g: Morphism| ExactSequence {
        terms: names.map(String::from),
        f,
        g,
    };
    let sequences = vec![
        seq(["L(-2)", "M(0)", "L(0)"], morphism((1, 1, &[1]), (1, 0, &[])), morphism((0, 1, &[]), (1, 1, &[1]))),
        seq(["L(0)", "M*(0)", "L(-2)"], morphism((1, 0, &[]), (1, 1, &[1])), morphism((1, 1, &[1]), (0, 1, &[]))),
        seq(["L(-2)", "P(-2)", "M*(0)"], morphism((2, 1, &[0, 1]), (1, 0, &[])), morphism((1, 2, &[1, 0]), (1, 1, &[1]))),
        seq(["M(0)", "P(-2)", "L(-2)"], morphism((2, 1, &[0, 1]), (1, 1, &[1])), morphism((1, 2, &[1, 0]), (0, 1, &[]))),
    ];
    // Weights in units of the fundamental weight, indexed by vertex.
    let weights = WeightData::new(
        OrderedSpace::new(1).expect("dimension 1"),
        vec!["1".into(), "2".into()],
        vec![OrderedVector::from_ints(&[-2]), OrderedVector::from_ints(&[0])],
    )
    .expect("sl2 weights");
    CatalogEntry { name: "sl2".into(), algebra, representations, weights, sequences }
}

/// The sl(2) slope for coefficients `x = (x_0, x_1)` on the weights
/// `λ_0 = 0` (the simple `L(0)`, vertex 2) and `λ_1 = -2` (the simple
/// `L(-2)`, vertex 1). Only `x_1` matters, since `λ_0 = 0`; classic
/// write-ups call it `x_2`.
pub fn sl2_slope(x: [Q; 2]) -> SlopeData {
    let [x0, x1] = x;
    sl2_block().slope(&[x1, x0]).expect("sl2 slope")
}

/// [`sl2_slope`] with `x_0 = 0` and `x_1 = x2`.
pub fn sl2_slope_at(x2: Q) -> SlopeData {
    sl2_slope([Q::zero(), x2])
}

/// The sl(3) principal block at the level of Grothendieck groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl3Data {
    pub weights: WeightData,
    /// `[M(λ_k)]` as multiplicities of `L(λ_0), …, L(λ_5)`.
    pub verma_classes: Vec<K0Class>,
    /// Classes of the proper Verma submodules of each `M(λ_k)`.
    pub default_subobjects: Vec<Vec<K0Class>>,
}

/// Elements of S3 as reduced words in `s1, s2` (rightmost letter applied
/// first), listed so that `w_k · 0 = λ_k`.
const SL3_WORDS: [&[usize]; 6] = [&[], &[1], &[2], &[2, 1], &[1, 2], &[1, 2, 1]];

/// One-line notation of a product of simple transpositions.
fn permutation(word: &[usize]) -> [usize; 3] {
    let mut w = [0, 1, 2];
    for &s in word {
        // w ∘ s_i: swap the values at positions i-1, i.
        w.swap(s - 1, s);
    }
    w
}

/// Bruhat order on S3 by the tableau criterion.
fn bruhat_leq(u: [usize; 3], v: [usize; 3]) -> bool {
    (1..=3).all(|k| {
        let mut a = u[..k].to_vec();
        let mut b = v[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

/// `w·λ = w(λ + ρ) - ρ` in fundamental-weight coordinates.
fn dot_action(word: &[usize], lambda: [i64; 2]) -> [i64; 2] {
    let mut v = [lambda[0] + 1, lambda[1] + 1];
    for &s in word.iter().rev() {
        // s_i(v) = v - v_i·α_i with α_1 = (2,-1), α_2 = (-1,2)
        let alpha = if s == 1 { [2, -1] } else { [-1, 2] };
        let c = v[s - 1];
        v = [v[0] - c * alpha[0], v[1] - c * alpha[1]];
    }
    [v[0] - 1, v[1] - 1]
}

/// Weights `λ_0 = 0, λ_1 = -2ω_1 + ω_2, λ_2 = ω_1 - 2ω_2, λ_3 = -3ω_2,
/// λ_4 = -3ω_1, λ_5 = -2ω_1 - 2ω_2`, ordered lexicographically with `ω_1`
/// first. `[M(w·0) : L(y·0)] = 1` exactly when `y >= w` in the Bruhat order.
pub fn sl3_data() -> Sl3Data {
    let perms: Vec<[usize; 3]> = SL3_WORDS.iter().map(|w| permutation(w)).collect();
    let weights = SL3_WORDS
        .iter()
        .map(|w| {
            let [a, b] = dot_action(w, [0, 0]);
            OrderedVector::from_ints(&[a, b])
        })
        .collect();
    let labels = (0..6).map(|k| format!("L(λ{k})")).collect();
    let weights = WeightData::new(OrderedSpace::new(2).expect("dimension 2"), labels, weights).expect("sl3 weights");
    let verma = |k: usize| K0Class::new((0..6).map(|j| bruhat_leq(perms[k], perms[j]) as i64).collect());
    let verma_classes: Vec<K0Class> = (0..6).map(verma).collect();
    let default_subobjects = (0..6)
        .map(|k| (0..6).filter(|&j| j != k && bruhat_leq(perms[k], perms[j])).map(|j| verma_classes[j].clone()).collect())
        .collect();
    Sl3Data { weights, verma_classes, default_subobjects }
}

/// Searches for `x` with `θ̂_x(β)` lexicographically positive for every
/// supplied `β`, where `θ̂_x` is the character of the slope
/// [`WeightData::slope`]`(x)` at `target`. `None` if no such `x` exists.
pub fn find_stability_certificate(target: &K0Class, subobjects: &[K0Class], w: &WeightData) -> Result<Option<Vec<Q>>> {
    let m = w.labels.len();
    if target.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: target.len() });
    }
    if !target.is_effective() {
        return Err(Error::UndefinedSlope(format!("class {target} is zero or not effective")));
    }
    for beta in subobjects {
        if beta.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: beta.len() });
        }
        if !beta.is_effective() || !beta.fits_in(target) || beta == target {
            return Err(Error::Precondition(format!("{beta} is not a proper nonzero subclass of {target}")));
        }
    }
    // θ̂_x(β) = Σ_j x_j λ_j (|β|·γ_j - |γ|·β_j): one linear form in x per coordinate.
    let (gt, dim) = (target.total(), w.space.dimension());
    let forms: Vec<Vec<Vec<Q>>> = subobjects
        .iter()
        .map(|beta| {
            let bt = beta.total();
            (0..dim)
                .map(|i| {
                    (0..m)
                        .map(|j| &w.weights[j].coords()[i] * q(bt * target.mults()[j] - gt * beta.mults()[j]))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut constraints = Vec::new();
    let Some(x) = search_lex_positive(m, &forms, &mut constraints) else {
        return Ok(None);
    };
    let verdict = w.slope(&x)?.k0_verdict(target, subobjects)?;
    if verdict != Verdict::Stable {
        return Err(Error::Infeasible(format!("certificate check failed with verdict {verdict}")));
    }
    Ok(Some(x))
}

/// Chooses, for each form vector in turn, a leading coordinate that is
/// positive (all earlier coordinates zero), backtracking on infeasibility.
/// Scaling `x` makes "positive" and "at least 1" interchangeable.
fn search_lex_positive(m: usize, forms: &[Vec<Vec<Q>>], constraints: &mut Vec<Constraint>) -> Option<Vec<Q>> {
    let Some((first, rest)) = forms.split_first() else {
        return find_feasible_point(m, constraints);
    };
    for lead in 0..first.len() {
        let mark = constraints.len();
        for coord in &first[..lead] {
            constraints.push(Constraint::new(coord.clone(), LpRelation::Eq, Q::zero()));
        }
        constraints.push(Constraint::new(first[lead].clone(), LpRelation::Ge, q(1)));
        if find_feasible_point(m, constraints).is_some() {
            if let Some(x) = search_lex_positive(m, rest, constraints) {
                return Some(x);
            }
        }
        constraints.truncate(mark);
    }
    None
}

/// The incidence algebra of a finite poset: one vertex per element, one
/// arrow per covering relation, and any two paths with the same endpoints
/// identified. Its dimension is the number of pairs `x <= y`.
pub fn poset_algebra(labels: Vec<String>, less_than: &[(usize, usize)]) -> Result<Algebra> {
    let n = labels.len();
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(x, y) in less_than {
        if x >= n || y >= n {
            return Err(Error::Precondition(format!("poset relation ({x}, {y}) out of range")));
        }
        leq[x][y] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    if (0..n).any(|i| (0..n).any(|j| i != j && leq[i][j] && leq[j][i])) {
        return Err(Error::Precondition("relations contain a cycle".into()));
    }
    let mut arrows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let covers = x != y && leq[x][y] && !(0..n).any(|z| z != x && z != y && leq[x][z] && leq[z][y]);
            if covers {
                arrows.push(Arrow { name: format!("{}<{}", labels[x], labels[y]), source: x, target: y });
            }
        }
    }
    let quiver = Quiver::new(labels, arrows)?;
    let mut relations = Vec::new();
    let paths = quiver.paths_up_to(n);
    for x in 0..n {
        for y in 0..n {
            let parallel: Vec<&Path> = paths.iter().filter(|p| p.source() == x && p.target(&quiver) == y && !p.is_empty()).collect();
            if let Some((first, rest)) = parallel.split_first() {
                for p in rest {
                    relations.push(Relation::new(&quiver, vec![(q(1), (*p).clone()), (q(-1), (*first).clone())])?);
                }
            }
        }
    }
    Algebra::new(quiver, relations)
}
