//! Grothendieck classes, `(c : d)`-slopes and characters.
//!
//! Classes are integer multiplicity vectors over a fixed list of simple
//! labels. Slopes are never divided out: two slopes `c(a)/d(a)` and
//! `c(b)/d(b)` are compared through the sign of `d(b)·c(a) - d(a)·c(b)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::{find_feasible_point, Constraint, Relation};
use crate::ordered::{OrderedSpace, OrderedVector};
use crate::rational::{primitive_integer_vector, q, Q};

/// Largest sub-box of a class that integerization will scan.
pub const BOX_GUARD: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleLabelSet {
    labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<OrderedVector>>,
}

impl SimpleLabelSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Precondition(format!("duplicate label {l:?}")));
            }
        }
        Ok(Self { labels, weights: None })
    }

    pub fn with_weights(labels: Vec<String>, weights: Vec<OrderedVector>) -> Result<Self> {
        let mut set = Self::new(labels)?;
        if weights.len() != set.labels.len() {
            return Err(Error::DimensionMismatch { expected: set.labels.len(), found: weights.len() });
        }
        if let Some(first) = weights.first() {
            if weights.iter().any(|w| w.dim() != first.dim()) {
                return Err(Error::Precondition("weight vectors of differing dimension".into()));
            }
        }
        set.weights = Some(weights);
        Ok(set)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> Option<&[OrderedVector]> {
        self.weights.as_deref()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A class in the Grothendieck group: one multiplicity per simple label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct K0Class(Vec<i64>);

impl K0Class {
    pub fn new(mults: Vec<i64>) -> Self {
        Self(mults)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn mults(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    /// Nonnegative and not zero: the class of some nonzero object.
    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&m| m >= 0) && !self.is_zero()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(&self, other: &K0Class) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &K0Class) -> Result<K0Class> {
        self.same_len(other)?;
        Ok(K0Class(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn checked_sub(&self, other: &K0Class) -> Result<K0Class> {
        self.same_len(other)?;
        Ok(K0Class(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scaled(&self, k: i64) -> K0Class {
        K0Class(self.0.iter().map(|a| a * k).collect())
    }

    fn same_len(&self, other: &K0Class) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }

    /// Every nonzero `beta` with `0 <= beta <= self`, in lexicographic order.
    pub fn sub_box(&self) -> Result<Vec<K0Class>> {
        if self.0.iter().any(|&m| m < 0) {
            return Err(Error::Precondition(format!("class {self} has negative entries")));
        }
        let size = self
            .0
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize + 1))
            .filter(|&s| s <= BOX_GUARD)
            .ok_or_else(|| Error::GuardExceeded(format!("sub-box of {self} exceeds {BOX_GUARD}")))?;
        let mut out = Vec::with_capacity(size);
        let mut cur = vec![0i64; self.len()];
        loop {
            if cur.iter().any(|&m| m != 0) {
                out.push(K0Class(cur.clone()));
            }
            let mut i = self.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                if cur[i] < self.0[i] {
                    cur[i] += 1;
                    cur[i + 1..].iter_mut().for_each(|m| *m = 0);
                    break;
                }
            }
        }
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The pair `(c, d)` of additive functions defining a slope: `c` valued in an
/// ordered space, `d` positive on every simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeData {
    labels: Vec<String>,
    space: OrderedSpace,
    c_values: Vec<OrderedVector>,
    d_values: Vec<Q>,
}

impl SlopeData {
    pub fn new(
        labels: Vec<String>,
        space: OrderedSpace,
        c_values: Vec<OrderedVector>,
        d_values: Vec<Q>,
    ) -> Result<Self> {
        SimpleLabelSet::new(labels.clone())?;
        if c_values.len() != labels.len() {
            return Err(Error::DimensionMismatch { expected: labels.len(), found: c_values.len() });
        }
        if d_values.len() != labels.len() {
            return Err(Error::DimensionMismatch { expected: labels.len(), found: d_values.len() });
        }
        for c in &c_values {
            space.contains(c)?;
        }
        if let Some(bad) = d_values.iter().position(|d| !d.is_positive()) {
            return Err(Error::Precondition(format!("d({}) must be positive", labels[bad])));
        }
        Ok(Self { labels, space, c_values, d_values })
    }

    /// All `c` zero and `d` one: every pair of nonzero objects compares equal.
    pub fn trivial(labels: Vec<String>, dimension: usize) -> Result<Self> {
        let space = OrderedSpace::new(dimension)?;
        let n = labels.len();
        Self::new(labels, space, vec![space.zero(); n], vec![q(1); n])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn space(&self) -> OrderedSpace {
        self.space
    }

    pub fn c_values(&self) -> &[OrderedVector] {
        &self.c_values
    }

    pub fn d_values(&self) -> &[Q] {
        &self.d_values
    }

    pub fn num_labels(&self) -> usize {
        self.labels.len()
    }

    fn check_class(&self, cls: &K0Class) -> Result<()> {
        if cls.len() != self.num_labels() {
            return Err(Error::DimensionMismatch { expected: self.num_labels(), found: cls.len() });
        }
        Ok(())
    }

    /// `c` extended additively; defined on every class, effective or not.
    pub fn c_of(&self, cls: &K0Class) -> Result<OrderedVector> {
        self.check_class(cls)?;
        let mut acc = self.space.zero();
        for (m, c) in cls.mults().iter().zip(&self.c_values) {
            if *m != 0 {
                acc = &acc + &c.scale(&q(*m));
            }
        }
        Ok(acc)
    }

    pub fn d_of(&self, cls: &K0Class) -> Result<Q> {
        self.check_class(cls)?;
        Ok(cls.mults().iter().zip(&self.d_values).map(|(m, d)| q(*m) * d).sum())
    }

    pub fn slope_value(&self, cls: &K0Class) -> Result<SlopeValue> {
        self.check_class(cls)?;
        if !cls.is_effective() {
            return Err(Error::UndefinedSlope(format!("class {cls} is zero or not effective")));
        }
        Ok(SlopeValue { numerator: self.c_of(cls)?, denominator: self.d_of(cls)? })
    }

    /// Sign of `d(b)·c(a) - d(a)·c(b)`, i.e. of `σ(a) - σ(b)`.
    pub fn compare_slopes(&self, a: &K0Class, b: &K0Class) -> Result<Ordering> {
        Ok(self.slope_value(a)?.cmp(&self.slope_value(b)?))
    }

    /// Checks the seesaw property for `0 -> A -> B -> C -> 0` at the level of
    /// classes.
    pub fn seesaw_verify(&self, a: &K0Class, b: &K0Class, c: &K0Class) -> Result<bool> {
        if a.checked_add(c)? != *b {
            return Err(Error::Precondition(format!("{b} is not {a} + {c}")));
        }
        let ab = self.compare_slopes(a, b)?;
        let bc = self.compare_slopes(b, c)?;
        let ac = self.compare_slopes(a, c)?;
        Ok(ab == bc && bc == ac)
    }

    /// The character `θ̂(β) = -d(γ)·c(β) + c(γ)·d(β)`, which is `d(γ)` times
    /// `-c(β) + σ(γ)·d(β)`.
    pub fn character_from_slope(&self, gamma: &K0Class) -> Result<RCharacter> {
        let sv = self.slope_value(gamma)?;
        let values = self
            .c_values
            .iter()
            .zip(&self.d_values)
            .map(|(c, d)| &sv.numerator.scale(d) - &c.scale(&sv.denominator))
            .collect();
        Ok(RCharacter { values, bound_class: gamma.clone() })
    }

    /// An integer character with `θ(γ) = 0` whose sign on every nonzero
    /// `β <= γ` matches the lexicographic sign of `θ̂(β)`.
    pub fn integerize_character(&self, gamma: &K0Class) -> Result<Character> {
        let rchar = self.character_from_slope(gamma)?;
        let n = self.num_labels();
        let row = |cls: &K0Class| cls.mults().iter().map(|&m| q(m)).collect::<Vec<Q>>();
        let mut constraints = vec![Constraint::new(row(gamma), Relation::Eq, Q::zero())];
        let mut expected = Vec::new();
        for beta in gamma.sub_box()? {
            let sign = rchar.eval(&beta)?.lex_sign();
            let (rel, rhs) = match sign {
                Ordering::Greater => (Relation::Ge, q(1)),
                Ordering::Less => (Relation::Le, q(-1)),
                Ordering::Equal => (Relation::Eq, Q::zero()),
            };
            constraints.push(Constraint::new(row(&beta), rel, rhs));
            expected.push((beta, sign));
        }
        let point = find_feasible_point(n, &constraints).ok_or_else(|| {
            Error::Infeasible(format!("no integer character reproduces the sign pattern of {gamma}"))
        })?;
        let values = primitive_integer_vector(&point)
            .into_iter()
            .map(|v| {
                v.to_i64()
                    .ok_or_else(|| Error::Infeasible("character value exceeds i64".into()))
            })
            .collect::<Result<Vec<i64>>>()?;
        let character = Character { values, bound_class: gamma.clone() };
        for (beta, sign) in &expected {
            if character.eval(beta)?.cmp(&BigInt::zero()) != *sign {
                return Err(Error::Infeasible(format!("sign mismatch at {beta} after scaling")));
            }
        }
        Ok(character)
    }

    /// Pulls the slope back along a map of Grothendieck groups. Column `j` of
    /// `k0_map` (given as rows over the target labels) is the image of source
    /// label `j`.
    pub fn pull_back(&self, k0_map: &[Vec<i64>], source_labels: Vec<String>) -> Result<SlopeData> {
        if k0_map.len() != self.num_labels() {
            return Err(Error::DimensionMismatch { expected: self.num_labels(), found: k0_map.len() });
        }
        let m = source_labels.len();
        if let Some(r) = k0_map.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch { expected: m, found: r.len() });
        }
        let mut c_values = Vec::with_capacity(m);
        let mut d_values = Vec::with_capacity(m);
        for j in 0..m {
            let image = K0Class::new(k0_map.iter().map(|r| r[j]).collect());
            if !image.is_effective() {
                return Err(Error::Precondition(format!(
                    "source label {} maps to non-effective class {image}",
                    source_labels[j]
                )));
            }
            c_values.push(self.c_of(&image)?);
            d_values.push(self.d_of(&image)?);
        }
        SlopeData::new(source_labels, self.space, c_values, d_values)
    }

    /// Verdict for an object of class `γ` whose proper nonzero subobjects
    /// realise exactly the given classes.
    pub fn k0_verdict(&self, gamma: &K0Class, subclasses: &[K0Class]) -> Result<Verdict> {
        let rchar = self.character_from_slope(gamma)?;
        let mut signs = Vec::with_capacity(subclasses.len());
        for beta in subclasses {
            if !beta.fits_in(gamma) || beta.mults().iter().any(|&m| m < 0) {
                return Err(Error::Precondition(format!("class {beta} is outside the box of {gamma}")));
            }
            if beta.is_zero() || beta == gamma {
                return Err(Error::Precondition(format!("{beta} is not a proper nonzero subclass")));
            }
            signs.push(rchar.eval(beta)?.lex_sign());
        }
        Ok(Verdict::from_signs(signs))
    }
}

/// A slope as the projective pair `c/d`. Equality and order follow the
/// determinant rule.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SlopeValue {
    pub numerator: OrderedVector,
    #[serde(with = "crate::rational::serde_q")]
    pub denominator: Q,
}

impl SlopeValue {
    /// `d(other)·c(self) - d(self)·c(other)`
    pub fn determinant(&self, other: &SlopeValue) -> OrderedVector {
        &self.numerator.scale(&other.denominator) - &other.numerator.scale(&self.denominator)
    }

    /// Coordinatewise quotient; only meaningful for display.
    pub fn as_vector(&self) -> OrderedVector {
        OrderedVector::new(self.numerator.coords().iter().map(|c| c / &self.denominator).collect())
    }
}

impl PartialEq for SlopeValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for SlopeValue {}

impl PartialOrd for SlopeValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SlopeValue {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.numerator.dim(), other.numerator.dim());
        self.determinant(other).lex_sign()
    }
}

impl fmt::Display for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RCharacter {
    pub values: Vec<OrderedVector>,
    pub bound_class: K0Class,
}

impl RCharacter {
    pub fn eval(&self, cls: &K0Class) -> Result<OrderedVector> {
        if cls.len() != self.values.len() {
            return Err(Error::DimensionMismatch { expected: self.values.len(), found: cls.len() });
        }
        let dim = self.values.first().map_or(1, OrderedVector::dim);
        let mut acc = OrderedVector::zero(dim);
        for (m, v) in cls.mults().iter().zip(&self.values) {
            if *m != 0 {
                acc = &acc + &v.scale(&q(*m));
            }
        }
        Ok(acc)
    }
}

/// An integer-valued character bound to the class it vanishes on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub values: Vec<i64>,
    pub bound_class: K0Class,
}

impl Character {
    pub fn eval(&self, cls: &K0Class) -> Result<BigInt> {
        if cls.len() != self.values.len() {
            return Err(Error::DimensionMismatch { expected: self.values.len(), found: cls.len() });
        }
        Ok(cls
            .mults()
            .iter()
            .zip(&self.values)
            .map(|(m, v)| BigInt::from(*m) * BigInt::from(*v))
            .sum())
    }

    /// θ-verdict: stable iff `θ(β) > 0` on every proper nonzero subclass.
    pub fn verdict(&self, subclasses: &[K0Class]) -> Result<Verdict> {
        let signs = subclasses
            .iter()
            .map(|b| Ok(self.eval(b)?.cmp(&BigInt::zero())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Verdict::from_signs(signs))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Verdict {
    /// From the signs of `θ` on the proper nonzero subclasses.
    pub fn from_signs(signs: impl IntoIterator<Item = Ordering>) -> Verdict {
        let mut verdict = Verdict::Stable;
        for s in signs {
            match s {
                Ordering::Less => return Verdict::Unstable,
                Ordering::Equal => verdict = Verdict::StrictlySemistable,
                Ordering::Greater => {}
            }
        }
        verdict
    }

    pub fn is_semistable(self) -> bool {
        self != Verdict::Unstable
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Stable => "Stable",
            Verdict::StrictlySemistable => "StrictlySemistable",
            Verdict::Unstable => "Unstable",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    /// sl2 slope at x2 = 1: c(L(-2)) = -2, c(L(0)) = 0, d = 1.
    fn sl2(x2: i64) -> SlopeData {
        SlopeData::new(
            vec!["L(-2)".into(), "L(0)".into()],
            OrderedSpace::new(1).unwrap(),
            vec![OrderedVector::from_ints(&[-2 * x2]), OrderedVector::from_ints(&[0])],
            vec![q(1), q(1)],
        )
        .unwrap()
    }

    fn k(v: &[i64]) -> K0Class {
        K0Class::new(v.to_vec())
    }

    #[test]
    fn slope_values() {
        let s = sl2(1);
        let m0 = s.slope_value(&k(&[1, 1])).unwrap();
        assert_eq!(m0.numerator, OrderedVector::from_ints(&[-2]));
        assert_eq!(m0.denominator, q(2));
        assert_eq!(m0.as_vector(), OrderedVector::new(vec![q(-1)]));
        let p = s.slope_value(&k(&[2, 1])).unwrap();
        assert_eq!(p.as_vector(), OrderedVector::new(vec![qf(-4, 3)]));
        let l0 = s.slope_value(&k(&[0, 1])).unwrap();
        assert_eq!(l0.numerator, OrderedVector::from_ints(&[0]));
        assert_eq!(l0.denominator, q(1));
    }

    #[test]
    fn slope_undefined_for_zero_and_negative() {
        let s = sl2(1);
        assert!(matches!(s.slope_value(&k(&[0, 0])), Err(Error::UndefinedSlope(_))));
        assert!(matches!(s.slope_value(&k(&[1, -1])), Err(Error::UndefinedSlope(_))));
        assert!(matches!(s.slope_value(&k(&[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn comparisons() {
        let s = sl2(1);
        assert_eq!(s.compare_slopes(&k(&[1, 1]), &k(&[2, 1])).unwrap(), Ordering::Greater);
        assert_eq!(s.slope_value(&k(&[1, 1])).unwrap().determinant(&s.slope_value(&k(&[2, 1])).unwrap()),
            OrderedVector::from_ints(&[2]));
        assert_eq!(s.compare_slopes(&k(&[2, 1]), &k(&[2, 1])).unwrap(), Ordering::Equal);
        assert_eq!(s.compare_slopes(&k(&[1, 0]), &k(&[0, 1])).unwrap(), Ordering::Less);
    }

    #[test]
    fn seesaw_examples() {
        let s = sl2(1);
        assert!(s.seesaw_verify(&k(&[1, 0]), &k(&[1, 1]), &k(&[0, 1])).unwrap());
        assert!(s.seesaw_verify(&k(&[0, 1]), &k(&[0, 2]), &k(&[0, 1])).unwrap());
        assert!(matches!(
            s.seesaw_verify(&k(&[1, 0]), &k(&[2, 1]), &k(&[0, 1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn real_character_values() {
        let s = sl2(1);
        let r = s.character_from_slope(&k(&[1, 1])).unwrap();
        assert_eq!(r.values[0], OrderedVector::from_ints(&[2]));
        assert_eq!(r.values[1], OrderedVector::from_ints(&[-2]));
        assert!(r.eval(&k(&[1, 1])).unwrap().is_zero());
    }

    #[test]
    fn integerize_sl2() {
        let chr = sl2(1).integerize_character(&k(&[1, 1])).unwrap();
        assert_eq!(chr.values, vec![1, -1]);
        assert_eq!(chr.eval(&k(&[1, 1])).unwrap(), BigInt::zero());
    }

    #[test]
    fn integerize_trivial() {
        let s = SlopeData::trivial(vec!["a".into(), "b".into(), "c".into()], 2).unwrap();
        let chr = s.integerize_character(&k(&[1, 2, 1])).unwrap();
        assert_eq!(chr.values, vec![0, 0, 0]);
    }

    #[test]
    fn integerize_two_dimensional() {
        let s = SlopeData::new(
            vec!["L1".into(), "L2".into()],
            OrderedSpace::new(2).unwrap(),
            vec![OrderedVector::from_ints(&[1, 0]), OrderedVector::from_ints(&[0, 1])],
            vec![q(1), q(1)],
        )
        .unwrap();
        let r = s.character_from_slope(&k(&[1, 1])).unwrap();
        assert_eq!(r.values[0], OrderedVector::from_ints(&[-1, 1]));
        assert_eq!(r.values[1], OrderedVector::from_ints(&[1, -1]));
        let chr = s.integerize_character(&k(&[1, 1])).unwrap();
        assert_eq!(chr.values, vec![-1, 1]);
    }

    #[test]
    fn pull_back_examples() {
        let s = sl2(1);
        let id = s.pull_back(&[vec![1, 0], vec![0, 1]], s.labels().to_vec()).unwrap();
        assert_eq!(id, s);
        let swapped = s
            .pull_back(&[vec![0, 1], vec![1, 0]], vec!["L(0)".into(), "L(-2)".into()])
            .unwrap();
        assert_eq!(swapped.c_values()[0], s.c_values()[1]);
        assert_eq!(swapped.c_values()[1], s.c_values()[0]);
        let incl = s.pull_back(&[vec![1], vec![0]], vec!["L(-2)".into()]).unwrap();
        assert_eq!(incl.c_values(), &[OrderedVector::from_ints(&[-2])]);
        assert_eq!(incl.d_values(), &[q(1)]);
        assert!(s.pull_back(&[vec![0], vec![0]], vec!["z".into()]).is_err());
    }

    #[test]
    fn k0_verdicts() {
        let s = sl2(1);
        assert_eq!(s.k0_verdict(&k(&[1, 1]), &[k(&[1, 0])]).unwrap(), Verdict::Stable);
        assert_eq!(s.k0_verdict(&k(&[1, 1]), &[k(&[0, 1])]).unwrap(), Verdict::Unstable);
        let t = SlopeData::trivial(s.labels().to_vec(), 1).unwrap();
        assert_eq!(t.k0_verdict(&k(&[1, 1]), &[k(&[0, 1])]).unwrap(), Verdict::StrictlySemistable);
        assert_eq!(t.k0_verdict(&k(&[1, 1]), &[]).unwrap(), Verdict::Stable);
        assert!(s.k0_verdict(&k(&[1, 1]), &[k(&[2, 0])]).is_err());
        assert!(s.k0_verdict(&k(&[1, 1]), &[k(&[1, 1])]).is_err());
    }

    #[test]
    fn sub_box_order() {
        let b = k(&[1, 2]).sub_box().unwrap();
        let got: Vec<Vec<i64>> = b.iter().map(|c| c.mults().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn nonpositive_d_rejected() {
        let r = SlopeData::new(
            vec!["a".into()],
            OrderedSpace::new(1).unwrap(),
            vec![OrderedVector::from_ints(&[0])],
            vec![q(0)],
        );
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
