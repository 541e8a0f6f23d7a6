//! Quivers with relations and the bases of their path-algebra quotients.
//!
//! Paths are stored in application order: `[b, a]` means "apply `b`, then
//! `a`". In the usual right-to-left composition notation this path is written
//! `ab`, so the relation `ab = 0` is the single term `[b, a]`, and on a
//! representation it asserts `V(a)·V(b) = 0`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::matrix::{rref, EchelonBasis, Matrix};
use crate::rational::Q;

pub const DEFAULT_MAX_PATH_LENGTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Precondition("quiver needs at least one vertex".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Precondition(format!("duplicate vertex label {v:?}")));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::Precondition(format!("arrow {} has an endpoint out of range", a.name)));
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Precondition(format!("duplicate arrow name {:?}", a.name)));
            }
        }
        Ok(Self { vertices, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(i, _)| i)
    }

    /// Every path of length at most `max_len`, shortest first.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertex_count()).map(Path::trivial).collect();
        let mut frontier = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.arrows_from(p.target(self)) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { source: p.source, arrows });
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

/// A path in application order starting at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Self { source: vertex, arrows: Vec::new() }
    }

    pub fn new(quiver: &Quiver, source: usize, arrows: Vec<usize>) -> Result<Self> {
        if source >= quiver.vertex_count() {
            return Err(Error::Precondition(format!("vertex {source} out of range")));
        }
        let mut at = source;
        for &a in &arrows {
            let arrow = quiver
                .arrows
                .get(a)
                .ok_or_else(|| Error::Precondition(format!("arrow index {a} out of range")))?;
            if arrow.source != at {
                return Err(Error::Precondition(format!(
                    "arrow {} does not start where the path ends",
                    arrow.name
                )));
            }
            at = arrow.target;
        }
        Ok(Self { source, arrows })
    }

    /// From arrow names in application order (first applied first).
    pub fn from_application_order(quiver: &Quiver, names: &[&str]) -> Result<Self> {
        let arrows = names
            .iter()
            .map(|n| quiver.arrow_index(n).ok_or_else(|| Error::Parse(format!("unknown arrow {n:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let source = match arrows.first() {
            Some(&a) => quiver.arrows[a].source,
            None => return Err(Error::Precondition("use Path::trivial for vertex idempotents".into())),
        };
        Self::new(quiver, source, arrows)
    }

    /// From arrow names in composition order: `["a", "b"]` is the word `ab`,
    /// which applies `b` first.
    pub fn from_composition_order(quiver: &Quiver, names: &[&str]) -> Result<Self> {
        let reversed: Vec<&str> = names.iter().rev().copied().collect();
        Self::from_application_order(quiver, &reversed)
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| quiver.arrows[a].target)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &Path) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.extend(&then.arrows);
        Path { source: self.source, arrows }
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", quiver.vertices[self.source]);
        }
        self.arrows.iter().rev().map(|&a| quiver.arrows[a].name.as_str()).collect()
    }

    pub fn application_names(&self, quiver: &Quiver) -> Vec<String> {
        self.arrows.iter().map(|&a| quiver.arrows[a].name.clone()).collect()
    }

    fn relabeled(&self, perm: &[usize]) -> Path {
        Path { source: perm[self.source], arrows: self.arrows.clone() }
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortest first, then by source, then by arrow sequence.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.arrows.len(), self.source, &self.arrows).cmp(&(other.arrows.len(), other.source, &other.arrows))
    }
}

/// A rational combination of parallel paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(Q, Path)>,
}

impl Relation {
    pub fn new(quiver: &Quiver, terms: Vec<(Q, Path)>) -> Result<Self> {
        let terms: Vec<(Q, Path)> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        let Some((_, first)) = terms.first() else {
            return Err(Error::NotAdmissible("relation with no nonzero terms".into()));
        };
        let (s, t) = (first.source, first.target(quiver));
        for (_, p) in &terms {
            Path::new(quiver, p.source, p.arrows.clone())?;
            if p.len() < 2 {
                return Err(Error::NotAdmissible(format!(
                    "relation term {} has length {} < 2",
                    p.display(quiver),
                    p.len()
                )));
            }
            if p.source != s || p.target(quiver) != t {
                return Err(Error::NotAdmissible("relation terms are not parallel".into()));
            }
        }
        Ok(Self { terms })
    }

    /// A single path set to zero.
    pub fn monomial(quiver: &Quiver, path: Path) -> Result<Self> {
        Self::new(quiver, vec![(crate::rational::q(1), path)])
    }

    pub fn terms(&self) -> &[(Q, Path)] {
        &self.terms
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.terms[0].1.target(quiver)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        self.terms
            .iter()
            .map(|(c, p)| format!("{}*{}", c, p.display(quiver)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A finite-dimensional quotient of a path algebra by an admissible ideal.
///
/// Relations with terms of unequal length are read in the completed path
/// algebra: once every path of some length `N` lies in the ideal modulo
/// longer paths, all paths of length `N` are treated as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    nilpotency: usize,
    normal_forms: BTreeMap<Path, Vec<Q>>,
}

impl Algebra {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        Self::with_guard(quiver, relations, DEFAULT_MAX_PATH_LENGTH)
    }

    /// Computes a path basis of the quotient degree by degree, giving up if
    /// the arrow ideal is not nilpotent modulo relations by `max_len`.
    pub fn with_guard(quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<Self> {
        for r in &relations {
            Relation::new(&quiver, r.terms.clone())?;
        }
        let f = Rationals;
        for n in 1..=max_len {
            let mut paths = quiver.paths_up_to(n);
            // Columns run longest path first so pivots land on long paths and
            // short paths survive as basis elements.
            paths.sort_by(|a, b| b.cmp(a));
            let index: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let gens = ideal_generators(&quiver, &relations, &paths, n);
            let rows: Vec<Vec<Q>> = gens
                .into_iter()
                .map(|g| {
                    let mut row = vec![Q::zero(); paths.len()];
                    for (c, p) in g {
                        row[index[&p]] += c;
                    }
                    row
                })
                .collect();
            let mut m = Matrix::from_rows(paths.len(), rows).expect("row lengths");
            let pivots = rref(&f, &mut m);
            let ideal = EchelonBasis::from_rref(m, pivots);
            let top_in_ideal = paths.iter().filter(|p| p.len() == n).all(|p| {
                let mut e = vec![Q::zero(); paths.len()];
                e[index[p]] = crate::rational::q(1);
                ideal.contains(&f, &e)
            });
            if !top_in_ideal {
                continue;
            }
            let basis_cols = ideal.complement_columns();
            let mut basis: Vec<Path> = basis_cols.iter().map(|&c| paths[c].clone()).collect();
            basis.sort();
            let position: BTreeMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut normal_forms = BTreeMap::new();
            for p in &paths {
                let mut e = vec![Q::zero(); paths.len()];
                e[index[p]] = crate::rational::q(1);
                let reduced = ideal.reduce(&f, &e);
                let mut coords = vec![Q::zero(); basis.len()];
                for &c in &basis_cols {
                    coords[position[&paths[c]]] = reduced[c].clone();
                }
                normal_forms.insert(p.clone(), coords);
            }
            return Ok(Self { quiver, relations, basis, nilpotency: n, normal_forms });
        }
        Err(Error::GuardExceeded(format!(
            "quotient not finite-dimensional within path length {max_len}"
        )))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Smallest `N` with every path of length `N` in the ideal.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    /// Coordinates of a path in [`Algebra::basis`].
    pub fn normal_form(&self, path: &Path) -> Vec<Q> {
        if path.len() >= self.nilpotency {
            return vec![Q::zero(); self.basis.len()];
        }
        self.normal_forms
            .get(path)
            .cloned()
            .expect("paths shorter than the nilpotency index are tabulated")
    }

    /// The same algebra with vertex `v` renamed to position `perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Algebra> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Precondition("vertex relabeling is not a permutation".into()));
        }
        let mut labels = vec![String::new(); n];
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.quiver.vertices[v].clone();
        }
        let arrows = self
            .quiver
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: perm[a.source], target: perm[a.target] })
            .collect();
        let quiver = Quiver::new(labels, arrows)?;
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r.terms.iter().map(|(c, p)| (c.clone(), p.relabeled(perm))).collect(),
            })
            .collect();
        Algebra::new(quiver, relations)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.basis.iter().map(|p| p.display(&self.quiver)).collect();
        write!(f, "algebra of dimension {} with basis {{{}}}", self.dimension(), names.join(", "))
    }
}

/// Spanning set of the ideal truncated to paths of length at most `n`:
/// every `v ; r ; u` with `v` ending at the relation's source and `u`
/// starting at its target.
fn ideal_generators(quiver: &Quiver, relations: &[Relation], paths: &[Path], n: usize) -> Vec<Vec<(Q, Path)>> {
    let mut out = Vec::new();
    for r in relations {
        let shortest = r.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
        let before: Vec<&Path> = paths.iter().filter(|p| p.target(quiver) == r.source()).collect();
        let after: Vec<&Path> = paths.iter().filter(|p| p.source == r.target(quiver)).collect();
        for v in &before {
            for u in &after {
                if v.len() + shortest + u.len() > n {
                    continue;
                }
                let terms: Vec<(Q, Path)> = r
                    .terms
                    .iter()
                    .filter(|(_, p)| v.len() + p.len() + u.len() <= n)
                    .map(|(c, p)| {
                        let prefix = Path { source: v.source, arrows: v.arrows.clone() };
                        (c.clone(), prefix.then(p).then(u))
                    })
                    .collect();
                if !terms.is_empty() {
                    out.push(terms);
                }
            }
        }
    }
    out
}
