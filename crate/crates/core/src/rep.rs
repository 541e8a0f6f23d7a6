//! Representations of a quiver with relations over an exact field.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::k0::K0Class;
use crate::matrix::{self, EchelonBasis, Matrix};
use crate::quiver::Algebra;
use crate::rational::Q;
use crate::with_field;

/// Largest number of Hom-space elements [`is_isomorphic`] will scan.
pub const DEFAULT_HOM_GUARD: u64 = 1_000_000;

/// Vertex spaces `F^{dims[v]}` and one matrix per arrow, of shape
/// `dims[target] x dims[source]`. Entries are stored as rationals; over
/// `F_p` they are canonical residues in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation {
    field: FieldSpec,
    dims: Vec<usize>,
    maps: Vec<Matrix<Q>>,
}

impl Representation {
    pub fn new(field: FieldSpec, dims: Vec<usize>, maps: Vec<Matrix<Q>>) -> Result<Self> {
        let maps = maps
            .into_iter()
            .map(|m| m.try_map(|x| field.canonicalize(x)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { field, dims, maps })
    }

    /// Builds from integer matrices given as rows.
    pub fn from_int_rows(field: FieldSpec, dims: Vec<usize>, maps: &[Vec<Vec<i64>>], algebra: &Algebra) -> Result<Self> {
        let arrows = algebra.quiver().arrows();
        if maps.len() != arrows.len() {
            return Err(Error::Shape(format!("{} maps for {} arrows", maps.len(), arrows.len())));
        }
        let mats = maps
            .iter()
            .zip(arrows)
            .map(|(rows, a)| {
                let (r, c) = (dims[a.target], dims[a.source]);
                if rows.len() != r {
                    return Err(Error::Shape(format!("arrow {}: {} rows, expected {r}", a.name, rows.len())));
                }
                Matrix::from_rows(c, rows.iter().map(|row| row.iter().map(|&x| crate::rational::q(x)).collect()).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = Self::new(field, dims, mats)?;
        rep.check_shapes(algebra)?;
        Ok(rep)
    }

    pub fn zero(field: FieldSpec, algebra: &Algebra) -> Self {
        let dims = vec![0; algebra.vertex_count()];
        let maps = vec![Matrix::filled(0, 0, Q::zero()); algebra.quiver().arrows().len()];
        Self { field, dims, maps }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<Q>] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dimension_vector(&self) -> K0Class {
        K0Class::new(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn check_shapes(&self, algebra: &Algebra) -> Result<()> {
        let quiver = algebra.quiver();
        if self.dims.len() != quiver.vertex_count() {
            return Err(Error::Shape(format!(
                "{} vertex dimensions for {} vertices",
                self.dims.len(),
                quiver.vertex_count()
            )));
        }
        if self.maps.len() != quiver.arrows().len() {
            return Err(Error::Shape(format!(
                "{} maps for {} arrows",
                self.maps.len(),
                quiver.arrows().len()
            )));
        }
        for (m, a) in self.maps.iter().zip(quiver.arrows()) {
            let want = (self.dims[a.target], self.dims[a.source]);
            if m.shape() != want {
                return Err(Error::Shape(format!(
                    "arrow {} has a {}x{} matrix, expected {}x{}",
                    a.name, m.rows(), m.cols(), want.0, want.1
                )));
            }
        }
        Ok(())
    }

    /// `Ok(false)` if some relation fails to vanish; shape problems are errors.
    pub fn validate(&self, algebra: &Algebra) -> Result<bool> {
        Ok(self.first_failing_relation(algebra)?.is_none())
    }

    /// Like [`Representation::validate`] but reports the failing relation.
    pub fn check(&self, algebra: &Algebra) -> Result<()> {
        match self.first_failing_relation(algebra)? {
            None => Ok(()),
            Some(index) => Err(Error::RelationFailure { index }),
        }
    }

    fn first_failing_relation(&self, algebra: &Algebra) -> Result<Option<usize>> {
        self.check_shapes(algebra)?;
        with_field!(self.field, f => {
            let maps = self.lift(&f)?;
            for (i, rel) in algebra.relations().iter().enumerate() {
                let s = rel.source();
                let t = rel.target(algebra.quiver());
                let mut acc = matrix::zeros(&f, self.dims[t], self.dims[s]);
                for (c, path) in rel.terms() {
                    let mut m = matrix::identity(&f, self.dims[s]);
                    for &a in path.arrows() {
                        m = matrix::mul(&f, &maps[a], &m);
                    }
                    acc = matrix::add(&f, &acc, &matrix::scale(&f, &f.from_q(c)?, &m));
                }
                if !matrix::is_zero(&f, &acc) {
                    return Ok(Some(i));
                }
            }
            Ok(None)
        })
    }

    pub(crate) fn lift<F: Field>(&self, f: &F) -> Result<Vec<Matrix<F::Elem>>> {
        self.maps.iter().map(|m| m.try_map(|x| f.from_q(x))).collect()
    }

    pub(crate) fn from_field_maps<F: Field>(f: &F, field: FieldSpec, dims: Vec<usize>, maps: &[Matrix<F::Elem>]) -> Self {
        let maps = maps.iter().map(|m| m.map(|x| f.to_q(x))).collect();
        Self { field, dims, maps }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        if self.dims.len() != other.dims.len() || self.maps.len() != other.maps.len() {
            return Err(Error::Shape("direct sum of representations of different quivers".into()));
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.block_diag(b, Q::zero()))
            .collect();
        Ok(Representation { field: self.field, dims, maps })
    }

    /// Reduces a rational representation modulo `p`; entries must be
    /// `p`-integral. The result certifies only the reduced representation.
    pub fn reduce_mod(&self, p: u32) -> Result<Representation> {
        if let FieldSpec::Prime(q) = self.field {
            if q == p {
                return Ok(self.clone());
            }
            return Err(Error::FieldMismatch(format!("cannot reduce an F_{q} representation mod {p}")));
        }
        Representation::new(FieldSpec::prime(p)?, self.dims.clone(), self.maps.clone())
    }

    /// The same representation on a quiver whose vertex `v` was moved to
    /// `perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Representation {
        let mut dims = vec![0; self.dims.len()];
        for (v, &p) in perm.iter().enumerate() {
            dims[p] = self.dims[v];
        }
        Representation { field: self.field, dims, maps: self.maps.clone() }
    }

    /// Row-major entries of every map, arrow by arrow: the canonical
    /// encoding used to order representations.
    pub fn encoding(&self) -> Vec<Q> {
        self.maps.iter().flat_map(|m| m.data().iter().cloned()).collect()
    }
}

/// A family of per-vertex matrices `V_v -> W_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub components: Vec<Matrix<Q>>,
}

impl Morphism {
    pub fn is_intertwining(&self, algebra: &Algebra, source: &Representation, target: &Representation) -> Result<bool> {
        same_field(source, target)?;
        self.check_shapes(source, target)?;
        with_field!(source.field, f => {
            let (vm, wm, phi) = (source.lift(&f)?, target.lift(&f)?, self.lift(&f)?);
            Ok(algebra.quiver().arrows().iter().enumerate().all(|(k, a)| {
                matrix::mul(&f, &phi[a.target], &vm[k]) == matrix::mul(&f, &wm[k], &phi[a.source])
            }))
        })
    }

    fn check_shapes(&self, source: &Representation, target: &Representation) -> Result<()> {
        if self.components.len() != source.dims.len() {
            return Err(Error::Shape("morphism has the wrong number of components".into()));
        }
        for (v, m) in self.components.iter().enumerate() {
            if m.shape() != (target.dims[v], source.dims[v]) {
                return Err(Error::Shape(format!("morphism component at vertex {v} has wrong shape")));
            }
        }
        Ok(())
    }

    fn lift<F: Field>(&self, f: &F) -> Result<Vec<Matrix<F::Elem>>> {
        self.components.iter().map(|m| m.try_map(|x| f.from_q(x))).collect()
    }

    pub fn ranks(&self, field: FieldSpec) -> Result<Vec<usize>> {
        with_field!(field, f => {
            Ok(self.lift(&f)?.iter().map(|m| matrix::rank(&f, m)).collect())
        })
    }

    /// `other ∘ self`
    pub fn then(&self, other: &Morphism, field: FieldSpec) -> Result<Morphism> {
        with_field!(field, f => {
            let (a, b) = (self.lift(&f)?, other.lift(&f)?);
            let components = a
                .iter()
                .zip(&b)
                .map(|(x, y)| matrix::mul(&f, y, x).map(|e| f.to_q(e)))
                .collect();
            Ok(Morphism { components })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|m| m.data().iter().all(Zero::is_zero))
    }
}

fn same_field(v: &Representation, w: &Representation) -> Result<()> {
    if v.field != w.field {
        return Err(Error::FieldMismatch(format!("{} vs {}", v.field, w.field)));
    }
    Ok(())
}

/// Checks that `0 -> A -f-> B -g-> C -> 0` is a short exact sequence of
/// representations by rank computations over the common field.
pub fn is_short_exact(
    algebra: &Algebra,
    (a, b, c): (&Representation, &Representation, &Representation),
    f: &Morphism,
    g: &Morphism,
) -> Result<bool> {
    if !f.is_intertwining(algebra, a, b)? || !g.is_intertwining(algebra, b, c)? {
        return Ok(false);
    }
    if !f.then(g, b.field)?.is_zero() {
        return Ok(false);
    }
    let (rf, rg) = (f.ranks(b.field)?, g.ranks(b.field)?);
    Ok((0..b.dims.len()).all(|v| rf[v] == a.dims[v] && rg[v] == c.dims[v] && rf[v] + rg[v] == b.dims[v]))
}

pub(crate) fn hom_basis_in<F: Field>(
    f: &F,
    algebra: &Algebra,
    (vd, vm): (&[usize], &[Matrix<F::Elem>]),
    (wd, wm): (&[usize], &[Matrix<F::Elem>]),
) -> Vec<Vec<Matrix<F::Elem>>> {
    let n = vd.len();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for v in 0..n {
        offsets.push(offsets[v] + wd[v] * vd[v]);
    }
    let unknowns = offsets[n];
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * vd[v] + c;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (k, a) in algebra.quiver().arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        // (phi_j V(a) - W(a) phi_i)[r, c] = 0
        for r in 0..wd[j] {
            for c in 0..vd[i] {
                let mut row = vec![f.zero(); unknowns];
                for kk in 0..vd[j] {
                    let x = vm[k].get(kk, c);
                    if !f.is_zero(x) {
                        let idx = var(j, r, kk);
                        row[idx] = f.add(&row[idx], x);
                    }
                }
                for kk in 0..wd[i] {
                    let x = wm[k].get(r, kk);
                    if !f.is_zero(x) {
                        let idx = var(i, kk, c);
                        row[idx] = f.sub(&row[idx], x);
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(unknowns, rows).expect("row length");
    matrix::nullspace(f, &system)
        .into_iter()
        .map(|sol| {
            (0..n)
                .map(|v| Matrix::from_fn(wd[v], vd[v], |r, c| sol[var(v, r, c)].clone()))
                .collect()
        })
        .collect()
}

/// A basis of `Hom(V, W)`.
pub fn hom_space(algebra: &Algebra, v: &Representation, w: &Representation) -> Result<Vec<Morphism>> {
    same_field(v, w)?;
    v.check_shapes(algebra)?;
    w.check_shapes(algebra)?;
    with_field!(v.field, f => {
        let (vm, wm) = (v.lift(&f)?, w.lift(&f)?);
        Ok(hom_basis_in(&f, algebra, (&v.dims, &vm), (&w.dims, &wm))
            .into_iter()
            .map(|comps| Morphism { components: comps.iter().map(|m| m.map(|x| f.to_q(x))).collect() })
            .collect())
    })
}

pub fn end_dimension(algebra: &Algebra, v: &Representation) -> Result<usize> {
    Ok(hom_space(algebra, v, v)?.len())
}

fn all_invertible<F: Field>(f: &F, comps: &[Matrix<F::Elem>]) -> bool {
    comps.iter().all(|m| m.rows() == m.cols() && matrix::rank(f, m) == m.rows())
}

fn combine<F: Field>(f: &F, basis: &[Vec<Matrix<F::Elem>>], coeffs: &[F::Elem]) -> Vec<Matrix<F::Elem>> {
    let mut acc: Vec<Matrix<F::Elem>> = basis[0].iter().map(|m| matrix::zeros(f, m.rows(), m.cols())).collect();
    for (b, c) in basis.iter().zip(coeffs) {
        if f.is_zero(c) {
            continue;
        }
        for (a, m) in acc.iter_mut().zip(b) {
            *a = matrix::add(f, a, &matrix::scale(f, c, m));
        }
    }
    acc
}

/// Decides `V ≅ W` by searching `Hom(V, W)` for an element invertible at
/// every vertex.
///
/// Over `F_p` the whole Hom space is enumerated. Over the rationals, random
/// integer combinations are tried first; if none is invertible, the
/// determinant product (degree at most `Σ dims` in each coefficient) is
/// evaluated on the grid `{0..=Σ dims}^m`, which is exhaustive for a
/// polynomial of that degree.
pub fn is_isomorphic(algebra: &Algebra, v: &Representation, w: &Representation, guard: u64) -> Result<bool> {
    same_field(v, w)?;
    if v.dims != w.dims {
        return Ok(false);
    }
    if v.is_zero() {
        return Ok(true);
    }
    with_field!(v.field, f => {
        let (vm, wm) = (v.lift(&f)?, w.lift(&f)?);
        Ok(find_isomorphism_in(&f, algebra, (&v.dims, &vm), (&w.dims, &wm), guard)?.is_some())
    })
}

pub(crate) fn find_isomorphism_in<F: Field>(
    f: &F,
    algebra: &Algebra,
    v: (&[usize], &[Matrix<F::Elem>]),
    w: (&[usize], &[Matrix<F::Elem>]),
    guard: u64,
) -> Result<Option<Vec<Matrix<F::Elem>>>> {
    let basis = hom_basis_in(f, algebra, v, w);
    if basis.is_empty() {
        return Ok(None);
    }
    let m = basis.len() as u32;
    let degree = v.0.iter().sum::<usize>() as i64;
    let p = f.characteristic() as u64;
    if p == 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..32 {
            let coeffs: Vec<F::Elem> = (0..m).map(|_| f.from_i64(rng.gen_range(-1000..=1000))).collect();
            let phi = combine(f, &basis, &coeffs);
            if all_invertible(f, &phi) {
                return Ok(Some(phi));
            }
        }
        let points = (degree as u64 + 1).checked_pow(m).filter(|&n| n <= guard).ok_or_else(|| {
            Error::GuardExceeded(format!("isomorphism grid search over {m} coefficients exceeds {guard}"))
        })?;
        return Ok(scan(f, &basis, degree as u64 + 1, points));
    }
    let points = p.checked_pow(m).filter(|&n| n <= guard).ok_or_else(|| {
        Error::GuardExceeded(format!("Hom space of size {p}^{m} exceeds {guard}"))
    })?;
    Ok(scan(f, &basis, p, points))
}

fn scan<F: Field>(f: &F, basis: &[Vec<Matrix<F::Elem>>], radix: u64, points: u64) -> Option<Vec<Matrix<F::Elem>>> {
    for mut idx in 0..points {
        let coeffs: Vec<F::Elem> = (0..basis.len())
            .map(|_| {
                let d = idx % radix;
                idx /= radix;
                f.from_i64(d as i64)
            })
            .collect();
        let phi = combine(f, basis, &coeffs);
        if all_invertible(f, &phi) {
            return Some(phi);
        }
    }
    None
}

/// The indecomposable projective `P(i)`: paths starting at `i`, with arrows
/// acting by post-composition.
pub fn indecomposable_projective(algebra: &Algebra, vertex: usize, field: FieldSpec) -> Result<Representation> {
    let quiver = algebra.quiver();
    if vertex >= quiver.vertex_count() {
        return Err(Error::Precondition(format!("vertex {vertex} out of range")));
    }
    let basis = algebra.basis();
    let at: Vec<Vec<usize>> = (0..quiver.vertex_count())
        .map(|v| {
            (0..basis.len())
                .filter(|&k| basis[k].source() == vertex && basis[k].target(quiver) == v)
                .collect()
        })
        .collect();
    let dims: Vec<usize> = at.iter().map(Vec::len).collect();
    let mut maps = Vec::new();
    for (ai, a) in quiver.arrows().iter().enumerate() {
        let step = crate::quiver::Path::new(quiver, a.source, vec![ai])?;
        let mut m = Matrix::filled(dims[a.target], dims[a.source], Q::zero());
        for (col, &k) in at[a.source].iter().enumerate() {
            let nf = algebra.normal_form(&basis[k].then(&step));
            for (row, &kk) in at[a.target].iter().enumerate() {
                m.set(row, col, nf[kk].clone());
            }
        }
        maps.push(m);
    }
    Representation::new(field, dims, maps)
}

/// Radical layers `rad^e V / rad^{e+1} V`, top first, where `rad V` at a
/// vertex is the sum of the images of the incoming arrows.
pub fn loewy_structure(algebra: &Algebra, v: &Representation) -> Result<Vec<K0Class>> {
    v.check_shapes(algebra)?;
    with_field!(v.field, f => {
        let maps = v.lift(&f)?;
        let n = v.dims.len();
        let mut current: Vec<EchelonBasis<_>> = v.dims.iter().map(|&d| EchelonBasis::full(&f, d)).collect();
        let mut layers = Vec::new();
        loop {
            let mut images: Vec<Vec<Vec<_>>> = vec![Vec::new(); n];
            for (k, a) in algebra.quiver().arrows().iter().enumerate() {
                let src = &current[a.source];
                for r in 0..src.dim() {
                    images[a.target].push(matrix::mat_vec(&f, &maps[k], src.basis().row(r)));
                }
            }
            let next: Vec<EchelonBasis<_>> = images
                .into_iter()
                .enumerate()
                .map(|(t, vecs)| EchelonBasis::span(&f, v.dims[t], vecs))
                .collect();
            let layer = K0Class::new((0..n).map(|t| (current[t].dim() - next[t].dim()) as i64).collect());
            if layer.is_zero() {
                break;
            }
            layers.push(layer);
            current = next;
        }
        Ok(layers)
    })
}
