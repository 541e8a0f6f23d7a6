//! Stability of actual representations over prime fields, by exhaustive
//! enumeration of subrepresentations.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField};
use crate::k0::{Character, K0Class, SlopeData, SlopeValue, Verdict};
use crate::matrix::{self, EchelonBasis, Matrix};
use crate::quiver::Algebra;
use crate::rep::Representation;
use crate::subspace::{all_subspaces, subspace_count};

/// Budget on the number of subspace tuples scanned per enumeration.
pub const DEFAULT_ENUMERATION_GUARD: u64 = 10_000_000;

/// Order in which candidate subspaces are visited. Results that are claimed
/// to be intrinsic must not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnumerationOrder {
    #[default]
    Canonical,
    /// Candidates at each vertex permuted by a seeded shuffle.
    Shuffled(u64),
}

/// A subrepresentation: one echelon basis per vertex, in the coordinates of
/// the ambient representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubrepFamily {
    field: FieldSpec,
    spaces: Vec<EchelonBasis<crate::rational::Q>>,
}

impl SubrepFamily {
    fn from_fp(f: &PrimeField, spaces: &[EchelonBasis<u32>]) -> Self {
        let spaces = spaces
            .iter()
            .map(|s| EchelonBasis::from_rref(s.basis().map(|x| f.to_q(x)), s.pivots().to_vec()))
            .collect();
        Self { field: FieldSpec::Prime(f.p()), spaces }
    }

    fn to_fp(&self, f: &PrimeField) -> Vec<EchelonBasis<u32>> {
        self.spaces
            .iter()
            .map(|s| {
                let basis = s.basis().map(|x| f.from_q(x).expect("stored residues are integral"));
                EchelonBasis::from_rref(basis, s.pivots().to_vec())
            })
            .collect()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn spaces(&self) -> &[EchelonBasis<crate::rational::Q>] {
        &self.spaces
    }

    pub fn class(&self) -> K0Class {
        K0Class::new(self.spaces.iter().map(|s| s.dim() as i64).collect())
    }

    /// Checks `V(a)·U_i ⊆ U_j` for every arrow `a: i -> j`.
    pub fn is_invariant(&self, algebra: &Algebra, v: &Representation) -> Result<bool> {
        let fp = FpRep::new(algebra, v)?;
        Ok(fp.is_invariant(algebra, &self.to_fp(&fp.f)))
    }

    /// The subrepresentation itself, in the chosen echelon bases.
    pub fn as_representation(&self, algebra: &Algebra, v: &Representation) -> Result<Representation> {
        let fp = FpRep::new(algebra, v)?;
        Ok(fp.restrict(algebra, &self.to_fp(&fp.f)).into_rep())
    }

    /// `V / U`, using the standard vectors off the pivot columns as a basis.
    pub fn quotient(&self, algebra: &Algebra, v: &Representation) -> Result<Representation> {
        let fp = FpRep::new(algebra, v)?;
        Ok(fp.quotient(algebra, &self.to_fp(&fp.f)).0.into_rep())
    }
}

/// A representation with entries lifted into `F_p`.
#[derive(Debug, Clone)]
struct FpRep {
    f: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix<u32>>,
}

impl FpRep {
    fn new(algebra: &Algebra, v: &Representation) -> Result<Self> {
        v.check_shapes(algebra)?;
        let FieldSpec::Prime(p) = v.field() else {
            return Err(Error::RequiresFiniteField(
                "subrepresentations are enumerated over F_p only; reduce the representation modulo a prime first".into(),
            ));
        };
        let f = PrimeField::new(p)?;
        Ok(Self { f, dims: v.dims().to_vec(), maps: v.lift(&f)? })
    }

    fn into_rep(self) -> Representation {
        Representation::from_field_maps(&self.f, FieldSpec::Prime(self.f.p()), self.dims, &self.maps)
    }

    fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    fn class(&self) -> K0Class {
        K0Class::new(self.dims.iter().map(|&d| d as i64).collect())
    }

    fn maps_into(&self, k: usize, u: &EchelonBasis<u32>, w: &EchelonBasis<u32>) -> bool {
        (0..u.dim()).all(|r| w.contains(&self.f, &matrix::mat_vec(&self.f, &self.maps[k], u.basis().row(r))))
    }

    fn is_invariant(&self, algebra: &Algebra, spaces: &[EchelonBasis<u32>]) -> bool {
        algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(k, a)| self.maps_into(k, &spaces[a.source], &spaces[a.target]))
    }

    /// Restriction to an invariant subspace tuple, in its echelon basis.
    fn restrict(&self, algebra: &Algebra, sub: &[EchelonBasis<u32>]) -> FpRep {
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (si, sj) = (&sub[a.source], &sub[a.target]);
                let images: Vec<Vec<u32>> =
                    (0..si.dim()).map(|c| matrix::mat_vec(&self.f, &self.maps[k], si.basis().row(c))).collect();
                // In reduced echelon form, coordinates are the entries on pivot columns.
                Matrix::from_fn(sj.dim(), si.dim(), |r, c| images[c][sj.pivots()[r]])
            })
            .collect();
        FpRep { f: self.f, dims: sub.iter().map(EchelonBasis::dim).collect(), maps }
    }

    /// Quotient by an invariant subspace tuple, with the complement columns
    /// used at each vertex.
    fn quotient(&self, algebra: &Algebra, sub: &[EchelonBasis<u32>]) -> (FpRep, Vec<Vec<usize>>) {
        let comps: Vec<Vec<usize>> = sub.iter().map(EchelonBasis::complement_columns).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (ci, cj) = (&comps[a.source], &comps[a.target]);
                let images: Vec<Vec<u32>> = ci
                    .iter()
                    .map(|&c| {
                        let col: Vec<u32> = (0..self.maps[k].rows()).map(|r| *self.maps[k].get(r, c)).collect();
                        sub[a.target].reduce(&self.f, &col)
                    })
                    .collect();
                Matrix::from_fn(cj.len(), ci.len(), |r, c| images[c][cj[r]])
            })
            .collect();
        let dims = comps.iter().map(Vec::len).collect();
        (FpRep { f: self.f, dims, maps }, comps)
    }

    /// Visits every invariant subspace tuple.
    fn walk(
        &self,
        algebra: &Algebra,
        order: EnumerationOrder,
        guard: u64,
        visit: &mut dyn FnMut(&[&EchelonBasis<u32>]),
    ) -> Result<()> {
        let p = self.f.p();
        let too_big = || {
            Error::GuardExceeded(format!(
                "more than {guard} subspace tuples for dimension vector {} over F_{p}; use a smaller prime or dimension vector",
                self.class()
            ))
        };
        let mut tuples: u128 = 1;
        for &d in &self.dims {
            tuples = subspace_count(p, d).and_then(|c| tuples.checked_mul(c)).ok_or_else(too_big)?;
        }
        if tuples > guard as u128 {
            return Err(too_big());
        }
        let mut candidates: Vec<Vec<EchelonBasis<u32>>> =
            self.dims.iter().map(|&d| all_subspaces(&self.f, d, u128::MAX)).collect::<Result<_>>()?;
        if let EnumerationOrder::Shuffled(seed) = order {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for c in &mut candidates {
                c.shuffle(&mut rng);
            }
        }
        // Arrows become checkable once both endpoints are placed.
        let n = self.dims.len();
        let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
        for (k, a) in algebra.quiver().arrows().iter().enumerate() {
            checks[a.source.max(a.target)].push((k, a.source, a.target));
        }
        let mut chosen: Vec<&EchelonBasis<u32>> = Vec::with_capacity(n);
        self.descend(&candidates, &checks, &mut chosen, visit);
        Ok(())
    }

    fn descend<'c>(
        &self,
        candidates: &'c [Vec<EchelonBasis<u32>>],
        checks: &[Vec<(usize, usize, usize)>],
        chosen: &mut Vec<&'c EchelonBasis<u32>>,
        visit: &mut dyn FnMut(&[&EchelonBasis<u32>]),
    ) {
        let v = chosen.len();
        if v == candidates.len() {
            visit(chosen);
            return;
        }
        for cand in &candidates[v] {
            chosen.push(cand);
            if checks[v].iter().all(|&(k, i, j)| self.maps_into(k, chosen[i], chosen[j])) {
                self.descend(candidates, checks, chosen, visit);
            }
            chosen.pop();
        }
    }

    /// Dimension vectors of all subrepresentations, each with the first
    /// witness met in the given order.
    fn classes(
        &self,
        algebra: &Algebra,
        order: EnumerationOrder,
        guard: u64,
    ) -> Result<BTreeMap<K0Class, Vec<EchelonBasis<u32>>>> {
        let mut out = BTreeMap::new();
        self.walk(algebra, order, guard, &mut |tuple| {
            let cls = K0Class::new(tuple.iter().map(|s| s.dim() as i64).collect());
            out.entry(cls).or_insert_with(|| tuple.iter().map(|s| (*s).clone()).collect());
        })?;
        Ok(out)
    }

    /// Largest-slope, then largest nonzero subrepresentation.
    fn max_destabilizer(
        &self,
        algebra: &Algebra,
        s: &SlopeData,
        order: EnumerationOrder,
        guard: u64,
    ) -> Result<(K0Class, Vec<EchelonBasis<u32>>)> {
        let classes = self.classes(algebra, order, guard)?;
        let mut best: Option<(K0Class, SlopeValue)> = None;
        for cls in classes.keys().filter(|c| !c.is_zero()) {
            let sv = s.slope_value(cls)?;
            let better = match &best {
                None => true,
                Some((b, bv)) => sv.cmp(bv).then(cls.total().cmp(&b.total())) == Ordering::Greater,
            };
            if better {
                best = Some((cls.clone(), sv));
            }
        }
        let (cls, sv) = best.expect("nonzero representation has itself as a subrepresentation");
        let ties = classes
            .keys()
            .filter(|c| !c.is_zero() && c.total() == cls.total())
            .filter(|c| s.slope_value(c).is_ok_and(|v| v.cmp(&sv) == Ordering::Equal))
            .count();
        assert_eq!(ties, 1, "maximal destabilizing class is not unique");
        let witness = classes[&cls].clone();
        Ok((cls, witness))
    }
}

fn nonzero(algebra: &Algebra, v: &Representation) -> Result<FpRep> {
    let fp = FpRep::new(algebra, v)?;
    if fp.total() == 0 {
        return Err(Error::ZeroObject("stability is undefined for the zero representation".into()));
    }
    Ok(fp)
}

/// Every dimension vector of a subrepresentation of `v`, including zero and
/// `[v]`, with one witness each.
pub fn enumerate_subrep_classes(
    algebra: &Algebra,
    v: &Representation,
    guard: u64,
    order: EnumerationOrder,
) -> Result<BTreeMap<K0Class, SubrepFamily>> {
    let fp = FpRep::new(algebra, v)?;
    Ok(fp
        .classes(algebra, order, guard)?
        .into_iter()
        .map(|(cls, w)| (cls, SubrepFamily::from_fp(&fp.f, &w)))
        .collect())
}

fn proper_classes(fp: &FpRep, algebra: &Algebra, guard: u64) -> Result<Vec<K0Class>> {
    let gamma = fp.class();
    Ok(fp
        .classes(algebra, EnumerationOrder::Canonical, guard)?
        .into_keys()
        .filter(|c| !c.is_zero() && *c != gamma)
        .collect())
}

pub fn classify_stability(algebra: &Algebra, v: &Representation, s: &SlopeData, guard: u64) -> Result<Verdict> {
    let fp = nonzero(algebra, v)?;
    let subs = proper_classes(&fp, algebra, guard)?;
    s.k0_verdict(&fp.class(), &subs)
}

/// Verdict under an integer character bound to `[v]`.
pub fn classify_by_character(algebra: &Algebra, v: &Representation, theta: &Character, guard: u64) -> Result<Verdict> {
    let fp = nonzero(algebra, v)?;
    if theta.bound_class != fp.class() {
        return Err(Error::Precondition(format!(
            "character is bound to {}, representation has class {}",
            theta.bound_class,
            fp.class()
        )));
    }
    theta.verdict(&proper_classes(&fp, algebra, guard)?)
}

/// The subrepresentation of maximal slope and, among those, maximal
/// dimension. It is `v` itself exactly when `v` is semistable.
pub fn max_destabilizer(
    algebra: &Algebra,
    v: &Representation,
    s: &SlopeData,
    guard: u64,
    order: EnumerationOrder,
) -> Result<SubrepFamily> {
    let fp = nonzero(algebra, v)?;
    let (_, w) = fp.max_destabilizer(algebra, s, order, guard)?;
    Ok(SubrepFamily::from_fp(&fp.f, &w))
}

#[derive(Debug, Clone)]
pub struct HNStep {
    /// `F^k`, in the coordinates of the filtered representation.
    pub subrep: SubrepFamily,
    pub factor_class: K0Class,
    pub factor_slope: SlopeValue,
    /// `F^k / F^{k-1}` in the bases chosen during the recursion.
    pub factor: Representation,
}

/// `0 = F^0 ⊂ F^1 ⊂ … ⊂ F^n = V` with semistable factors of strictly
/// decreasing slope.
#[derive(Debug, Clone)]
pub struct HNFiltration {
    pub steps: Vec<HNStep>,
}

impl HNFiltration {
    pub fn factor_classes(&self) -> Vec<K0Class> {
        self.steps.iter().map(|s| s.factor_class.clone()).collect()
    }
}

pub fn hn_filtration(
    algebra: &Algebra,
    v: &Representation,
    s: &SlopeData,
    guard: u64,
    order: EnumerationOrder,
) -> Result<HNFiltration> {
    let fp = nonzero(algebra, v)?;
    let f = fp.f;
    let n = fp.dims.len();
    let mut current = fp.clone();
    let mut filtered: Vec<EchelonBasis<u32>> = fp.dims.iter().map(|&d| EchelonBasis::zero(d)).collect();
    // Rows: the current quotient's basis vectors, lifted to V.
    let mut lift: Vec<Matrix<u32>> = fp.dims.iter().map(|&d| matrix::identity(&f, d)).collect();
    let mut steps = Vec::new();
    while current.total() > 0 {
        let (cls, witness) = current.max_destabilizer(algebra, s, order, guard)?;
        for vtx in 0..n {
            let lifted = matrix::mul(&f, witness[vtx].basis(), &lift[vtx]);
            let mut rows = filtered[vtx].basis().row_vecs();
            rows.extend(lifted.row_vecs());
            filtered[vtx] = EchelonBasis::span(&f, fp.dims[vtx], rows);
        }
        let factor = current.restrict(algebra, &witness).into_rep();
        let (next, comps) = current.quotient(algebra, &witness);
        for vtx in 0..n {
            let old = &lift[vtx];
            lift[vtx] = Matrix::from_fn(comps[vtx].len(), old.cols(), |r, c| *old.get(comps[vtx][r], c));
        }
        steps.push(HNStep {
            subrep: SubrepFamily::from_fp(&f, &filtered),
            factor_slope: s.slope_value(&cls)?,
            factor_class: cls,
            factor,
        });
        current = next;
    }
    Ok(HNFiltration { steps })
}

/// The stable factors of a semistable representation, all of its slope.
#[derive(Debug, Clone)]
pub struct StableFactorData {
    pub slope: SlopeValue,
    /// Sorted.
    pub factors: Vec<K0Class>,
    /// The factors as representations, in extraction order.
    pub pieces: Vec<Representation>,
}

pub fn stable_factor_filtration(
    algebra: &Algebra,
    v: &Representation,
    s: &SlopeData,
    guard: u64,
    order: EnumerationOrder,
) -> Result<StableFactorData> {
    let fp = nonzero(algebra, v)?;
    let gamma = fp.class();
    if !s.k0_verdict(&gamma, &proper_classes(&fp, algebra, guard)?)?.is_semistable() {
        return Err(Error::Unstable);
    }
    let slope = s.slope_value(&gamma)?;
    let mut current = fp;
    let mut factors = Vec::new();
    let mut pieces = Vec::new();
    while current.total() > 0 {
        let classes = current.classes(algebra, order, guard)?;
        let mut pick: Option<&K0Class> = None;
        for cls in classes.keys().filter(|c| !c.is_zero()) {
            if s.slope_value(cls)? != slope {
                continue;
            }
            if pick.map_or(true, |p| cls.total() < p.total()) {
                pick = Some(cls);
            }
        }
        let cls = pick.expect("the whole quotient has the common slope").clone();
        let witness = &classes[&cls];
        pieces.push(current.restrict(algebra, witness).into_rep());
        factors.push(cls);
        current = current.quotient(algebra, witness).0;
    }
    factors.sort();
    Ok(StableFactorData { slope, factors, pieces })
}

/// Same class, both semistable, same stable factors.
pub fn s_equivalent(
    algebra: &Algebra,
    v: &Representation,
    w: &Representation,
    s: &SlopeData,
    guard: u64,
) -> Result<bool> {
    if v.dimension_vector() != w.dimension_vector() {
        return Err(Error::Precondition(format!(
            "classes differ: {} vs {}",
            v.dimension_vector(),
            w.dimension_vector()
        )));
    }
    let a = stable_factor_filtration(algebra, v, s, guard, EnumerationOrder::Canonical)?;
    let b = stable_factor_filtration(algebra, w, s, guard, EnumerationOrder::Canonical)?;
    Ok(a.factors == b.factors)
}
