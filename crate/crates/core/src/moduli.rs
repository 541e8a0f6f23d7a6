//! Moduli sets over `F_p`: semistable representations of a fixed class up to
//! S-equivalence, found by brute force.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField};
use crate::k0::{K0Class, SlopeData};
use crate::matrix::{self, Matrix};
use crate::quiver::Algebra;
use crate::rep::{find_isomorphism_in, hom_basis_in, Representation, DEFAULT_HOM_GUARD};
use crate::stability::{classify_stability, stable_factor_filtration, EnumerationOrder};

/// Budget on the number of matrix tuples scanned.
pub const DEFAULT_MODULI_GUARD: u64 = 10_000_000;

/// One S-equivalence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliClass {
    /// Canonical representative of the polystable member.
    pub representative: Representation,
    /// Sorted stable-factor classes.
    pub factors: Vec<K0Class>,
    /// How many isomorphism classes fall into this S-class.
    pub absorbed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliSet {
    pub gamma: K0Class,
    pub field: FieldSpec,
    /// Sorted by factor multiset.
    pub classes: Vec<ModuliClass>,
}

fn check_gamma(algebra: &Algebra, gamma: &K0Class) -> Result<Vec<usize>> {
    if gamma.len() != algebra.vertex_count() {
        return Err(Error::DimensionMismatch { expected: algebra.vertex_count(), found: gamma.len() });
    }
    gamma
        .mults()
        .iter()
        .map(|&m| usize::try_from(m).map_err(|_| Error::Precondition(format!("{gamma} has a negative entry"))))
        .collect()
}

fn relations_hold(f: &PrimeField, algebra: &Algebra, dims: &[usize], maps: &[Matrix<u32>]) -> Result<bool> {
    for rel in algebra.relations() {
        let (s, t) = (rel.source(), rel.target(algebra.quiver()));
        let mut acc = matrix::zeros(f, dims[t], dims[s]);
        for (c, path) in rel.terms() {
            let mut m = matrix::identity(f, dims[s]);
            for &a in path.arrows() {
                m = matrix::mul(f, &maps[a], &m);
            }
            acc = matrix::add(f, &acc, &matrix::scale(f, &f.from_q(c)?, &m));
        }
        if !matrix::is_zero(f, &acc) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every representation of class `gamma` over `F_p`, one per isomorphism
/// class; each is the least matrix encoding in its class.
pub fn enumerate_reps_up_to_iso(algebra: &Algebra, gamma: &K0Class, p: u32, guard: u64) -> Result<Vec<Representation>> {
    let dims = check_gamma(algebra, gamma)?;
    if gamma.is_zero() {
        return Ok(Vec::new());
    }
    let f = PrimeField::new(p)?;
    let shapes: Vec<(usize, usize)> =
        algebra.quiver().arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let total = (p as u64)
        .checked_pow(entries as u32)
        .filter(|&n| n <= guard)
        .ok_or_else(|| Error::GuardExceeded(format!("{p}^{entries} matrix tuples for class {gamma} exceed {guard}")))?;
    // Found classes, keyed by cheap invariants: arrow ranks and End dimension.
    let mut found: Vec<(Vec<usize>, usize, Vec<Matrix<u32>>)> = Vec::new();
    let mut digits = vec![0u32; entries];
    for idx in 0..total {
        if idx > 0 {
            // First entry is the most significant, so idx order is encoding order.
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < p {
                    break;
                }
                *d = 0;
            }
        }
        let mut offset = 0;
        let maps: Vec<Matrix<u32>> = shapes
            .iter()
            .map(|&(r, c)| {
                let m = Matrix::from_row_major(r, c, digits[offset..offset + r * c].to_vec()).expect("shape");
                offset += r * c;
                m
            })
            .collect();
        if !relations_hold(&f, algebra, &dims, &maps)? {
            continue;
        }
        let ranks: Vec<usize> = maps.iter().map(|m| matrix::rank(&f, m)).collect();
        let end = hom_basis_in(&f, algebra, (&dims, &maps), (&dims, &maps)).len();
        let mut known = false;
        for (r, e, other) in &found {
            if *r == ranks
                && *e == end
                && find_isomorphism_in(&f, algebra, (&dims, &maps), (&dims, other), DEFAULT_HOM_GUARD)?.is_some()
            {
                known = true;
                break;
            }
        }
        if !known {
            found.push((ranks, end, maps));
        }
    }
    Ok(found
        .into_iter()
        .map(|(_, _, maps)| Representation::from_field_maps(&f, FieldSpec::Prime(p), dims.clone(), &maps))
        .collect())
}

fn direct_sum_all(algebra: &Algebra, field: FieldSpec, parts: &[Representation]) -> Result<Representation> {
    parts.iter().try_fold(Representation::zero(field, algebra), |acc, r| acc.direct_sum(r))
}

/// The semistable representations of class `gamma` over `F_p`, grouped by
/// stable factors.
pub fn moduli_set(algebra: &Algebra, gamma: &K0Class, p: u32, s: &SlopeData, guard: u64) -> Result<ModuliSet> {
    let field = FieldSpec::prime(p)?;
    let reps = enumerate_reps_up_to_iso(algebra, gamma, p, guard)?;
    let mut groups: BTreeMap<Vec<K0Class>, (Vec<Representation>, Vec<Representation>)> = BTreeMap::new();
    for rep in reps {
        if !classify_stability(algebra, &rep, s, guard)?.is_semistable() {
            continue;
        }
        let sf = stable_factor_filtration(algebra, &rep, s, guard, EnumerationOrder::Canonical)?;
        groups.entry(sf.factors).or_insert_with(|| (Vec::new(), sf.pieces)).0.push(rep);
    }
    let mut classes = Vec::with_capacity(groups.len());
    for (factors, (members, pieces)) in groups {
        let polystable = direct_sum_all(algebra, field, &pieces)?;
        let mut representative = None;
        for m in &members {
            if crate::rep::is_isomorphic(algebra, m, &polystable, DEFAULT_HOM_GUARD)? {
                representative = Some(m.clone());
                break;
            }
        }
        let representative = representative.ok_or_else(|| {
            Error::Precondition(format!("no enumerated representative is isomorphic to the polystable object {factors:?}"))
        })?;
        classes.push(ModuliClass { representative, factors, absorbed: members.len() });
    }
    Ok(ModuliSet { gamma: gamma.clone(), field, classes })
}

/// Checks that `End(v)` is local: every endomorphism is invertible or
/// nilpotent. Exhaustive, so only over `F_p`.
pub fn has_local_endomorphisms(algebra: &Algebra, v: &Representation, guard: u64) -> Result<bool> {
    let FieldSpec::Prime(p) = v.field() else {
        return Err(Error::RequiresFiniteField("End-local check enumerates End(V)".into()));
    };
    v.check_shapes(algebra)?;
    if v.is_zero() {
        return Ok(false);
    }
    let f = PrimeField::new(p)?;
    let maps = v.lift(&f)?;
    let basis = hom_basis_in(&f, algebra, (v.dims(), &maps), (v.dims(), &maps));
    let points = (p as u64)
        .checked_pow(basis.len() as u32)
        .filter(|&n| n <= guard)
        .ok_or_else(|| Error::GuardExceeded(format!("End space of size {p}^{} exceeds {guard}", basis.len())))?;
    for mut idx in 0..points {
        let coeffs: Vec<u32> = (0..basis.len())
            .map(|_| {
                let d = (idx % p as u64) as u32;
                idx /= p as u64;
                d
            })
            .collect();
        let phi: Vec<Matrix<u32>> = (0..v.dims().len())
            .map(|vtx| {
                basis.iter().zip(&coeffs).fold(matrix::zeros(&f, v.dims()[vtx], v.dims()[vtx]), |acc, (b, c)| {
                    matrix::add(&f, &acc, &matrix::scale(&f, c, &b[vtx]))
                })
            })
            .collect();
        let invertible = phi.iter().all(|m| matrix::rank(&f, m) == m.rows());
        let nilpotent = phi.iter().all(|m| {
            let mut power = matrix::identity(&f, m.rows());
            for _ in 0..m.rows() {
                power = matrix::mul(&f, &power, m);
            }
            matrix::is_zero(&f, &power)
        });
        if !invertible && !nilpotent {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Moduli set assembled from a list of pairwise non-isomorphic
/// indecomposables: a direct sum is semistable iff its summands are, with
/// equal slopes.
pub fn krull_schmidt_moduli(
    algebra: &Algebra,
    indecomposables: &[Representation],
    gamma: &K0Class,
    s: &SlopeData,
    guard: u64,
) -> Result<ModuliSet> {
    check_gamma(algebra, gamma)?;
    let field = match indecomposables.first() {
        Some(r) => r.field(),
        None => return Err(Error::Precondition("no indecomposables supplied".into())),
    };
    let mut usable = Vec::new();
    for (i, r) in indecomposables.iter().enumerate() {
        if r.field() != field {
            return Err(Error::FieldMismatch(format!("indecomposable {i} is over {}, expected {field}", r.field())));
        }
        r.check(algebra)?;
        if !has_local_endomorphisms(algebra, r, guard)? {
            return Err(Error::Precondition(format!("indecomposable {i} has a non-local endomorphism ring")));
        }
        let cls = r.dimension_vector();
        if !cls.fits_in(gamma) || !classify_stability(algebra, r, s, guard)?.is_semistable() {
            continue;
        }
        let sf = stable_factor_filtration(algebra, r, s, guard, EnumerationOrder::Canonical)?;
        usable.push((r, cls, sf));
    }
    let mut groups: BTreeMap<Vec<K0Class>, Vec<Vec<usize>>> = BTreeMap::new();
    let mut chosen = Vec::new();
    collect_multisets(&usable.iter().map(|u| u.1.clone()).collect::<Vec<_>>(), 0, gamma.clone(), &mut chosen, &mut |pick| {
        let first = &usable[pick[0]].2.slope;
        if pick.iter().any(|&i| usable[i].2.slope != *first) {
            return;
        }
        let mut factors: Vec<K0Class> = pick.iter().flat_map(|&i| usable[i].2.factors.iter().cloned()).collect();
        factors.sort();
        groups.entry(factors).or_default().push(pick.to_vec());
    });
    let mut classes = Vec::with_capacity(groups.len());
    for (factors, members) in groups {
        // Prefer the member built from stable summands only.
        let best = members
            .iter()
            .find(|m| m.iter().all(|&i| usable[i].2.factors.len() == 1))
            .unwrap_or(&members[0]);
        let parts: Vec<Representation> = best.iter().map(|&i| usable[i].0.clone()).collect();
        classes.push(ModuliClass {
            representative: direct_sum_all(algebra, field, &parts)?,
            factors,
            absorbed: members.len(),
        });
    }
    Ok(ModuliSet { gamma: gamma.clone(), field, classes })
}

/// Multisets (as nondecreasing index lists) of `classes` summing to `rest`.
fn collect_multisets(
    classes: &[K0Class],
    start: usize,
    rest: K0Class,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if rest.is_zero() {
        if !chosen.is_empty() {
            visit(chosen);
        }
        return;
    }
    for i in start..classes.len() {
        if classes[i].is_zero() || !classes[i].fits_in(&rest) {
            continue;
        }
        chosen.push(i);
        let next = rest.checked_sub(&classes[i]).expect("same length");
        collect_multisets(classes, i, next, chosen, visit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::{OrderedSpace, OrderedVector};
    use crate::quiver::{Arrow, Path, Quiver, Relation};
    use crate::rational::q;
    use crate::rep::is_isomorphic;

    fn sl2() -> Algebra {
        let quiver = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow { name: "a".into(), source: 0, target: 1 },
                Arrow { name: "b".into(), source: 1, target: 0 },
            ],
        )
        .unwrap();
        let ab = Path::from_composition_order(&quiver, &["a", "b"]).unwrap();
        Algebra::new(quiver.clone(), vec![Relation::monomial(&quiver, ab).unwrap()]).unwrap()
    }

    fn slope(x2: i64) -> SlopeData {
        SlopeData::new(
            vec!["1".into(), "2".into()],
            OrderedSpace::new(1).unwrap(),
            vec![OrderedVector::from_ints(&[-2 * x2]), OrderedVector::from_ints(&[0])],
            vec![q(1), q(1)],
        )
        .unwrap()
    }

    fn rep2(alg: &Algebra, dims: [usize; 2], a: Vec<Vec<i64>>, b: Vec<Vec<i64>>) -> Representation {
        Representation::from_int_rows(FieldSpec::Prime(2), dims.to_vec(), &[a, b], alg).unwrap()
    }

    const G: u64 = DEFAULT_MODULI_GUARD;

    #[test]
    fn iso_classes_of_small_classes() {
        let alg = sl2();
        let reps = enumerate_reps_up_to_iso(&alg, &K0Class::new(vec![1, 1]), 2, G).unwrap();
        let enc: Vec<Vec<String>> =
            reps.iter().map(|r| r.encoding().iter().map(|x| x.to_string()).collect()).collect();
        assert_eq!(enc, vec![vec!["0", "0"], vec!["0", "1"], vec!["1", "0"]]);
        assert_eq!(enumerate_reps_up_to_iso(&alg, &K0Class::new(vec![1, 0]), 2, G).unwrap().len(), 1);
        assert!(enumerate_reps_up_to_iso(&alg, &K0Class::new(vec![0, 0]), 2, G).unwrap().is_empty());
        assert!(matches!(
            enumerate_reps_up_to_iso(&alg, &K0Class::new(vec![3, 3]), 3, 1000),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn moduli_for_class_one_one() {
        let alg = sl2();
        let gamma = K0Class::new(vec![1, 1]);
        let m0 = rep2(&alg, [1, 1], vec![vec![0]], vec![vec![1]]);
        let ms = rep2(&alg, [1, 1], vec![vec![1]], vec![vec![0]]);
        let m = moduli_set(&alg, &gamma, 2, &slope(1), G).unwrap();
        assert_eq!(m.classes.len(), 1);
        assert!(is_isomorphic(&alg, &m.classes[0].representative, &m0, DEFAULT_HOM_GUARD).unwrap());
        let m = moduli_set(&alg, &gamma, 2, &slope(-1), G).unwrap();
        assert_eq!(m.classes.len(), 1);
        assert!(is_isomorphic(&alg, &m.classes[0].representative, &ms, DEFAULT_HOM_GUARD).unwrap());
        let m = moduli_set(&alg, &gamma, 2, &slope(0), G).unwrap();
        assert_eq!(m.classes.len(), 1);
        assert_eq!(m.classes[0].absorbed, 3);
        assert_eq!(m.classes[0].factors, vec![K0Class::new(vec![0, 1]), K0Class::new(vec![1, 0])]);
        assert!(m.classes[0].representative.maps().iter().all(|x| x.data().iter().all(|e| *e == q(0))));
    }

    #[test]
    fn krull_schmidt_small() {
        let alg = sl2();
        let inds = vec![
            rep2(&alg, [0, 1], vec![vec![]], vec![]),
            rep2(&alg, [1, 0], vec![], vec![vec![]]),
            rep2(&alg, [1, 1], vec![vec![0]], vec![vec![1]]),
            rep2(&alg, [1, 1], vec![vec![1]], vec![vec![0]]),
            rep2(&alg, [2, 1], vec![vec![1, 0]], vec![vec![0], vec![1]]),
        ];
        let ks = krull_schmidt_moduli(&alg, &inds, &K0Class::new(vec![1, 1]), &slope(1), G).unwrap();
        assert_eq!(ks.classes.len(), 1);
        assert_eq!(ks.classes[0].factors, vec![K0Class::new(vec![1, 1])]);
        let ks = krull_schmidt_moduli(&alg, &inds, &K0Class::new(vec![1, 0]), &slope(5), G).unwrap();
        assert_eq!(ks.classes.len(), 1);
        let ks = krull_schmidt_moduli(&alg, &inds, &K0Class::new(vec![2, 2]), &slope(1), G).unwrap();
        assert_eq!(ks.classes.len(), 1);
        assert_eq!(ks.classes[0].representative.dims(), &[2, 2]);
        let decomposable = rep2(&alg, [1, 1], vec![vec![0]], vec![vec![0]]);
        assert!(!has_local_endomorphisms(&alg, &decomposable, G).unwrap());
        assert!(matches!(
            krull_schmidt_moduli(&alg, &[decomposable], &K0Class::new(vec![1, 1]), &slope(1), G),
            Err(Error::Precondition(_))
        ));
    }
}
