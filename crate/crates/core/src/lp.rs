//! Exact rational feasibility by Gaussian substitution of equalities followed
//! by Fourier–Motzkin elimination of inequalities.
//!
//! Problem sizes in this crate are tiny (a handful of variables, at most a
//! few thousand constraints), so the doubly exponential worst case of
//! Fourier–Motzkin is kept in check by normalising and deduplicating the
//! constraint set after every elimination step.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `a·x = b`
    Eq,
    /// `a·x >= b`
    Ge,
    /// `a·x <= b`
    Le,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, relation: Relation, rhs: Q) -> Self {
        Self { coeffs, relation, rhs }
    }

    pub fn is_satisfied_by(&self, x: &[Q]) -> bool {
        let lhs: Q = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Le => lhs <= self.rhs,
        }
    }
}

/// `coeffs·x >= rhs` over the currently live variables.
#[derive(Debug, Clone)]
struct Ineq {
    coeffs: Vec<Q>,
    rhs: Q,
}

/// Finds a rational point satisfying every constraint, or `None` if the
/// system is infeasible. Free coordinates are chosen as close to zero as the
/// constraints allow.
pub fn find_feasible_point(num_vars: usize, constraints: &[Constraint]) -> Option<Vec<Q>> {
    let mut ineqs: Vec<Ineq> = Vec::new();
    let mut eqs: Vec<(Vec<Q>, Q)> = Vec::new();
    for c in constraints {
        assert_eq!(c.coeffs.len(), num_vars, "constraint arity mismatch");
        match c.relation {
            Relation::Eq => eqs.push((c.coeffs.clone(), c.rhs.clone())),
            Relation::Ge => ineqs.push(Ineq { coeffs: c.coeffs.clone(), rhs: c.rhs.clone() }),
            Relation::Le => ineqs.push(Ineq {
                coeffs: c.coeffs.iter().map(|a| -a).collect(),
                rhs: -&c.rhs,
            }),
        }
    }

    // Each substitution reads x[pivot] = (rhs - sum_{k != pivot} a_k x_k) / a_pivot.
    let mut substitutions: Vec<(usize, Vec<Q>, Q)> = Vec::new();
    while let Some((mut a, mut b)) = eqs.pop() {
        for (pivot, row, rhs) in &substitutions {
            substitute(&mut a, &mut b, *pivot, row, rhs);
        }
        let Some(pivot) = a.iter().position(|x| !x.is_zero()) else {
            if b.is_zero() {
                continue;
            }
            return None;
        };
        let lead = a[pivot].clone();
        let row: Vec<Q> = a.iter().map(|x| x / &lead).collect();
        let rhs = &b / &lead;
        for (_, other, other_rhs) in substitutions.iter_mut() {
            substitute(other, other_rhs, pivot, &row, &rhs);
        }
        for (other, other_rhs) in eqs.iter_mut() {
            substitute(other, other_rhs, pivot, &row, &rhs);
        }
        substitutions.push((pivot, row, rhs));
    }
    for ineq in ineqs.iter_mut() {
        for (pivot, row, rhs) in &substitutions {
            substitute(&mut ineq.coeffs, &mut ineq.rhs, *pivot, row, rhs);
        }
    }

    let eliminated: Vec<bool> = {
        let mut v = vec![false; num_vars];
        for (p, _, _) in &substitutions {
            v[*p] = true;
        }
        v
    };
    let free: Vec<usize> = (0..num_vars).filter(|&i| !eliminated[i]).collect();

    // Fourier–Motzkin: stages[k] holds the system over free[0..=k] before
    // free[k] is eliminated.
    let mut current = normalize(ineqs)?;
    let mut stages: Vec<Vec<Ineq>> = Vec::with_capacity(free.len());
    for &var in free.iter().rev() {
        stages.push(current.clone());
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in current {
            if c.coeffs[var].is_positive() {
                pos.push(c);
            } else if c.coeffs[var].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for n in &neg {
                // p: a x_v + ... >= b with a > 0; n: -c x_v + ... >= d with c > 0.
                let a = &p.coeffs[var];
                let c = -&n.coeffs[var];
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(pi, ni)| pi * &c + ni * a)
                    .collect();
                rest.push(Ineq { coeffs, rhs: &p.rhs * &c + &n.rhs * a });
            }
        }
        current = normalize(rest)?;
    }
    stages.reverse();

    let mut x = vec![Q::zero(); num_vars];
    for (k, &var) in free.iter().enumerate() {
        let mut lower: Option<Q> = None;
        let mut upper: Option<Q> = None;
        for c in &stages[k] {
            let a = &c.coeffs[var];
            if a.is_zero() {
                continue;
            }
            // Only free[0..k] are assigned; later free variables have zero
            // coefficients at this stage.
            let rest: Q = c
                .coeffs
                .iter()
                .zip(&x)
                .enumerate()
                .filter(|(i, _)| *i != var)
                .map(|(_, (ci, xi))| ci * xi)
                .sum();
            let bound = (&c.rhs - rest) / a;
            if a.is_positive() {
                if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| bound < *u) {
                upper = Some(bound);
            }
        }
        x[var] = closest_to_zero(lower, upper)?;
    }
    for (pivot, row, rhs) in substitutions.iter().rev() {
        let rest: Q = row
            .iter()
            .enumerate()
            .filter(|(i, _)| i != pivot)
            .map(|(i, a)| a * &x[i])
            .sum();
        x[*pivot] = rhs - rest;
    }
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&x)));
    Some(x)
}

fn closest_to_zero(lower: Option<Q>, upper: Option<Q>) -> Option<Q> {
    if let (Some(l), Some(u)) = (&lower, &upper) {
        if l > u {
            return None;
        }
    }
    let zero = Q::zero();
    Some(match (lower, upper) {
        (Some(l), _) if l > zero => l,
        (_, Some(u)) if u < zero => u,
        _ => zero,
    })
}

fn substitute(a: &mut [Q], b: &mut Q, pivot: usize, row: &[Q], rhs: &Q) {
    let factor = a[pivot].clone();
    if factor.is_zero() {
        return;
    }
    for (ai, ri) in a.iter_mut().zip(row) {
        *ai -= &factor * ri;
    }
    *b -= &factor * rhs;
}

/// Scales each inequality so its largest absolute coefficient is one, drops
/// tautologies and keeps only the tightest right-hand side per direction.
/// Returns `None` on a contradiction `0 >= b > 0`.
fn normalize(ineqs: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut best: BTreeMap<Vec<Q>, Q> = BTreeMap::new();
    for c in ineqs {
        let scale = c.coeffs.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero);
        if scale.is_zero() {
            if c.rhs.is_positive() {
                return None;
            }
            continue;
        }
        let inv = Q::one() / scale;
        let coeffs: Vec<Q> = c.coeffs.iter().map(|x| x * &inv).collect();
        let rhs = c.rhs * inv;
        best.entry(coeffs)
            .and_modify(|r| {
                if rhs > *r {
                    *r = rhs.clone();
                }
            })
            .or_insert(rhs);
    }
    Some(best.into_iter().map(|(coeffs, rhs)| Ineq { coeffs, rhs }).collect())
}
