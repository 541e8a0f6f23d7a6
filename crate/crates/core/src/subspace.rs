//! Enumeration of all subspaces of `F_p^n` in reduced row echelon form.

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::matrix::{EchelonBasis, Matrix};

/// Number of subspaces of `F_p^n`, or `None` on overflow.
pub fn subspace_count(p: u32, n: usize) -> Option<u128> {
    (0..=n).try_fold(0u128, |acc, k| acc.checked_add(gaussian_binomial(p, n, k)?))
}

/// `[n choose k]_p`, the number of `k`-dimensional subspaces of `F_p^n`.
pub fn gaussian_binomial(p: u32, n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul(p.checked_pow((n - i) as u32)?.checked_sub(1)?)?;
        den = den.checked_mul(p.checked_pow((i + 1) as u32)?.checked_sub(1)?)?;
    }
    Some(num / den)
}

/// Every subspace of `F_p^n`, ordered by dimension, then pivot columns, then
/// free entries.
pub fn all_subspaces(f: &PrimeField, n: usize, guard: u128) -> Result<Vec<EchelonBasis<u32>>> {
    let count = subspace_count(f.p(), n).filter(|&c| c <= guard).ok_or_else(|| {
        Error::GuardExceeded(format!("F_{}^{n} has more than {guard} subspaces", f.p()))
    })?;
    let mut out = Vec::with_capacity(count as usize);
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // Free slots: row r, column c > pivots[r] that is not a pivot.
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| ((pc + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let mut digits = vec![0u32; slots.len()];
            loop {
                let mut m = Matrix::filled(k, n, f.zero());
                for (r, &pc) in pivots.iter().enumerate() {
                    m.set(r, pc, f.one());
                }
                for (&(r, c), &d) in slots.iter().zip(&digits) {
                    m.set(r, c, d);
                }
                out.push(EchelonBasis::from_rref(m, pivots.clone()));
                if !increment(&mut digits, f.p()) {
                    break;
                }
            }
        }
    }
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

/// Little-endian-last odometer; false once it wraps around.
fn increment(digits: &mut [u32], radix: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
