//! Dense matrices and exact Gaussian elimination over any [`Field`].

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!("row of length {} in {cols}-column matrix", r.len())));
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    pub fn try_map<U: Clone>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Self, zero: T) -> Self {
        Self::from_fn(self.rows + other.rows, self.cols + other.cols, |r, c| {
            match (r < self.rows, c < self.cols) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => other.get(r - self.rows, c - self.cols).clone(),
                _ => zero.clone(),
            }
        })
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::filled(rows, cols, f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |r, c| if r == c { f.one() } else { f.zero() })
}

pub fn mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "matrix product shape mismatch");
    Matrix::from_fn(a.rows, b.cols, |r, c| {
        let mut acc = f.zero();
        for k in 0..a.cols {
            let x = a.get(r, k);
            if !f.is_zero(x) {
                acc = f.add(&acc, &f.mul(x, b.get(k, c)));
            }
        }
        acc
    })
}

pub fn add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.shape(), b.shape());
    Matrix::from_fn(a.rows, a.cols, |r, c| f.add(a.get(r, c), b.get(r, c)))
}

pub fn sub<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.shape(), b.shape());
    Matrix::from_fn(a.rows, a.cols, |r, c| f.sub(a.get(r, c), b.get(r, c)))
}

pub fn scale<F: Field>(f: &F, k: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    a.map(|x| f.mul(k, x))
}

pub fn is_zero<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.data.iter().all(|x| f.is_zero(x))
}

pub fn mat_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|r| {
            let mut acc = f.zero();
            for (x, y) in a.row(r).iter().zip(v) {
                if !f.is_zero(x) && !f.is_zero(y) {
                    acc = f.add(&acc, &f.mul(x, y));
                }
            }
            acc
        })
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns. Zero rows are
/// dropped from the result.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
            continue;
        };
        if p != row {
            for c in 0..m.cols {
                m.data.swap(p * m.cols + c, row * m.cols + c);
            }
        }
        let inv = f.inv(m.get(row, col)).expect("nonzero pivot");
        for c in 0..m.cols {
            let v = f.mul(m.get(row, c), &inv);
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col).clone();
            if f.is_zero(&factor) {
                continue;
            }
            for c in 0..m.cols {
                let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(row, c)));
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.rows = row;
    m.data.truncate(row * m.cols);
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut m = m.clone();
    rref(f, &mut m).len()
}

/// A basis of `{x : m·x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut r = m.clone();
    let pivots = rref(f, &mut r);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); m.cols];
            v[fc] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            v
        })
        .collect()
}

/// A subspace of `F^n` held as a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EchelonBasis<T> {
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Clone> EchelonBasis<T> {
    pub fn span<F: Field<Elem = T>>(f: &F, ambient: usize, vectors: Vec<Vec<T>>) -> Self {
        let mut m = Matrix::from_rows(ambient, vectors).expect("vector length matches ambient");
        let pivots = rref(f, &mut m);
        Self { basis: m, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Self { basis: Matrix { rows: 0, cols: ambient, data: Vec::new() }, pivots: Vec::new() }
    }

    pub fn full<F: Field<Elem = T>>(f: &F, ambient: usize) -> Self {
        Self { basis: identity(f, ambient), pivots: (0..ambient).collect() }
    }

    /// Wraps a matrix already in reduced row echelon form.
    pub(crate) fn from_rref(basis: Matrix<T>, pivots: Vec<usize>) -> Self {
        Self { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result vanishes on pivot columns.
    pub fn reduce<F: Field<Elem = T>>(&self, f: &F, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let factor = v[p].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for (c, x) in self.basis.row(i).iter().enumerate() {
                if !f.is_zero(x) {
                    v[c] = f.sub(&v[c], &f.mul(&factor, x));
                }
            }
        }
        v
    }

    pub fn contains<F: Field<Elem = T>>(&self, f: &F, v: &[T]) -> bool {
        self.reduce(f, v).iter().all(|x| f.is_zero(x))
    }

    /// Non-pivot columns: the standard vectors on these span a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn sum<F: Field<Elem = T>>(&self, f: &F, other: &Self) -> Self {
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Self::span(f, self.ambient(), rows)
    }

    pub fn is_subspace_of<F: Field<Elem = T>>(&self, f: &F, other: &Self) -> bool {
        (0..self.dim()).all(|r| other.contains(f, self.basis.row(r)))
    }
}
