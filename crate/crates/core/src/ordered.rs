//! Lexicographically ordered rational vector spaces.
//!
//! These are the value spaces of slope numerators and of characters. All
//! coordinates are exact rationals; the order compares the first differing
//! coordinate and the norm is the supremum of absolute coordinate values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderedVector {
    #[serde(with = "crate::rational::serde_q_vec")]
    coords: Vec<Q>,
}

impl OrderedVector {
    pub fn new(coords: Vec<Q>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![Q::zero(); dim],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| crate::rational::q(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, a: &Q) -> Self {
        Self::new(self.coords.iter().map(|x| x * a).collect())
    }

    /// Sign of the vector under the lexicographic order: the sign of its
    /// first nonzero coordinate.
    pub fn lex_sign(&self) -> Ordering {
        self.coords
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| if x.is_positive() { Ordering::Greater } else { Ordering::Less })
            .unwrap_or(Ordering::Equal)
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.coords.iter().position(|x| !x.is_zero())
    }

    pub fn sup_norm(&self) -> Q {
        self.coords
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Q::zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self - other)
    }
}

impl Add for &OrderedVector {
    type Output = OrderedVector;
    fn add(self, rhs: &OrderedVector) -> OrderedVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        OrderedVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &OrderedVector {
    type Output = OrderedVector;
    fn sub(self, rhs: &OrderedVector) -> OrderedVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        OrderedVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &OrderedVector {
    type Output = OrderedVector;
    fn neg(self) -> OrderedVector {
        OrderedVector::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for OrderedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_q).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A rational vector space of fixed dimension with lexicographic order and
/// supremum norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedSpace {
    dimension: usize,
}

impl OrderedSpace {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Precondition("ordered space needs dimension >= 1".into()));
        }
        Ok(Self { dimension })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn zero(&self) -> OrderedVector {
        OrderedVector::zero(self.dimension)
    }

    pub fn contains(&self, v: &OrderedVector) -> Result<()> {
        if v.dim() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Checks `a·r > 0` and `-r < 0` for every sample with `a > 0`, `r > 0`.
    pub fn axiom_check_scaling(&self, samples: &[(Q, OrderedVector)]) -> bool {
        samples.iter().all(|(a, r)| {
            if self.contains(r).is_err() || !a.is_positive() || r.lex_sign() != Ordering::Greater {
                return false;
            }
            r.scale(a).lex_sign() == Ordering::Greater && (-r).lex_sign() == Ordering::Less
        })
    }

    /// Largest margin of the form `(r₀ - r'₀)/2` such that every `r''` within
    /// that sup-norm distance of `r'` still lies below `r`, minimised over all
    /// pairs. Returns `None` when some pair agrees in the leading coordinate,
    /// where no margin exists under the lexicographic order.
    pub fn separation_margin(&self, pairs: &[(OrderedVector, OrderedVector)]) -> Result<Option<Q>> {
        let mut margin: Option<Q> = None;
        let mut unseparable = false;
        for (lower, upper) in pairs {
            if lex_compare(lower, upper)? != Ordering::Less {
                return Err(Error::Precondition(format!(
                    "separation pair not strictly increasing: {lower} vs {upper}"
                )));
            }
            self.contains(lower)?;
            let gap = &upper.coords[0] - &lower.coords[0];
            if gap.is_zero() {
                unseparable = true;
                continue;
            }
            let eps = gap / crate::rational::q(2);
            margin = Some(match margin {
                Some(m) if m <= eps => m,
                _ => eps,
            });
        }
        if unseparable {
            return Ok(None);
        }
        // An empty pair list is satisfied by any margin.
        Ok(Some(margin.unwrap_or_else(|| crate::rational::q(1))))
    }
}

pub fn lex_compare(u: &OrderedVector, v: &OrderedVector) -> Result<Ordering> {
    u.check_dim(v)?;
    Ok(u.coords.cmp(&v.coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn v(c: &[Q]) -> OrderedVector {
        OrderedVector::new(c.to_vec())
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(lex_compare(&v(&[q(0), q(0)]), &v(&[q(0), q(0)])).unwrap(), Ordering::Equal);
        assert_eq!(lex_compare(&v(&[q(1), q(-5)]), &v(&[q(1), q(-4)])).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&v(&[q(0), q(1)]), &v(&[qf(1, 2), q(0)])).unwrap(), Ordering::Less);
        assert!(matches!(
            lex_compare(&v(&[q(0)]), &v(&[q(0), q(1)])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn scaling_axiom_examples() {
        let s = OrderedSpace::new(2).unwrap();
        assert!(s.axiom_check_scaling(&[(q(2), v(&[q(1), q(0)]))]));
        assert!(s.axiom_check_scaling(&[(qf(1, 3), v(&[q(0), q(5)]))]));
        assert!(s.axiom_check_scaling(&[]));
    }

    #[test]
    fn margin_none_when_leading_coordinates_agree() {
        let s = OrderedSpace::new(2).unwrap();
        let pairs = [(v(&[q(0), q(0)]), v(&[q(0), q(1)])), (v(&[q(0), q(0)]), v(&[q(1), q(0)]))];
        assert_eq!(s.separation_margin(&pairs).unwrap(), None);
    }

    #[test]
    fn margin_rejects_unordered_pairs() {
        let s = OrderedSpace::new(2).unwrap();
        let pairs = [(v(&[q(1), q(0)]), v(&[q(0), q(0)]))];
        assert!(matches!(s.separation_margin(&pairs), Err(Error::Precondition(_))));
    }

    #[test]
    fn margin_takes_minimum() {
        let s = OrderedSpace::new(1).unwrap();
        let pairs = [(v(&[q(0)]), v(&[q(4)])), (v(&[q(1)]), v(&[q(2)]))];
        assert_eq!(s.separation_margin(&pairs).unwrap(), Some(qf(1, 2)));
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(OrderedSpace::new(0).is_err());
    }

    #[test]
    fn serializes_as_strings() {
        let x = v(&[qf(1, 2), q(0), q(-3)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["1/2","0","-3"]"#);
        let back: OrderedVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
