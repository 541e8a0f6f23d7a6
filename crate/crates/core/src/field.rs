//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt::{self, Debug};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

pub const MAX_PRIME: u32 = 1 << 16;

pub trait Field {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn from_q(&self, x: &Q) -> Result<Self::Elem>;
    fn to_q(&self, a: &Self::Elem) -> Q;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Zero for the rationals.
    fn characteristic(&self) -> u32;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Q;

    fn zero(&self) -> Q {
        Q::zero()
    }
    fn one(&self) -> Q {
        Q::one()
    }
    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn sub(&self, a: &Q, b: &Q) -> Q {
        a - b
    }
    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }
    fn neg(&self, a: &Q) -> Q {
        -a
    }
    fn inv(&self, a: &Q) -> Option<Q> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }
    fn from_q(&self, x: &Q) -> Result<Q> {
        Ok(x.clone())
    }
    fn to_q(&self, a: &Q) -> Q {
        a.clone()
    }
    fn from_i64(&self, n: i64) -> Q {
        crate::rational::q(n)
    }
    fn characteristic(&self) -> u32 {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= MAX_PRIME {
            return Err(Error::Parse(format!("{p} is not a prime below {MAX_PRIME}")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    fn reduce_bigint(&self, n: &BigInt) -> u32 {
        n.mod_floor(&BigInt::from(self.p)).to_u32().expect("residue fits in u32")
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a as u64, self.p as u64 - 2, 1u64);
        let m = self.p as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        Some(acc as u32)
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn from_q(&self, x: &Q) -> Result<u32> {
        let den = self.reduce_bigint(x.denom());
        let inv = self.inv(&den).ok_or_else(|| {
            Error::FieldMismatch(format!("{x} is not {}-integral", self.p))
        })?;
        Ok(self.mul(&self.reduce_bigint(x.numer()), &inv))
    }
    fn to_q(&self, a: &u32) -> Q {
        crate::rational::q(*a as i64)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Which exact field a representation lives over. Encoded as `"q"` or
/// `"fp:<p>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        PrimeField::new(p).map(|_| FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Brings a rational into canonical form for this field: unchanged over
    /// the rationals, the residue in `0..p` otherwise.
    pub fn canonicalize(&self, x: &Q) -> Result<Q> {
        match self {
            FieldSpec::Rationals => Ok(x.clone()),
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(*p)?;
                Ok(f.to_q(&f.from_q(x)?))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown field {s:?}; use q or fp:<p>")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Runs `$body` with `$f` bound to the concrete field named by a
/// [`FieldSpec`]. The body is instantiated once per field type.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            $crate::field::FieldSpec::Rationals => {
                let $f = $crate::field::Rationals;
                $body
            }
            $crate::field::FieldSpec::Prime(p) => {
                let $f = $crate::field::PrimeField::new(p)?;
                $body
            }
        }
    };
}
