//! Slope stability for finite-dimensional representations of quivers with
//! relations.
//!
//! The crate compares `(c : d)`-slopes exactly, converts slopes into integer
//! characters, decides (semi)stability by exhaustive subrepresentation
//! enumeration over prime fields, computes Harder–Narasimhan and stable-factor
//! filtrations, and enumerates moduli sets of S-equivalence classes.

pub mod catalog;
pub mod error;
pub mod field;
pub mod io;
pub mod k0;
pub mod lp;
pub mod matrix;
pub mod moduli;
pub mod ordered;
pub mod quiver;
pub mod rational;
pub mod rep;
pub mod stability;
pub mod subspace;

pub use error::{Error, Result};
pub use field::FieldSpec;
pub use k0::{Character, K0Class, RCharacter, SlopeData, SlopeValue, Verdict};
pub use moduli::{ModuliClass, ModuliSet};
pub use ordered::{OrderedSpace, OrderedVector};
pub use quiver::{Algebra, Path, Quiver, Relation};
pub use rep::{Morphism, Representation};
pub use stability::{EnumerationOrder, HNFiltration, StableFactorData, SubrepFamily};
