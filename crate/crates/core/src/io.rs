//! JSON documents for algebras, representations, slopes and characters.
//!
//! Rationals are written as strings (`"3"`, `"-4/3"`), never as floats.
//! Every document carries a `version` field naming the producing crate.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::k0::SlopeData;
use crate::matrix::Matrix;
use crate::ordered::{OrderedSpace, OrderedVector};
use crate::quiver::{Algebra, Arrow, Path, Quiver, Relation};
use crate::rational::{format_q, parse_q, Q};
use crate::rep::Representation;

pub const FORMAT_VERSION: &str = concat!("quiver-slope ", env!("CARGO_PKG_VERSION"));

fn version() -> String {
    FORMAT_VERSION.to_string()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// First 16 hex digits of the SHA-256 of a document's JSON. Used to
/// identify inputs in report headers.
pub fn digest<T: Serialize>(value: &T) -> String {
    let bytes = serde_json::to_vec(value).expect("documents serialize");
    Sha256::digest(bytes)[..8].iter().map(|b| format!("{b:02x}")).collect()
}

pub fn matrix_rows(m: &Matrix<Q>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(format_q).collect()).collect()
}

fn parse_matrix(rows: &[Vec<String>], shape: (usize, usize), what: &str) -> Result<Matrix<Q>> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(Error::Shape(format!("{what}: expected a {}x{} matrix", shape.0, shape.1)));
    }
    let data = rows.iter().flatten().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()?;
    Matrix::from_row_major(shape.0, shape.1, data)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// One term of a relation; `path` lists arrow names in the order they are
/// applied, so `ab` (apply `b`, then `a`) is `["b", "a"]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    #[serde(default = "version")]
    pub version: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default)]
    pub relations: Vec<Vec<TermDoc>>,
}

impl AlgebraDoc {
    pub fn from_algebra(algebra: &Algebra) -> Self {
        let quiver = algebra.quiver();
        Self {
            version: version(),
            vertices: quiver.vertex_labels().to_vec(),
            arrows: quiver
                .arrows()
                .iter()
                .map(|a| ArrowDoc { name: a.name.clone(), source: a.source, target: a.target })
                .collect(),
            relations: algebra
                .relations()
                .iter()
                .map(|r| {
                    r.terms()
                        .iter()
                        .map(|(c, p)| TermDoc { coeff: format_q(c), path: p.application_names(quiver) })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.source, target: a.target })
            .collect();
        let quiver = Quiver::new(self.vertices.clone(), arrows)?;
        let relations = self
            .relations
            .iter()
            .map(|terms| {
                let terms = terms
                    .iter()
                    .map(|t| {
                        let names: Vec<&str> = t.path.iter().map(String::as_str).collect();
                        Ok((parse_q(&t.coeff)?, Path::from_application_order(&quiver, &names)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Relation::new(&quiver, terms)
            })
            .collect::<Result<Vec<_>>>()?;
        Algebra::new(quiver, relations)
    }
}

/// `maps[k]` is the matrix of arrow `k` as rows, shape
/// `dims[target] x dims[source]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDoc {
    #[serde(default = "version")]
    pub version: String,
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<String>>>,
}

impl RepDoc {
    pub fn from_rep(rep: &Representation) -> Self {
        Self {
            version: version(),
            field: rep.field(),
            dims: rep.dims().to_vec(),
            maps: rep.maps().iter().map(matrix_rows).collect(),
        }
    }

    /// Shapes are checked against the algebra; relations are not.
    pub fn to_rep(&self, algebra: &Algebra) -> Result<Representation> {
        let arrows = algebra.quiver().arrows();
        if self.dims.len() != algebra.vertex_count() {
            return Err(Error::Shape(format!(
                "{} vertex dimensions for {} vertices",
                self.dims.len(),
                algebra.vertex_count()
            )));
        }
        if self.maps.len() != arrows.len() {
            return Err(Error::Shape(format!("{} maps for {} arrows", self.maps.len(), arrows.len())));
        }
        let maps = self
            .maps
            .iter()
            .zip(arrows)
            .map(|(rows, a)| parse_matrix(rows, (self.dims[a.target], self.dims[a.source]), &format!("arrow {}", a.name)))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.field, self.dims.clone(), maps)
    }
}

/// `c[i]` is the ordered-space value of label `i`, `d[i]` its positive
/// denominator weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeDoc {
    #[serde(default = "version")]
    pub version: String,
    pub labels: Vec<String>,
    pub dimension: usize,
    pub c: Vec<OrderedVector>,
    pub d: Vec<String>,
}

impl SlopeDoc {
    pub fn from_slope(s: &SlopeData) -> Self {
        Self {
            version: version(),
            labels: s.labels().to_vec(),
            dimension: s.space().dimension(),
            c: s.c_values().to_vec(),
            d: s.d_values().iter().map(format_q).collect(),
        }
    }

    pub fn to_slope(&self) -> Result<SlopeData> {
        let d = self.d.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>>>()?;
        SlopeData::new(self.labels.clone(), OrderedSpace::new(self.dimension)?, self.c.clone(), d)
    }
}
