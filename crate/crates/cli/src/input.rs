//! Resolving command-line sources: files, or built-ins such as `sl2`,
//! `sl2:M(0)` and `sl2:<x2>`.

use std::path::Path;

use quiver_slope::catalog::{sl2_block, sl2_slope_at};
use quiver_slope::io::{from_json, AlgebraDoc, RepDoc, SlopeDoc};
use quiver_slope::rational::parse_q;
use quiver_slope::{Algebra, Error, FieldSpec, K0Class, Representation, SlopeData};
use serde::de::DeserializeOwned;

/// A diagnostic and the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: &'static str,
    pub exit: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = if e.is_input_error() { 2 } else { 1 };
        Failure { code: e.code(), exit, message: e.to_string() }
    }
}

impl Failure {
    pub fn context(mut self, what: &str) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

pub type CliResult<T> = Result<T, Failure>;

fn read_doc<T: DeserializeOwned>(path: &str) -> CliResult<T> {
    let text = std::fs::read_to_string(Path::new(path))
        .map_err(|e| Failure { code: "io", exit: 2, message: format!("{path}: {e}") })?;
    from_json(&text).map_err(|e| Failure::from(e).context(path))
}

/// `--algebra`, defaulting to the sl2 block when the representation is a
/// catalog object.
pub fn algebra(src: Option<&str>, rep: Option<&str>) -> CliResult<Algebra> {
    match src {
        Some("sl2") => Ok(sl2_block().algebra),
        Some(path) => {
            let doc: AlgebraDoc = read_doc(path)?;
            doc.to_algebra().map_err(|e| Failure::from(e).context(path))
        }
        None if rep.is_some_and(|r| r.starts_with("sl2:")) => Ok(sl2_block().algebra),
        None => Err(Error::Parse("--algebra is required".into()).into()),
    }
}

pub fn representation(src: &str, algebra: &Algebra) -> CliResult<Representation> {
    if let Some(name) = src.strip_prefix("sl2:") {
        return sl2_block()
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("unknown sl2 catalog object {name:?}")).into());
    }
    let doc: RepDoc = read_doc(src)?;
    doc.to_rep(algebra).map_err(|e| Failure::from(e).context(src))
}

pub fn slope(src: &str) -> CliResult<SlopeData> {
    if let Some(x2) = src.strip_prefix("sl2:") {
        return Ok(sl2_slope_at(parse_q(x2)?));
    }
    let doc: SlopeDoc = read_doc(src)?;
    doc.to_slope().map_err(|e| Failure::from(e).context(src))
}

/// Comma-separated multiplicities, e.g. `2,1`.
pub fn class(s: &str) -> CliResult<K0Class> {
    let mults = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad class {s:?}; expected e.g. 1,1"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(K0Class::new(mults))
}

pub fn field(opt: Option<&str>) -> CliResult<Option<FieldSpec>> {
    Ok(opt.map(str::parse).transpose()?)
}

/// Applies `--field`: rational input is reduced mod p, with a warning that
/// results then describe the reduction.
pub fn over_field(rep: Representation, field: Option<FieldSpec>) -> CliResult<Representation> {
    match (rep.field(), field) {
        (FieldSpec::Rationals, None) => Err(Error::RequiresFiniteField(
            "representation is over q; pass --field fp:<p> to work with its reduction".into(),
        )
        .into()),
        (_, None) => Ok(rep),
        (a, Some(b)) if a == b => Ok(rep),
        (FieldSpec::Rationals, Some(FieldSpec::Prime(p))) => {
            eprintln!("qslope: warning: results certify the reduction of the representation modulo {p}");
            Ok(rep.reduce_mod(p)?)
        }
        (a, Some(b)) => Err(Error::FieldMismatch(format!("representation is over {a}, --field asks for {b}")).into()),
    }
}
