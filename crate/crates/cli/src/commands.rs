use std::path::Path;

use quiver_slope::catalog::{find_stability_certificate, sl2_block, sl2_slope_at, sl3_data, WeightData};
use quiver_slope::io::{digest, matrix_rows, to_json, AlgebraDoc, RepDoc, SlopeDoc, FORMAT_VERSION};
use quiver_slope::moduli::{moduli_set, DEFAULT_MODULI_GUARD};
use quiver_slope::rational::{format_q, parse_q};
use quiver_slope::stability::{
    classify_stability, hn_filtration, max_destabilizer, DEFAULT_ENUMERATION_GUARD,
};
use quiver_slope::{EnumerationOrder, Error, FieldSpec, K0Class, SlopeValue, SubrepFamily, Verdict};
use serde_json::{json, Value};

use crate::input::{self, CliResult, Failure};
use crate::{Command, Options};

pub fn run(cmd: &Command, opts: &Options) -> CliResult<Value> {
    let field = input::field(opts.field.as_deref())?;
    let guard = opts.guard.unwrap_or(DEFAULT_ENUMERATION_GUARD);
    match cmd {
        Command::Validate { algebra, reps } => validate(algebra.as_deref(), reps),
        Command::Slope { slope, classes } => slopes(slope, classes),
        Command::Character { slope, class } => character(slope, class),
        Command::Stability { algebra, rep, slope } => stability(algebra.as_deref(), rep, slope, field, guard),
        Command::Hn { algebra, rep, slope } => hn(algebra.as_deref(), rep, slope, field, guard),
        Command::Moduli { algebra, class, slope } => {
            moduli(algebra.as_deref(), class, slope, field, opts.guard.unwrap_or(DEFAULT_MODULI_GUARD))
        }
        Command::Certify { weights, verma, target, subs } => certify(weights, *verma, target.as_deref(), subs),
        Command::Catalog { export, x2 } => catalog(export.as_deref(), x2.as_deref()),
    }
}

fn slope_json(sv: &SlopeValue) -> Value {
    json!({ "numerator": sv.numerator, "denominator": format_q(&sv.denominator) })
}

fn subrep_json(s: &SubrepFamily) -> Value {
    let rows: Vec<_> = s.spaces().iter().map(|e| matrix_rows(e.basis())).collect();
    json!({ "class": s.class(), "rows": rows })
}

fn validate(algebra: Option<&str>, reps: &[String]) -> CliResult<Value> {
    let first = reps.first().map(String::as_str);
    let alg = input::algebra(algebra, first)?;
    let mut checked = Vec::new();
    for src in reps {
        let rep = input::representation(src, &alg)?;
        rep.check(&alg).map_err(|e| Failure::from(e).context(src))?;
        checked.push(json!({ "source": src, "field": rep.field(), "dims": rep.dims(), "valid": true }));
    }
    let basis: Vec<String> = alg.basis().iter().map(|p| p.display(alg.quiver())).collect();
    Ok(json!({
        "version": FORMAT_VERSION,
        "command": "validate",
        "algebra": {
            "vertices": alg.quiver().vertex_labels(),
            "dimension": alg.dimension(),
            "basis": basis,
            "nilpotency_index": alg.nilpotency_index(),
        },
        "representations": checked,
    }))
}

fn slopes(slope: &str, classes: &[String]) -> CliResult<Value> {
    let s = input::slope(slope)?;
    let classes = classes.iter().map(|c| input::class(c)).collect::<CliResult<Vec<K0Class>>>()?;
    let mut values = Vec::new();
    for c in &classes {
        let sv = s.slope_value(c)?;
        values.push(json!({ "class": c, "slope": slope_json(&sv), "value": sv.as_vector() }));
    }
    let mut comparisons = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let order = match s.compare_slopes(&classes[i], &classes[j])? {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            comparisons.push(json!({ "a": classes[i], "b": classes[j], "order": order }));
        }
    }
    Ok(json!({
        "version": FORMAT_VERSION,
        "command": "slope",
        "slope_digest": digest(&SlopeDoc::from_slope(&s)),
        "slopes": values,
        "comparisons": comparisons,
    }))
}

fn character(slope: &str, class: &str) -> CliResult<Value> {
    let s = input::slope(slope)?;
    let gamma = input::class(class)?;
    let theta = s.integerize_character(&gamma)?;
    Ok(json!({
        "version": FORMAT_VERSION,
        "command": "character",
        "slope_digest": digest(&SlopeDoc::from_slope(&s)),
        "character": theta,
    }))
}

fn stability(algebra: Option<&str>, rep: &str, slope: &str, field: Option<FieldSpec>, guard: u64) -> CliResult<Value> {
    let alg = input::algebra(algebra, Some(rep))?;
    let v = input::over_field(input::representation(rep, &alg)?, field)?;
    v.check(&alg)?;
    let s = input::slope(slope)?;
    let verdict = classify_stability(&alg, &v, &s, guard)?;
    let destabilizer = if verdict == Verdict::Unstable {
        let d = max_destabilizer(&alg, &v, &s, guard, EnumerationOrder::Canonical)?;
        let mut out = subrep_json(&d);
        out["slope"] = slope_json(&s.slope_value(&d.class())?);
        out
    } else {
        Value::Null
    };
    Ok(json!({
        "version": FORMAT_VERSION,
        "command": "stability",
        "field": v.field(),
        "class": v.dimension_vector(),
        "slope": slope_json(&s.slope_value(&v.dimension_vector())?),
        "verdict": verdict,
        "destabilizer": destabilizer,
    }))
}

fn hn(algebra: Option<&str>, rep: &str, slope: &str, field: Option<FieldSpec>, guard: u64) -> CliResult<Value> {
    let alg = input::algebra(algebra, Some(rep))?;
    let v = input::over_field(input::representation(rep, &alg)?, field)?;
    v.check(&alg)?;
    let s = input::slope(slope)?;
    let filtration = hn_filtration(&alg, &v, &s, guard, EnumerationOrder::Canonical)?;
    let steps: Vec<Value> = filtration
        .steps
        .iter()
        .map(|step| {
            let mut out = subrep_json(&step.subrep);
            out["factor_class"] = json!(step.factor_class);
            out["slope"] = slope_json(&step.factor_slope);
            out
        })
        .collect();
    Ok(json!({
        "version": FORMAT_VERSION,
        "command": "hn",
        "field": v.field(),
        "class": v.dimension_vector(),
        "steps": steps,
    }))
}

fn moduli(algebra: Option<&str>, class: &str, slope: &str, field: Option<FieldSpec>, guard: u64) -> CliResult<Value> {
    let alg = input::algebra(algebra, None)?;
    let gamma = input::class(class)?;
    let s = input::slope(slope)?;
    let Some(FieldSpec::Prime(p)) = field else {
        return Err(Error::RequiresFiniteField("moduli sets are enumerated over F_p; pass --field fp:<p>".into()).into());
    };
    let m = moduli_set(&alg, &gamma, p, &s, guard)?;
    let classes: Vec<Value> = m
        .classes
        .iter()
        .map(|c| {
            let doc = RepDoc::from_rep(&c.representative);
            json!({ "representative": { "dims": doc.dims, "maps": doc.maps }, "factors": c.factors, "absorbed": c.absorbed })
        })
        .collect();
    Ok(json!({
        "version": FORMAT_VERSION,
        "command": "moduli",
        "header": {
            "algebra": digest(&AlgebraDoc::from_algebra(&alg)),
            "gamma": m.gamma,
            "field": m.field,
            "slope": digest(&SlopeDoc::from_slope(&s)),
        },
        "classes": classes,
    }))
}

fn weights(name: &str) -> CliResult<WeightData> {
    match name {
        "sl3" => Ok(sl3_data().weights),
        "sl2" => Ok(sl2_block().weights),
        other => Err(Error::Parse(format!("unknown weight data {other:?}; use sl2 or sl3")).into()),
    }
}

fn certify(weight_name: &str, verma: Option<usize>, target: Option<&str>, subs: &[String]) -> CliResult<Value> {
    let (w, target, subs) = match (verma, target) {
        (Some(k), _) => {
            if weight_name != "sl3" {
                return Err(Error::Parse("--verma needs --weights sl3".into()).into());
            }
            let d = sl3_data();
            if k >= d.verma_classes.len() {
                return Err(Error::Parse(format!("--verma {k} out of range 0..6")).into());
            }
            (d.weights, d.verma_classes[k].clone(), d.default_subobjects[k].clone())
        }
        (None, Some(t)) => {
            let subs = subs.iter().map(|s| input::class(s)).collect::<CliResult<Vec<_>>>()?;
            (weights(weight_name)?, input::class(t)?, subs)
        }
        (None, None) => return Err(Error::Parse("pass --verma <k> or --target <class>".into()).into()),
    };
    let x = find_stability_certificate(&target, &subs, &w)?;
    Ok(json!({
        "version": FORMAT_VERSION,
        "command": "certify",
        "weights": weight_name,
        "target": target,
        "subobjects": subs,
        "certificate": x.map(|x| x.iter().map(format_q).collect::<Vec<_>>()),
        "relative_to_supplied_subobjects": true,
    }))
}

/// File stem for a catalog object name: `M*(0)` becomes `mstar0`.
pub fn file_stem(name: &str) -> String {
    name.to_lowercase().replace('*', "star").replace(['(', ')'], "")
}

fn write_file(dir: &Path, name: &str, text: String) -> CliResult<String> {
    let path = dir.join(name);
    std::fs::write(&path, text).map_err(|e| Failure { code: "io", exit: 2, message: format!("{}: {e}", path.display()) })?;
    Ok(name.to_string())
}

fn catalog(export: Option<&Path>, x2: Option<&str>) -> CliResult<Value> {
    let sl2 = sl2_block();
    let sl3 = sl3_data();
    let mut exported = Vec::new();
    if let Some(dir) = export {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failure { code: "io", exit: 2, message: format!("{}: {e}", dir.display()) })?;
        exported.push(write_file(dir, "sl2_algebra.json", to_json(&AlgebraDoc::from_algebra(&sl2.algebra)))?);
        for (name, rep) in &sl2.representations {
            exported.push(write_file(dir, &format!("sl2_{}.json", file_stem(name)), to_json(&RepDoc::from_rep(rep)))?);
        }
        if let Some(x2) = x2 {
            let s = sl2_slope_at(parse_q(x2)?);
            exported.push(write_file(dir, "sl2_slope.json", to_json(&SlopeDoc::from_slope(&s)))?);
        }
        exported.sort();
    } else if x2.is_some() {
        return Err(Error::Parse("--x2 only applies together with --export".into()).into());
    }
    let objects: Vec<Value> = sl2
        .representations
        .iter()
        .map(|(n, r)| json!({ "name": n, "dims": r.dims(), "file_stem": file_stem(n) }))
        .collect();
    let sequences: Vec<&[String; 3]> = sl2.sequences.iter().map(|s| &s.terms).collect();
    Ok(json!({
        "version": FORMAT_VERSION,
        "command": "catalog",
        "entries": [
            {
                "name": "sl2",
                "algebra_dimension": sl2.algebra.dimension(),
                "vertices": sl2.algebra.quiver().vertex_labels(),
                "weights": sl2.weights.weights,
                "objects": objects,
                "exact_sequences": sequences,
            },
            {
                "name": "sl3",
                "labels": sl3.weights.labels,
                "weights": sl3.weights.weights,
                "verma_classes": sl3.verma_classes,
            },
        ],
        "exported": exported,
    }))
}
