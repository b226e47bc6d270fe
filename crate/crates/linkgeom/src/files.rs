//! The JSON point-file format.
//!
//! ```json
//! { "dimension": 3,
//!   "field": "rational",
//!   "points": [ { "label": "A1", "coords": ["2/1", "0/1", "1/1"] } ] }
//! ```
//!
//! A rational scalar is the string `"p/q"` with q > 0 and gcd(|p|, q) = 1;
//! a `quad_sqrt3` scalar is `{ "a": "p/q", "b": "p/q" }` meaning a + b·√3.
//! Writers always emit reduced fractions with an explicit denominator
//! (`"5/1"`, never `"5"`); readers reject unreduced fractions and q ≤ 0.
//! Grid files carry an extra `"shape": [m, n]` entry and a `"labels"` hint;
//! readers surface the shape and ignore unknown keys.

use crate::kernel::{Configuration, KernelError, Point};
use crate::realizability::Hypergraph2;
use crate::scalar::{ExactScalar, Quad, Rat, ScalarRepr};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

fn bad(msg: impl Into<String>) -> FileError {
    FileError::Format(msg.into())
}

/// A configuration in one of the two supported coordinate fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypedConfig {
    Rational(Configuration<Rat>),
    Quad(Configuration<Quad>),
}

impl TypedConfig {
    pub fn dimension(&self) -> usize {
        match self {
            TypedConfig::Rational(c) => c.dimension(),
            TypedConfig::Quad(c) => c.dimension(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            TypedConfig::Rational(c) => c.len(),
            TypedConfig::Quad(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn field_name(&self) -> &'static str {
        match self {
            TypedConfig::Rational(_) => Rat::FIELD_NAME,
            TypedConfig::Quad(_) => Quad::FIELD_NAME,
        }
    }
}

/// A parsed point file: the configuration plus the optional grid shape.
#[derive(Clone, Debug)]
pub struct PointFile {
    pub config: TypedConfig,
    pub shape: Option<(usize, usize)>,
}

/// Parses a strict `"p/q"` rational: one slash, integer numerator, positive
/// integer denominator, fraction fully reduced.
pub fn parse_rat_str(s: &str) -> Result<Rat, FileError> {
    let Some((num_str, den_str)) = s.split_once('/') else {
        return Err(bad(format!(
            "rational {s:?} must be written \"p/q\" (use \"n/1\" for integers)"
        )));
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let num_ok = digits(num_str.strip_prefix('-').unwrap_or(num_str));
    if !num_ok || !digits(den_str) {
        return Err(bad(format!("rational {s:?} is not an integer fraction")));
    }
    let num = BigInt::from_str(num_str).expect("validated digits");
    let den = BigInt::from_str(den_str).expect("validated digits");
    if den.sign() != num_bigint::Sign::Plus {
        return Err(bad(format!("rational {s:?} has denominator ≤ 0")));
    }
    let r = Rat::new(num.clone(), den.clone());
    // BigRational::new reduces; any change means the input was not canonical.
    if *r.numer() != num || *r.denom() != den {
        return Err(bad(format!(
            "rational {s:?} is not reduced (expected {})",
            rat_to_string(&r)
        )));
    }
    Ok(r)
}

/// Formats a rational as `"p/q"`, always with an explicit denominator.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Serializes one scalar exactly as point files do: a `"p/q"` string for
/// rationals, an `{"a", "b"}` object for ℚ(√3).
pub fn scalar_to_json<S: ExactScalar>(x: &S) -> Value {
    match x.to_repr() {
        ScalarRepr::Rational(r) => Value::String(rat_to_string(&r)),
        ScalarRepr::Quad(a, b) => json!({ "a": rat_to_string(&a), "b": rat_to_string(&b) }),
    }
}

fn rat_from_json(v: &Value) -> Result<Rat, FileError> {
    match v {
        Value::String(s) => parse_rat_str(s),
        other => Err(bad(format!(
            "expected a \"p/q\" string, got {other}"
        ))),
    }
}

fn quad_from_json(v: &Value) -> Result<Quad, FileError> {
    let Value::Object(map) = v else {
        return Err(bad(format!(
            "expected {{\"a\": \"p/q\", \"b\": \"p/q\"}}, got {v}"
        )));
    };
    if map.len() != 2 || !map.contains_key("a") || !map.contains_key("b") {
        return Err(bad(format!(
            "quad scalar must have exactly the keys \"a\" and \"b\", got {v}"
        )));
    }
    Ok(Quad::new(rat_from_json(&map["a"])?, rat_from_json(&map["b"])?))
}

/// Serializes a configuration (plus optional grid shape metadata) to the
/// point-file JSON document.
pub fn configuration_to_json<S: ExactScalar>(
    cfg: &Configuration<S>,
    shape: Option<(usize, usize)>,
) -> Value {
    let points: Vec<Value> = cfg
        .points()
        .iter()
        .map(|p| {
            json!({
                "label": p.label,
                "coords": p.coords.iter().map(scalar_to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut doc = json!({
        "dimension": cfg.dimension(),
        "field": S::FIELD_NAME,
        "points": points,
    });
    if let Some((m, n)) = shape {
        doc["shape"] = json!([m, n]);
        doc["labels"] = json!("A{j}{p}");
    }
    doc
}

/// Parses a point-file JSON document.
pub fn parse_point_file(text: &str) -> Result<PointFile, FileError> {
    let doc: Value = serde_json::from_str(text)?;
    let Value::Object(map) = &doc else {
        return Err(bad("point file must be a JSON object"));
    };
    let dimension = map
        .get("dimension")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing or non-integer \"dimension\""))? as usize;
    let field = map
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"field\""))?;
    let raw_points = map
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"points\" array"))?;

    let mut labels = Vec::with_capacity(raw_points.len());
    let mut coord_lists = Vec::with_capacity(raw_points.len());
    for (i, entry) in raw_points.iter().enumerate() {
        let label = entry
            .get("label")
            .and_then(Value::as_str)
            .ok_or_else(|| bad(format!("point {i} is missing \"label\"")))?;
        let coords = entry
            .get("coords")
            .and_then(Value::as_array)
            .ok_or_else(|| bad(format!("point {i} is missing \"coords\"")))?;
        labels.push(label.to_owned());
        coord_lists.push(coords);
    }

    let shape = match map.get("shape") {
        None => None,
        Some(v) => {
            let pair = v
                .as_array()
                .filter(|a| a.len() == 2)
                .and_then(|a| Some((a[0].as_u64()?, a[1].as_u64()?)))
                .ok_or_else(|| bad("\"shape\" must be a [m, n] pair"))?;
            Some((pair.0 as usize, pair.1 as usize))
        }
    };

    let config = match field {
        "rational" => {
            let points = labels
                .into_iter()
                .zip(&coord_lists)
                .map(|(label, coords)| {
                    let cs = coords
                        .iter()
                        .map(rat_from_json)
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(Point::new(label, cs))
                })
                .collect::<Result<Vec<_>, FileError>>()?;
            TypedConfig::Rational(Configuration::new(dimension, points)?)
        }
        "quad_sqrt3" => {
            let points = labels
                .into_iter()
                .zip(&coord_lists)
                .map(|(label, coords)| {
                    let cs = coords
                        .iter()
                        .map(quad_from_json)
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(Point::new(label, cs))
                })
                .collect::<Result<Vec<_>, FileError>>()?;
            TypedConfig::Quad(Configuration::new(dimension, points)?)
        }
        other => {
            return Err(bad(format!(
                "unknown field {other:?} (expected \"rational\" or \"quad_sqrt3\")"
            )))
        }
    };
    Ok(PointFile { config, shape })
}

/// Reads and parses a point file from disk.
pub fn read_point_file(path: impl AsRef<Path>) -> Result<PointFile, FileError> {
    parse_point_file(&std::fs::read_to_string(path)?)
}

/// Writes a configuration to disk in the point-file format.
pub fn write_point_file<S: ExactScalar>(
    path: impl AsRef<Path>,
    cfg: &Configuration<S>,
    shape: Option<(usize, usize)>,
) -> Result<(), FileError> {
    let doc = configuration_to_json(cfg, shape);
    std::fs::write(path, format!("{}\n", serde_json::to_string_pretty(&doc)?))?;
    Ok(())
}

/// Parses a hypergraph document:
/// `{ "vertices": k, "faces": [[i,j,l], …], "edges": [[i,j], …] }`
/// with 0-based indices. `edges` is optional; unknown keys are ignored.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph2, FileError> {
    let doc: Value = serde_json::from_str(text)?;
    let Value::Object(map) = &doc else {
        return Err(bad("hypergraph file must be a JSON object"));
    };
    let vertices = map
        .get("vertices")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing or non-integer \"vertices\""))? as usize;

    let tuples = |key: &str, arity: usize| -> Result<Vec<Vec<usize>>, FileError> {
        let Some(raw) = map.get(key) else {
            return Ok(Vec::new());
        };
        let rows = raw
            .as_array()
            .ok_or_else(|| bad(format!("\"{key}\" must be an array of index tuples")))?;
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                let idx = row
                    .as_array()
                    .filter(|a| a.len() == arity)
                    .and_then(|a| {
                        a.iter()
                            .map(|v| v.as_u64().map(|x| x as usize))
                            .collect::<Option<Vec<usize>>>()
                    })
                    .ok_or_else(|| {
                        bad(format!(
                            "\"{key}\" entry {i} must be {arity} non-negative integers"
                        ))
                    })?;
                Ok(idx)
            })
            .collect()
    };

    let faces: Vec<[usize; 3]> = tuples("faces", 3)?
        .into_iter()
        .map(|v| [v[0], v[1], v[2]])
        .collect();
    let edges: Vec<[usize; 2]> = tuples("edges", 2)?
        .into_iter()
        .map(|v| [v[0], v[1]])
        .collect();
    if !map.contains_key("faces") {
        return Err(bad("missing \"faces\" array"));
    }
    Hypergraph2::new(vertices, faces, edges).map_err(|e| bad(e.to_string()))
}

/// Reads and parses a hypergraph file from disk.
pub fn read_hypergraph_file(path: impl AsRef<Path>) -> Result<Hypergraph2, FileError> {
    parse_hypergraph(&std::fs::read_to_string(path)?)
}

/// Serializes a hypergraph to its JSON document.
pub fn hypergraph_to_json(hg: &Hypergraph2) -> Value {
    json!({
        "vertices": hg.vertices(),
        "faces": hg.faces().iter().map(|f| f.to_vec()).collect::<Vec<_>>(),
        "edges": hg.edges().iter().map(|e| e.to_vec()).collect::<Vec<_>>(),
    })
}

/// Writes a hypergraph to disk.
pub fn write_hypergraph_file(path: impl AsRef<Path>, hg: &Hypergraph2) -> Result<(), FileError> {
    let doc = hypergraph_to_json(hg);
    std::fs::write(path, format!("{}\n", serde_json::to_string_pretty(&doc)?))?;
    Ok(())
}

/// Formats any supported scalar for human-readable CLI output.
pub fn scalar_display<S: ExactScalar>(x: &S) -> String {
    match x.to_repr() {
        ScalarRepr::Rational(r) => rat_to_string(&r),
        ScalarRepr::Quad(a, b) if b.numer().is_one() && b.denom().is_one() && a == Rat::from_integer(0.into()) => "√3".into(),
        ScalarRepr::Quad(a, b) => format!("{} + {}·√3", rat_to_string(&a), rat_to_string(&b)),
    }
}
