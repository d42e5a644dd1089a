//! Loading JSON arguments, inline or from a file.
//!
//! Malformed JSON is a parse error; well-formed input that violates a
//! mathematical requirement (a cone that is not strongly convex, say) is
//! reported as a domain error.

use std::path::Path;

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;
use toric::{Cone, Fan, IntMatrix, IntVector, Lattice, LatticePolytope, TDivisor};

pub enum InputError {
    Parse(String),
    Domain(toric::Error),
}

impl From<toric::Error> for InputError {
    fn from(e: toric::Error) -> Self {
        InputError::Domain(e)
    }
}

type Result<T> = std::result::Result<T, InputError>;

fn read(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| InputError::Parse(format!("{arg}: {e}")))
}

fn parse<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T> {
    serde_json::from_str(&read(arg)?).map_err(|e| InputError::Parse(format!("{what}: {e}")))
}

pub fn load_vector(arg: &str) -> Result<IntVector> {
    parse(arg, "vector")
}

pub fn load_points(arg: &str) -> Result<Vec<IntVector>> {
    parse(arg, "points")
}

/// A list of generators, e.g. `[[1,0],[3,4]]`.
pub fn load_cone(arg: &str) -> Result<Cone> {
    let gens: Vec<IntVector> = parse(arg, "cone")?;
    let n = gens.first().map(IntVector::dim).ok_or_else(|| InputError::Parse("cone: no generators".into()))?;
    Ok(Cone::new(n, gens)?)
}

/// Rows of a lattice basis; the standard lattice when absent.
pub fn load_lattice(arg: Option<&str>, dim: usize) -> Result<Lattice> {
    match arg {
        None => Ok(Lattice::standard(dim)),
        Some(a) => {
            let rows: Vec<IntVector> = parse(a, "lattice")?;
            Ok(Lattice::new(IntMatrix::from_rows(rows)?)?)
        }
    }
}

#[derive(Deserialize)]
struct FanObject {
    ambient_dim: Option<usize>,
    maximal_cones: Vec<Vec<IntVector>>,
}

/// Either `{"ambient_dim": n, "maximal_cones": [...]}` or the bare list of
/// maximal cones.
pub fn load_fan(arg: &str) -> Result<Fan> {
    let value: Value = parse(arg, "fan")?;
    let (dim, cones) = if value.is_array() {
        let cones: Vec<Vec<IntVector>> = serde_json::from_value(value).map_err(|e| InputError::Parse(format!("fan: {e}")))?;
        (None, cones)
    } else {
        let f: FanObject = serde_json::from_value(value).map_err(|e| InputError::Parse(format!("fan: {e}")))?;
        (f.ambient_dim, f.maximal_cones)
    };
    let n = dim
        .or_else(|| cones.iter().flatten().next().map(IntVector::dim))
        .ok_or_else(|| InputError::Parse("fan: cannot tell the ambient dimension".into()))?;
    Ok(Fan::new(n, cones)?)
}

#[derive(Deserialize)]
struct DivisorObject {
    rays: Vec<IntVector>,
    coefficients: Vec<i64>,
    maximal_cones: Option<Vec<Vec<IntVector>>>,
}

pub fn load_divisor(arg: &str) -> Result<TDivisor> {
    let d: DivisorObject = parse(arg, "divisor")?;
    let coefficients: Vec<BigInt> = d.coefficients.into_iter().map(BigInt::from).collect();
    Ok(TDivisor::from_rays(&d.rays, &coefficients, d.maximal_cones)?)
}

pub fn load_polytope(arg: &str) -> Result<LatticePolytope> {
    parse(arg, "polytope")
}
