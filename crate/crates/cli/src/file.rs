//! JSON polytope files.
//!
//! ```json
//! { "name": "square", "dim": 2,
//!   "vertices": [["0","0"],["1","0"],["0","1"],["1","1"]],
//!   "gram": [["1","0"],["0","1"]] }
//! ```
//!
//! Exactly one of `vertices` and `distances` is present. Numbers are exact
//! rationals written as strings `"p"` or `"p/q"`; plain JSON integers are
//! accepted on input.

use delaunay_rank::exact::{format_rational, parse_rational};
use delaunay_rank::families::FamilyInstance;
use delaunay_rank::model::from_distances;
use delaunay_rank::{DistanceMatrix, GramForm, Polytope, Rational, RationalMatrix};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Text(String),
    Int(i64),
}

impl Number {
    fn parse(&self) -> Result<Rational, CliError> {
        match self {
            Number::Text(s) => parse_rational(s).map_err(CliError::from),
            Number::Int(i) => Ok(Rational::from_integer((*i).into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<Number>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<Number>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distances: Option<Vec<Vec<Number>>>,
}

/// A validated input file.
#[derive(Debug, Clone)]
pub struct Input {
    pub name: Option<String>,
    pub digest: String,
    pub polytope: Polytope,
    pub gram: Option<GramForm>,
}

fn to_strings(rows: &[Vec<Rational>]) -> Vec<Vec<Number>> {
    rows.iter()
        .map(|r| r.iter().map(|x| Number::Text(format_rational(x))).collect())
        .collect()
}

fn parse_matrix(rows: &[Vec<Number>], what: &str) -> Result<RationalMatrix, CliError> {
    let n = rows.len();
    let parsed = rows
        .iter()
        .map(|r| {
            if r.len() != n {
                return Err(CliError::Invalid(format!("{what} is not square")));
            }
            r.iter().map(Number::parse).collect()
        })
        .collect::<Result<Vec<Vec<Rational>>, _>>()?;
    Ok(RationalMatrix::from_rows(n, parsed))
}

impl PolytopeFile {
    pub fn from_polytope(name: Option<String>, p: &Polytope, gram: Option<&GramForm>) -> Self {
        PolytopeFile {
            name,
            dim: p.dim(),
            vertices: Some(to_strings(p.vertices())),
            gram: gram.map(|g| to_strings(&g.matrix().row_vecs())),
            distances: None,
        }
    }

    pub fn from_distances(name: Option<String>, dim: usize, d: &DistanceMatrix) -> Self {
        PolytopeFile {
            name,
            dim,
            vertices: None,
            gram: None,
            distances: Some(to_strings(&d.matrix().row_vecs())),
        }
    }

    /// Canonical file for a generated family member. Polytopes defined by
    /// their distances are written as distance matrices.
    pub fn from_family(inst: &FamilyInstance) -> Self {
        match &inst.distances {
            Some(d) => Self::from_distances(Some(inst.name.clone()), inst.polytope.dim(), d),
            None => Self::from_polytope(Some(inst.name.clone()), &inst.polytope, Some(&inst.gram)),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<(Polytope, Option<GramForm>), CliError> {
        match (&self.vertices, &self.distances) {
            (Some(_), Some(_)) => Err(CliError::Invalid(
                "give either vertices or distances, not both".into(),
            )),
            (None, None) => Err(CliError::Invalid("missing vertices or distances".into())),
            (Some(rows), None) => {
                let vertices = rows
                    .iter()
                    .map(|r| r.iter().map(Number::parse).collect())
                    .collect::<Result<Vec<Vec<Rational>>, _>>()?;
                let p = Polytope::from_coords(self.dim, vertices)?;
                let gram = match &self.gram {
                    Some(g) => {
                        let m = parse_matrix(g, "gram")?;
                        if m.rows() != self.dim {
                            return Err(CliError::Invalid(format!(
                                "gram is {}x{}, expected {}x{}",
                                m.rows(),
                                m.rows(),
                                self.dim,
                                self.dim
                            )));
                        }
                        Some(GramForm::new(m)?)
                    }
                    None => None,
                };
                Ok((p, gram))
            }
            (None, Some(rows)) => {
                if self.gram.is_some() {
                    return Err(CliError::Invalid(
                        "gram is derived from the distances and must be omitted".into(),
                    ));
                }
                let d = DistanceMatrix::new(parse_matrix(rows, "distances")?)?;
                let (p, g) = from_distances(&d)?;
                if p.dim() != self.dim {
                    return Err(CliError::Invalid(format!(
                        "distances realize dimension {}, file says {}",
                        p.dim(),
                        self.dim
                    )));
                }
                Ok((p, Some(g)))
            }
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn parse_input(bytes: &[u8]) -> Result<Input, CliError> {
    let file: PolytopeFile = serde_json::from_slice(bytes)
        .map_err(|e| CliError::Invalid(format!("malformed polytope file: {e}")))?;
    let (polytope, gram) = file.validate()?;
    Ok(Input {
        name: file.name,
        digest: digest(bytes),
        polytope,
        gram,
    })
}

pub fn read_input(path: &std::path::Path) -> Result<Input, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_input(&bytes)
}
