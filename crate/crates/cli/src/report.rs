//! Output documents. Field names and order are part of the interface; every
//! document is printed as pretty JSON followed by a newline.

use delaunay_rank::basis::BasicityClass;
use delaunay_rank::exact::{format_rational, BigInt};
use delaunay_rank::model::EmptySphereReport;
use delaunay_rank::rank::SymmetricReduction;
use delaunay_rank::Rational;
use serde::Serialize;

use crate::file::Input;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputInfo {
    pub name: Option<String>,
    pub sha256: String,
}

impl From<&Input> for InputInfo {
    fn from(input: &Input) -> Self {
        InputInfo {
            name: input.name.clone(),
            sha256: input.digest.clone(),
        }
    }
}

pub fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn integers(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankDocument {
    pub command: &'static str,
    pub input: InputInfo,
    pub method: &'static str,
    pub bspace_rank: Option<usize>,
    pub hypermetric_rank: Option<usize>,
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepsDocument {
    pub command: &'static str,
    pub input: InputInfo,
    pub dim: usize,
    pub vertex_count: usize,
    pub count: usize,
    pub dependencies: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicitySection {
    pub class: &'static str,
    pub witness: Option<Vec<usize>>,
    /// Affinely independent subsets examined.
    pub tested: usize,
    pub budget: usize,
    pub exhaustive: bool,
}

impl BasicitySection {
    pub fn new(class: &BasicityClass, budget: usize) -> Self {
        let (witness, tested, exhaustive) = match class {
            BasicityClass::ZBasic { witness, tested } => (Some(witness.clone()), *tested, false),
            BasicityClass::QBasicOnly { tested } => (None, *tested, true),
            BasicityClass::Undecided { tested, .. } => (None, *tested, false),
        };
        BasicitySection {
            class: class.label(),
            witness,
            tested,
            budget,
            exhaustive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicityDocument {
    pub command: &'static str,
    pub input: InputInfo,
    pub basicity: BasicitySection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereSection {
    pub center: Vec<String>,
    pub radius_sq: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmptinessSection {
    pub label: &'static str,
    pub window: usize,
    pub empty: bool,
    pub delaunay: bool,
    pub points_in_ball: usize,
    pub strict_violations: Vec<Vec<String>>,
    pub extra_on_sphere: Vec<Vec<String>>,
}

impl From<&EmptySphereReport> for EmptinessSection {
    fn from(r: &EmptySphereReport) -> Self {
        EmptinessSection {
            label: EmptySphereReport::LABEL,
            window: r.window,
            empty: r.is_empty(),
            delaunay: r.is_delaunay(),
            points_in_ball: r.points_in_ball,
            strict_violations: r.strict_violations.iter().map(|v| rationals(v)).collect(),
            extra_on_sphere: r.extra_on_sphere.iter().map(|v| rationals(v)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyDocument {
    pub command: &'static str,
    pub input: InputInfo,
    pub cospherical: bool,
    /// First vertex off the sphere through the affine basis.
    pub off_sphere_vertex: Option<usize>,
    pub sphere: Option<SphereSection>,
    pub centrally_symmetric: Option<bool>,
    pub emptiness: Option<EmptinessSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NrdDocument {
    pub command: &'static str,
    pub inputs: Vec<InputInfo>,
    pub dim: usize,
    pub nrd: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionSection {
    pub applicable: bool,
    pub failed_hypotheses: Vec<&'static str>,
    pub rank: Option<usize>,
    pub section_rank: Option<usize>,
    pub holds: Option<bool>,
}

impl From<&SymmetricReduction> for ReductionSection {
    fn from(r: &SymmetricReduction) -> Self {
        ReductionSection {
            applicable: r.applicable(),
            failed_hypotheses: r.failed.iter().map(|h| h.label()).collect(),
            rank: r.rank,
            section_rank: r.section_rank,
            holds: r.holds,
        }
    }
}

/// Everything the tool knows about one polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub command: &'static str,
    pub input: InputInfo,
    pub dim: usize,
    pub vertex_count: usize,
    pub rank: usize,
    pub face_dimension: usize,
    pub methods_agree: bool,
    pub extreme: bool,
    pub dependencies: Vec<Vec<String>>,
    pub basicity: BasicitySection,
    pub sphere: Option<SphereSection>,
    pub centrally_symmetric: Option<bool>,
    pub emptiness: Option<EmptinessSection>,
    pub symmetric_reduction: Option<ReductionSection>,
    pub warnings: Vec<String>,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}
