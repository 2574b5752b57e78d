use std::path::{Path, PathBuf};

use delaunay_rank::basis::classify_basicity;
use delaunay_rank::deps::dependency_module;
use delaunay_rank::families::{Family, FamilySpec};
use delaunay_rank::hyp::face_dimension;
use delaunay_rank::model::{circumcenter, is_centrally_symmetric, verify_empty_sphere};
use delaunay_rank::rank::{check_symmetric_reduction, nrd, rank_of};
use delaunay_rank::{Error, Polytope, Rational};
use num_traits::{One, Signed};

use crate::file::{read_input, Input, PolytopeFile};
use crate::report::*;
use crate::{CliError, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Bspace,
    Hypermetric,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Bspace => "bspace",
            Method::Hypermetric => "hypermetric",
            Method::Both => "both",
        }
    }
}

pub fn rank(path: &Path, method: Method) -> Result<Outcome, CliError> {
    let input = read_input(path)?;
    let p = &input.polytope;
    let bspace = matches!(method, Method::Bspace | Method::Both).then(|| rank_of(p));
    let hyper = matches!(method, Method::Hypermetric | Method::Both).then(|| face_dimension(p));
    let agree = match (bspace, hyper) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let doc = RankDocument {
        command: "rank",
        input: (&input).into(),
        method: method.name(),
        bspace_rank: bspace,
        hypermetric_rank: hyper,
        agree,
    };
    Ok(Outcome::with_status(to_json(&doc), agree != Some(false)))
}

pub fn family(name: &str, n: Option<usize>, output: Option<&Path>) -> Result<Outcome, CliError> {
    let family: Family = name.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let n = match (family, n) {
        (Family::P0, _) => 12,
        (_, Some(n)) => n,
        (_, None) => return Err(CliError::Usage(format!("{family} needs a dimension"))),
    };
    let spec = FamilySpec::new(family, n).map_err(|e| CliError::Usage(e.to_string()))?;
    let json = PolytopeFile::from_family(&spec.build()).to_json();
    match output {
        Some(path) => {
            std::fs::write(path, &json)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(json)),
    }
}

pub fn deps(path: &Path) -> Result<Outcome, CliError> {
    let input = read_input(path)?;
    let p = &input.polytope;
    let basis = dependency_module(p);
    let doc = DepsDocument {
        command: "deps",
        input: (&input).into(),
        dim: p.dim(),
        vertex_count: p.num_vertices(),
        count: basis.len(),
        dependencies: basis.vectors.iter().map(|y| integers(y)).collect(),
    };
    Ok(Outcome::ok(to_json(&doc)))
}

pub fn basicity(path: &Path, budget: usize) -> Result<Outcome, CliError> {
    let input = read_input(path)?;
    let class = classify_basicity(&input.polytope, budget);
    let doc = BasicityDocument {
        command: "basicity",
        input: (&input).into(),
        basicity: BasicitySection::new(&class, budget),
    };
    Ok(Outcome::ok(to_json(&doc)))
}

struct SphereData {
    cospherical: bool,
    off_sphere_vertex: Option<usize>,
    sphere: Option<SphereSection>,
    centrally_symmetric: Option<bool>,
    emptiness: Option<EmptinessSection>,
}

fn sphere_data(input: &Input, window: usize) -> Result<SphereData, CliError> {
    let p = &input.polytope;
    let g = input
        .gram
        .as_ref()
        .ok_or_else(|| CliError::Invalid("the file carries no Gram form".into()))?;
    match circumcenter(p, g) {
        Ok(circ) => {
            let emptiness = verify_empty_sphere(p, g, window)?;
            Ok(SphereData {
                cospherical: true,
                off_sphere_vertex: None,
                sphere: Some(SphereSection {
                    center: rationals(&circ.center),
                    radius_sq: delaunay_rank::exact::format_rational(&circ.radius_sq),
                }),
                centrally_symmetric: Some(is_centrally_symmetric(p, g)?.symmetric),
                emptiness: Some((&emptiness).into()),
            })
        }
        Err(Error::NotCospherical(v)) => Ok(SphereData {
            cospherical: false,
            off_sphere_vertex: Some(v),
            sphere: None,
            centrally_symmetric: None,
            emptiness: None,
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn verify(path: &Path, window: usize) -> Result<Outcome, CliError> {
    let input = read_input(path)?;
    let s = sphere_data(&input, window)?;
    let doc = VerifyDocument {
        command: "verify",
        input: (&input).into(),
        cospherical: s.cospherical,
        off_sphere_vertex: s.off_sphere_vertex,
        sphere: s.sphere,
        centrally_symmetric: s.centrally_symmetric,
        emptiness: s.emptiness,
    };
    Ok(Outcome::with_status(to_json(&doc), s.cospherical))
}

pub fn nrd_of(paths: &[PathBuf]) -> Result<Outcome, CliError> {
    if paths.is_empty() {
        return Err(CliError::Usage("nrd needs at least one file".into()));
    }
    let inputs = paths
        .iter()
        .map(|p| read_input(p))
        .collect::<Result<Vec<_>, _>>()?;
    let polytopes: Vec<Polytope> = inputs.iter().map(|i| i.polytope.clone()).collect();
    let value = nrd(&polytopes)?;
    let doc = NrdDocument {
        command: "nrd",
        inputs: inputs.iter().map(InputInfo::from).collect(),
        dim: polytopes[0].dim(),
        nrd: value,
    };
    Ok(Outcome::ok(to_json(&doc)))
}

/// Covolume of the lattice generated by the vertex differences, measured in
/// the coordinate lattice.
fn lattice_covolume(p: &Polytope) -> Rational {
    p.lattice_basis().determinant().abs()
}

pub fn build_report(input: &Input, budget: usize, window: usize) -> Result<ReportDocument, CliError> {
    let p = &input.polytope;
    let rank = rank_of(p);
    let face = face_dimension(p);
    let deps = dependency_module(p);
    let class = classify_basicity(p, budget);
    let mut warnings = Vec::new();

    let covolume = lattice_covolume(p);
    if !covolume.is_one() {
        warnings.push(format!(
            "coordinates are not taken in a basis of the lattice generated by the vertices (covolume {})",
            delaunay_rank::exact::format_rational(&covolume)
        ));
    }

    let (sphere, symmetric, emptiness, reduction) = if input.gram.is_some() {
        let s = sphere_data(input, window)?;
        if !s.cospherical {
            warnings.push(format!(
                "vertex {} is not on the sphere through the others",
                s.off_sphere_vertex.expect("set when not cospherical")
            ));
        }
        if s.emptiness.is_some() {
            warnings.push(delaunay_rank::model::EmptySphereReport::LABEL.to_string());
        }
        let reduction = if s.cospherical {
            let g = input.gram.as_ref().expect("checked above");
            Some(ReductionSection::from(&check_symmetric_reduction(p, g)?))
        } else {
            None
        };
        (s.sphere, s.centrally_symmetric, s.emptiness, reduction)
    } else {
        warnings.push("no Gram form: sphere, symmetry and emptiness not evaluated".into());
        (None, None, None, None)
    };
    if rank != face {
        warnings.push(format!("rank {rank} differs from face dimension {face}"));
    }

    Ok(ReportDocument {
        command: "report",
        input: input.into(),
        dim: p.dim(),
        vertex_count: p.num_vertices(),
        rank,
        face_dimension: face,
        methods_agree: rank == face,
        extreme: rank == 1,
        dependencies: deps.vectors.iter().map(|y| integers(y)).collect(),
        basicity: BasicitySection::new(&class, budget),
        sphere,
        centrally_symmetric: symmetric,
        emptiness,
        symmetric_reduction: reduction,
        warnings,
    })
}

pub fn report(path: &Path, budget: usize, window: usize) -> Result<Outcome, CliError> {
    let input = read_input(path)?;
    let doc = build_report(&input, budget, window)?;
    let off_sphere = input.gram.is_some() && doc.sphere.is_none();
    let consistent = doc.methods_agree && !off_sphere;
    Ok(Outcome::with_status(to_json(&doc), consistent))
}
