//! Rank of a Delaunay polytope through its space of Gram parameters.
//!
//! Every affine dependency `y` of the vertex coordinates `z(v)` gives one
//! linear equation `Σ_{i,j} (Σ_v y(v) z_i(v) z_j(v)) b_ij = 0` on the entries
//! `b_ij = <b_i, b_j>` of the Gram matrix. The solution space `B(P)` is the
//! space of quadratic forms for which `P` stays inscribed in a sphere; its
//! dimension is the rank.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::basis::BasicityClass;
use crate::deps::{basis_dependencies, dependency_module};
use crate::error::{Error, Result};
use crate::exact::{IntMatrix, Rational, RationalMatrix};
use crate::model::{circumcenter, symmetry_about, GramForm, Polytope};

/// Number of Gram parameters `b_ij`, `i ≤ j`.
pub fn num_params(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Upper-triangle parameter pairs in lexicographic order.
pub fn param_columns(n: usize) -> Vec<(usize, usize)> {
    let mut cols = Vec::with_capacity(num_params(n));
    for i in 0..n {
        for j in i..n {
            cols.push((i, j));
        }
    }
    cols
}

/// Linear constraints on the Gram parameters whose solution space is `B(P)`.
///
/// Off-diagonal coefficients are doubled so that contracting a row with the
/// upper triangle of a symmetric matrix gives the full double sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub dim: usize,
    pub columns: Vec<(usize, usize)>,
    pub matrix: RationalMatrix,
}

impl ConstraintSystem {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `Σ_{i,j} coef · m_ij` for each row.
    pub fn contract(&self, m: &RationalMatrix) -> Vec<Rational> {
        let upper: Vec<Rational> = self.columns.iter().map(|&(i, j)| m[(i, j)].clone()).collect();
        self.matrix.mul_vec(&upper)
    }
}

fn constraint_row(p: &Polytope, y: &[BigInt], columns: &[(usize, usize)]) -> Vec<Rational> {
    let two = Rational::from_integer(BigInt::from(2));
    columns
        .iter()
        .map(|&(i, j)| {
            let s: Rational = p
                .vertices()
                .iter()
                .zip(y)
                .filter(|(_, c)| !c.is_zero())
                .map(|(v, c)| &v[i] * &v[j] * Rational::from_integer(c.clone()))
                .sum();
            if i == j {
                s
            } else {
                s * &two
            }
        })
        .collect()
}

/// Constraint system from an arbitrary list of dependencies.
pub fn constraints_from(p: &Polytope, deps: &[Vec<BigInt>]) -> ConstraintSystem {
    let n = p.dim();
    let columns = param_columns(n);
    let rows = deps.iter().map(|y| constraint_row(p, y, &columns)).collect();
    ConstraintSystem {
        dim: n,
        matrix: RationalMatrix::from_rows(columns.len(), rows),
        columns,
    }
}

/// One row per vector of the saturated dependency basis.
pub fn bspace_constraints(p: &Polytope) -> ConstraintSystem {
    constraints_from(p, &dependency_module(p).vectors)
}

/// One row per vertex dependency `y_w` over the affine basis `v0`.
pub fn bspace_constraints_over(p: &Polytope, v0: &[usize]) -> Result<ConstraintSystem> {
    let deps: Vec<Vec<BigInt>> = basis_dependencies(p, v0)?.into_iter().map(|d| d.y).collect();
    Ok(constraints_from(p, &deps))
}

/// `dim B(P)`.
pub fn rank_of(p: &Polytope) -> usize {
    num_params(p.dim()) - bspace_constraints(p).rank()
}

/// Basis of `B(P)` as symmetric matrices.
pub fn bspace_basis(p: &Polytope) -> Vec<RationalMatrix> {
    let sys = bspace_constraints(p);
    let n = p.dim();
    sys.matrix
        .nullspace()
        .into_iter()
        .map(|x| {
            let mut m = RationalMatrix::zeros(n, n);
            for (k, &(i, j)) in sys.columns.iter().enumerate() {
                m[(i, j)] = x[k].clone();
                m[(j, i)] = x[k].clone();
            }
            m
        })
        .collect()
}

/// System in the Gram parameters and the `n` center parameters `<c, b_i>`:
/// `2 Σ_i a_i(v) <c, b_i> = Σ_{i,j} a_i(v) a_j(v) b_ij` for every `v ≠ v0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullSystem {
    pub dim: usize,
    /// Rows are vertices other than `v0`, in vertex order. Columns are the
    /// Gram parameters in [`param_columns`] order followed by `<c, b_i>`.
    pub matrix: RationalMatrix,
}

impl FullSystem {
    pub fn num_params(&self) -> usize {
        self.matrix.cols()
    }

    /// Dimension of the projection of the solution space onto the Gram
    /// parameters.
    pub fn projected_dimension(&self) -> usize {
        let k = num_params(self.dim);
        let proj: Vec<Vec<Rational>> = self
            .matrix
            .nullspace()
            .into_iter()
            .map(|x| x[..k].to_vec())
            .collect();
        if proj.is_empty() {
            return 0;
        }
        RationalMatrix::from_rows(k, proj).rank()
    }
}

pub fn full_system(p: &Polytope) -> FullSystem {
    let n = p.dim();
    let columns = param_columns(n);
    let two = Rational::from_integer(BigInt::from(2));
    let mut m = RationalMatrix::zeros(0, columns.len() + n);
    for v in 0..p.num_vertices() {
        if v == p.base_index() {
            continue;
        }
        let a = p.relative(v);
        let mut row: Vec<Rational> = columns
            .iter()
            .map(|&(i, j)| {
                let x = &a[i] * &a[j];
                if i == j {
                    x
                } else {
                    x * &two
                }
            })
            .collect();
        row.extend(a.iter().map(|x| -(x * &two)));
        m.push_row(row);
    }
    FullSystem { dim: n, matrix: m }
}

pub fn is_extreme(p: &Polytope) -> bool {
    rank_of(p) == 1
}

/// Coordinates `z'(v) = U·z(v)` for a unimodular `U`.
pub fn transform_basis(p: &Polytope, u: &IntMatrix) -> Result<Polytope> {
    if u.rows() != p.dim() || u.cols() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: u.rows(),
        });
    }
    let det = u.determinant();
    if !(det.is_one() || (-det.clone()).is_one()) {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    let ur = int_to_rational(u);
    let vertices = p.vertices().iter().map(|v| ur.mul_vec(v)).collect();
    Polytope::from_coords(p.dim(), vertices)?.with_base(p.base_index())
}

/// Coordinates over the affine basis `v0` of vertices: `v0[0]` becomes the
/// origin and `v0[k]` the unit vector `e_k`. The Gram form is carried along.
pub fn rebase(p: &Polytope, g: &GramForm, v0: &[usize]) -> Result<(Polytope, GramForm)> {
    let n = p.dim();
    if v0.len() != n + 1 {
        return Err(Error::NotAffineBasis(format!(
            "{} vertices given, {} needed",
            v0.len(),
            n + 1
        )));
    }
    if let Some(&bad) = v0.iter().find(|&&i| i >= p.num_vertices()) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let origin = p.vertex(v0[0]);
    // Columns are the new basis vectors in old coordinates.
    let a = RationalMatrix::from_rows(
        n,
        v0[1..]
            .iter()
            .map(|&v| p.vertex(v).iter().zip(origin).map(|(x, o)| x - o).collect())
            .collect(),
    )
    .transpose();
    let inv = a
        .inverse()
        .ok_or_else(|| Error::NotAffineBasis("affinely dependent".into()))?;
    let vertices = p
        .vertices()
        .iter()
        .map(|v| {
            let rel: Vec<Rational> = v.iter().zip(origin).map(|(x, o)| x - o).collect();
            inv.mul_vec(&rel)
        })
        .collect();
    let gram = GramForm::new(a.transpose().mul(g.matrix()).mul(&a))?;
    Ok((Polytope::from_coords(n, vertices)?, gram))
}

/// `v ↦ a + v`, or `v ↦ a - v` when `reflect` is set.
pub fn translate(p: &Polytope, a: &[BigInt], reflect: bool) -> Result<Polytope> {
    if a.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: a.len(),
        });
    }
    let vertices = p
        .vertices()
        .iter()
        .map(|v| {
            v.iter()
                .zip(a)
                .map(|(x, s)| {
                    let s = Rational::from_integer(s.clone());
                    if reflect {
                        s - x
                    } else {
                        s + x
                    }
                })
                .collect()
        })
        .collect();
    Polytope::from_coords(p.dim(), vertices)?.with_base(p.base_index())
}

/// Dimension of the intersection of the `B(P)` spaces of polytopes given in a
/// common reference basis.
pub fn nrd(polytopes: &[Polytope]) -> Result<usize> {
    let first = polytopes.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    let mut stacked = RationalMatrix::zeros(0, num_params(n));
    for p in polytopes {
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.dim(),
            });
        }
        for row in bspace_constraints(p).matrix.row_vecs() {
            stacked.push_row(row);
        }
    }
    Ok(num_params(n) - stacked.rank())
}

pub(crate) fn int_to_rational(u: &IntMatrix) -> RationalMatrix {
    RationalMatrix::from_rows(
        u.cols(),
        u.row_vecs()
            .into_iter()
            .map(|r| r.into_iter().map(Rational::from_integer).collect())
            .collect(),
    )
}

/// Premises of the bound `rk(P) ≤ rk(P ∩ H)` for centrally symmetric
/// polytopes, `H` being the hyperplane of vanishing last coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hypothesis {
    /// `P` is centrally symmetric.
    CentrallySymmetric,
    /// (1) integral coordinates, `0` and every `e_i` are vertices.
    UnitVertices,
    /// (2) `P1 = P ∩ H` spans `H` and is asymmetric about its own center.
    AsymmetricSection,
    /// (3) if `e_n = 2c - v` for some `v ∈ V(P1)`, some vertex avoids
    /// `V(P1) ∪ (2c - V(P1))`.
    EscapeVertex,
}

impl Hypothesis {
    pub fn label(self) -> &'static str {
        match self {
            Hypothesis::CentrallySymmetric => "centrally symmetric",
            Hypothesis::UnitVertices => "hypothesis 1 (origin and unit vectors are vertices)",
            Hypothesis::AsymmetricSection => "hypothesis 2 (asymmetric full-dimensional section)",
            Hypothesis::EscapeVertex => "hypothesis 3 (escape vertex)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricReduction {
    pub failed: Vec<Hypothesis>,
    /// Last coordinate of `2c`.
    pub z: Rational,
    pub rank: Option<usize>,
    pub section_rank: Option<usize>,
    /// `rank ≤ section_rank`, evaluated only when every hypothesis holds.
    pub holds: Option<bool>,
}

impl SymmetricReduction {
    pub fn applicable(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Checks the premises of the centrally symmetric reduction and, when they
/// all hold, compares the two ranks.
///
/// Hypothesis 3 is read as: the escape vertex `u` is neither in `V(P1)` nor
/// in its reflection `2c - V(P1)`. For centrally symmetric `P` this forces
/// the last coordinate of `u` to differ from 0 and 1.
pub fn check_symmetric_reduction(p: &Polytope, g: &GramForm) -> Result<SymmetricReduction> {
    let circ = circumcenter(p, g)?;
    let n = p.dim();
    let two = Rational::from_integer(BigInt::from(2));
    let two_c: Vec<Rational> = circ.center.iter().map(|x| x * &two).collect();
    let z = two_c.last().cloned().unwrap_or_else(Rational::zero);
    let mut failed = Vec::new();

    if !symmetry_about(p, &circ.center).symmetric {
        failed.push(Hypothesis::CentrallySymmetric);
    }

    let unit = |i: usize| -> Vec<Rational> {
        (0..n)
            .map(|k| if k == i { Rational::one() } else { Rational::zero() })
            .collect()
    };
    let origin = vec![Rational::zero(); n];
    if !(p.is_integral()
        && p.index_of(&origin).is_some()
        && (0..n).all(|i| p.index_of(&unit(i)).is_some()))
    {
        failed.push(Hypothesis::UnitVertices);
    }

    let section_idx: Vec<usize> = (0..p.num_vertices())
        .filter(|&i| n > 0 && p.vertex(i)[n - 1].is_zero())
        .collect();
    let section = if n >= 2 {
        let verts: Vec<Vec<Rational>> = section_idx
            .iter()
            .map(|&i| p.vertex(i)[..n - 1].to_vec())
            .collect();
        Polytope::from_coords(n - 1, verts).ok()
    } else {
        None
    };
    let asymmetric = section.as_ref().is_some_and(|s| {
        circumcenter(s, &g.leading(n - 1))
            .map(|c| !symmetry_about(s, &c.center).symmetric)
            .unwrap_or(false)
    });
    if !asymmetric {
        failed.push(Hypothesis::AsymmetricSection);
    }

    let reflect = |i: usize| -> Vec<Rational> {
        two_c.iter().zip(p.vertex(i)).map(|(a, b)| a - b).collect()
    };
    if n > 0 {
        let e_n = unit(n - 1);
        let reflected: Vec<Vec<Rational>> = section_idx.iter().map(|&i| reflect(i)).collect();
        if reflected.contains(&e_n) {
            let escape = (0..p.num_vertices()).any(|u| {
                !section_idx.contains(&u) && !reflected.iter().any(|r| r.as_slice() == p.vertex(u))
            });
            if !escape {
                failed.push(Hypothesis::EscapeVertex);
            }
        }
    }

    let (rank, section_rank, holds) = match (&section, failed.is_empty()) {
        (Some(s), true) => {
            let r = rank_of(p);
            let r1 = rank_of(s);
            (Some(r), Some(r1), Some(r <= r1))
        }
        _ => (None, None, None),
    };
    Ok(SymmetricReduction {
        failed,
        z,
        rank,
        section_rank,
        holds,
    })
}

/// Aggregated analysis of one polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub dim: usize,
    pub vertices: usize,
    pub rank: usize,
    pub dependency_count: usize,
    pub face_dimension: Option<usize>,
    pub extreme: bool,
    pub centrally_symmetric: Option<bool>,
    pub basicity: Option<BasicityClass>,
    pub notes: Vec<String>,
}

impl RankReport {
    /// Rank and dependency data; optional parts are filled by the caller.
    pub fn new(p: &Polytope) -> Self {
        let deps = dependency_module(p);
        let sys = constraints_from(p, &deps.vectors);
        let rank = num_params(p.dim()) - sys.rank();
        RankReport {
            dim: p.dim(),
            vertices: p.num_vertices(),
            rank,
            dependency_count: deps.len(),
            face_dimension: None,
            extreme: rank == 1,
            centrally_symmetric: None,
            basicity: None,
            notes: Vec::new(),
        }
    }

    /// Whether the rank and the face dimension, when present, agree.
    pub fn consistent(&self) -> bool {
        self.face_dimension.is_none_or(|f| f == self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn square() -> Polytope {
        Polytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn square_constraints() {
        let sys = bspace_constraints(&square());
        assert_eq!(sys.columns, vec![(0, 0), (0, 1), (1, 1)]);
        // y = (1,-1,-1,1): b11: 0-1-0+1 = 0, b12: 2·(0-0-0+1) = 2, b22: 0
        assert_eq!(sys.matrix.row(0), &[int(0), int(2), int(0)]);
        assert_eq!(rank_of(&square()), 2);
    }

    #[test]
    fn square_bspace_basis() {
        let basis = bspace_basis(&square());
        let e11 = RationalMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        let e22 = RationalMatrix::from_i64(&[&[0, 0], &[0, 1]]);
        assert_eq!(basis, vec![e11, e22]);
    }

    #[test]
    fn square_full_system() {
        let fs = full_system(&square());
        assert_eq!(fs.matrix.rows(), 3);
        assert_eq!(fs.num_params(), 5);
        assert_eq!(fs.matrix.cols() - fs.matrix.rank(), 2);
        assert_eq!(fs.projected_dimension(), 2);
    }

    #[test]
    fn simplex_has_full_rank() {
        let p = Polytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(bspace_constraints(&p).matrix.rows(), 0);
        assert_eq!(rank_of(&p), 3);
        assert_eq!(bspace_basis(&p).len(), 3);
        let fs = full_system(&p);
        assert_eq!(fs.matrix.rows(), 2);
        assert_eq!(fs.projected_dimension(), 3);
        assert!(!is_extreme(&p));
    }

    #[test]
    fn shear_keeps_rank() {
        let u = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let q = transform_basis(&square(), &u).unwrap();
        assert_eq!(rank_of(&q), 2);
        assert_eq!(transform_basis(&square(), &IntMatrix::identity(2)).unwrap(), square());
        let bad = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert_eq!(
            transform_basis(&square(), &bad),
            Err(Error::NotUnimodular("2".into()))
        );
    }

    #[test]
    fn translation_keeps_row_space() {
        let a = [BigInt::from(5), BigInt::from(7)];
        for reflect in [false, true] {
            let q = translate(&square(), &a, reflect).unwrap();
            let mut both = bspace_constraints(&square()).matrix;
            for r in bspace_constraints(&q).matrix.row_vecs() {
                both.push_row(r);
            }
            assert_eq!(both.rank(), 1);
        }
        let q = translate(&square(), &[BigInt::zero(), BigInt::zero()], true).unwrap();
        assert_eq!(bspace_basis(&q), bspace_basis(&square()));
    }

    #[test]
    fn nrd_of_square_and_shear() {
        assert_eq!(nrd(&[square()]).unwrap(), 2);
        let q = transform_basis(&square(), &IntMatrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
        // Sheared vertices 0,(1,0),(1,1),(2,1): row 2·b11 + 2·b12 (b22
        // coefficient 0); with b12 = 0 from the square only b22 is left.
        let mut stacked = bspace_constraints(&square()).matrix;
        stacked.push_row(bspace_constraints(&q).matrix.row(0).to_vec());
        assert_eq!(stacked.rank(), 2);
        assert_eq!(nrd(&[square(), q]).unwrap(), 1);
        assert_eq!(nrd(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn square_reduction_not_applicable() {
        let r = check_symmetric_reduction(&square(), &GramForm::identity(2)).unwrap();
        assert!(!r.applicable());
        assert!(r.failed.contains(&Hypothesis::EscapeVertex));
        assert_eq!(r.z, int(1));
        assert_eq!(r.holds, None);
    }

    #[test]
    fn rebase_square() {
        let (q, g) = rebase(&square(), &GramForm::identity(2), &[3, 1, 2]).unwrap();
        // Origin (1,1), e1 = (0,-1), e2 = (-1,0).
        assert_eq!(q.vertex(0), &[int(1), int(1)]);
        assert_eq!(q.vertex(3), &[int(0), int(0)]);
        assert_eq!(g, GramForm::identity(2));
        assert!(matches!(
            rebase(&square(), &GramForm::identity(2), &[0, 1]),
            Err(Error::NotAffineBasis(_))
        ));
    }

    #[test]
    fn simplex_reduction_not_applicable() {
        let p = Polytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let r = check_symmetric_reduction(&p, &GramForm::identity(2)).unwrap();
        assert!(r.failed.contains(&Hypothesis::CentrallySymmetric));
    }

    #[test]
    fn cube_in_skew_basis_satisfies_reduction() {
        // Cube with basis f1 = e1+e2, f2 = e2+e3, f3 = e1: the section f3 = 0
        // is the triangle {0, f1, f2}.
        let cube = Polytope::from_i64(
            3,
            &[
                &[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0],
                &[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1],
            ],
        )
        .unwrap();
        // z' = U z where columns of U^{-1} are f1, f2, f3.
        let f = IntMatrix::from_i64(&[&[1, 0, 1], &[1, 1, 0], &[0, 1, 0]]);
        let finv = int_to_rational(&f).inverse().unwrap();
        let u = IntMatrix::from_rows(
            3,
            finv.row_vecs()
                .into_iter()
                .map(|r| r.into_iter().map(|x| x.to_integer()).collect())
                .collect(),
        );
        let p = transform_basis(&cube, &u).unwrap();
        let g = GramForm::identity(3).transformed(&u).unwrap();
        let r = check_symmetric_reduction(&p, &g).unwrap();
        assert!(r.applicable(), "{:?}", r.failed);
        assert_eq!(r.rank, Some(3));
        assert_eq!(r.section_rank, Some(3));
        assert_eq!(r.holds, Some(true));
    }
}
