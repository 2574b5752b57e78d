//! Hypermetric side of the rank computation.
//!
//! The rank of `P` equals the dimension of the space of distance vectors
//! `d(u, v)` (one unknown per unordered vertex pair) satisfying
//! `Σ_v y(v)·d(u, v) = 0` for every dependency `y` and every vertex `u`. This
//! module builds that system and computes its solution dimension without ever
//! touching Gram parameters, which makes it an independent check on
//! [`crate::rank::rank_of`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::deps::dependency_module;
use crate::error::{Error, Result};
use crate::exact::{Rational, SparseEchelon};
use crate::model::{circumcenter, distance_matrix, verify_empty_sphere, DistanceMatrix, GramForm, Polytope};

/// Integer vector `b` over the vertex set with `Σ b = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypVector {
    b: Vec<BigInt>,
}

impl HypVector {
    pub fn new(b: Vec<BigInt>) -> Result<Self> {
        let s: BigInt = b.iter().sum();
        if !s.is_one() {
            return Err(Error::SumNotOne(s.to_string()));
        }
        Ok(HypVector { b })
    }

    pub fn from_i64(b: &[i64]) -> Result<Self> {
        Self::new(b.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `y + δ_w` for a dependency `y`.
    pub fn from_dependency(y: &[BigInt], w: usize) -> Result<Self> {
        let mut b = y.to_vec();
        b[w] += 1;
        Self::new(b)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.b
    }
}

/// `Σ_{u<v} b(u)·b(v)·d(u, v)`: half the ordered double sum, so the sign and
/// the zero set are those of the hypermetric form.
pub fn eval_hypermetric(d: &DistanceMatrix, b: &HypVector) -> Result<Rational> {
    if b.b.len() != d.len() {
        return Err(Error::DimensionMismatch {
            expected: d.len(),
            found: b.b.len(),
        });
    }
    let mut total = Rational::zero();
    for u in 0..d.len() {
        if b.b[u].is_zero() {
            continue;
        }
        for v in u + 1..d.len() {
            if b.b[v].is_zero() {
                continue;
            }
            total += d.get(u, v) * Rational::from_integer(&b.b[u] * &b.b[v]);
        }
    }
    Ok(total)
}

/// `Σ_v b(v)·z(v)` and the index of the vertex it coincides with, if any.
pub fn representation_point(p: &Polytope, b: &HypVector) -> Result<(Vec<Rational>, Option<usize>)> {
    if b.b.len() != p.num_vertices() {
        return Err(Error::DimensionMismatch {
            expected: p.num_vertices(),
            found: b.b.len(),
        });
    }
    let mut point = vec![Rational::zero(); p.dim()];
    for (v, c) in p.vertices().iter().zip(&b.b) {
        if c.is_zero() {
            continue;
        }
        let c = Rational::from_integer(c.clone());
        for (x, z) in point.iter_mut().zip(v) {
            *x += z * &c;
        }
    }
    let hit = p.index_of(&point);
    Ok((point, hit))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub value: Rational,
    pub equality: bool,
    pub point: Vec<Rational>,
    pub vertex: Option<usize>,
    /// `equality` holds exactly when the point is a vertex.
    pub consistent: bool,
    /// Window used to confirm the vertex set is `L(P) ∩ S` before trusting
    /// the equality ⇒ vertex direction.
    pub window: usize,
    pub window_is_delaunay: bool,
}

/// Evaluates both sides of "`H(b)d = 0` iff `Σ b(v)·v` is a vertex" for a
/// cospherical configuration. The backward direction relies on the sphere
/// being empty, which is only checked inside the given window.
pub fn check_lemma_hy(p: &Polytope, g: &GramForm, b: &HypVector, window: usize) -> Result<LemmaCheck> {
    let sphere = verify_empty_sphere(p, g, window)?;
    let d = distance_matrix(p, g)?;
    Ok(lemma_check_with(p, &d, b, window, sphere.is_delaunay()))
}

pub(crate) fn lemma_check_with(
    p: &Polytope,
    d: &DistanceMatrix,
    b: &HypVector,
    window: usize,
    window_is_delaunay: bool,
) -> LemmaCheck {
    let value = eval_hypermetric(d, b).expect("sizes checked by caller");
    let (point, vertex) = representation_point(p, b).expect("sizes checked by caller");
    let equality = value.is_zero();
    LemmaCheck {
        consistent: equality == vertex.is_some(),
        value,
        equality,
        point,
        vertex,
        window,
        window_is_delaunay,
    }
}

/// Linear system on the pair distances `d(u, v)`, `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSystem {
    vertices: usize,
    /// Unordered pairs in lexicographic order.
    pub columns: Vec<(usize, usize)>,
    /// Sparse rows `(column, coefficient)`, one per (dependency, probe vertex).
    pub rows: Vec<Vec<(usize, BigInt)>>,
}

impl FaceSystem {
    pub fn new(num_vertices: usize, deps: &[Vec<BigInt>]) -> Self {
        let mut columns = Vec::with_capacity(num_vertices * num_vertices.saturating_sub(1) / 2);
        for u in 0..num_vertices {
            for v in u + 1..num_vertices {
                columns.push((u, v));
            }
        }
        let mut rows = Vec::with_capacity(deps.len() * num_vertices);
        for y in deps {
            for u in 0..num_vertices {
                let row: Vec<(usize, BigInt)> = y
                    .iter()
                    .enumerate()
                    .filter(|&(v, c)| v != u && !c.is_zero())
                    .map(|(v, c)| (pair_index(num_vertices, u, v), c.clone()))
                    .collect();
                rows.push(row);
            }
        }
        FaceSystem {
            vertices: num_vertices,
            columns,
            rows,
        }
    }

    pub fn num_unknowns(&self) -> usize {
        self.columns.len()
    }

    /// Exact rank of the system.
    ///
    /// Elimination runs on columns renumbered so that pairs with later
    /// vertices come first; dependencies in canonical form are supported on
    /// the earliest vertices plus a few late ones, so eliminating late pairs
    /// first keeps rows short.
    pub fn rank(&self) -> usize {
        let nv = self.vertices;
        let order = |col: usize| -> usize {
            let (u, v) = self.columns[col];
            // v > u; larger v first, then larger u.
            let (a, b) = (nv - 1 - v, nv - 1 - u);
            // pairs (a, b) with a < b, lexicographic
            a * nv + b
        };
        let mut ech = SparseEchelon::new();
        for row in &self.rows {
            let r: Vec<(usize, BigInt)> = row.iter().map(|(c, x)| (order(*c), x.clone())).collect();
            ech.insert(r);
            if ech.rank() == self.columns.len() {
                break;
            }
        }
        ech.rank()
    }

    /// Whether `d` (indexed by `columns`) satisfies every row.
    pub fn is_solution(&self, d: &[Rational]) -> bool {
        self.rows.iter().all(|row| {
            row.iter()
                .map(|(c, x)| &d[*c] * Rational::from_integer(x.clone()))
                .sum::<Rational>()
                .is_zero()
        })
    }
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Dimension of the solution space of the dependency/distance system built
/// from the saturated dependency basis and every probe vertex.
pub fn face_dimension(p: &Polytope) -> usize {
    let deps = dependency_module(p);
    let sys = FaceSystem::new(p.num_vertices(), &deps.vectors);
    sys.num_unknowns() - sys.rank()
}

/// [`face_dimension`] of the polytope induced on `subset`.
pub fn restricted_face_dimension(p: &Polytope, subset: &[usize]) -> Result<usize> {
    let q = p.induced(subset)?;
    Ok(face_dimension(&q))
}

/// Distance vector of `(P, G)` in [`FaceSystem`] column order.
pub fn distance_vector(p: &Polytope, g: &GramForm) -> Result<Vec<Rational>> {
    circumcenter(p, g)?;
    let d = distance_matrix(p, g)?;
    let n = p.num_vertices();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            out.push(d.get(u, v).clone());
        }
    }
    Ok(out)
}
