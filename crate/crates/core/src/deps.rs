//! Integral affine dependencies of a vertex set.
//!
//! `Y(P)` is the Z-module of integer vectors `y` indexed by the vertices with
//! `Σ y(v) = 0` and `Σ y(v)·z(v) = 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{integral_kernel, primitivize, IntMatrix, Rational, RationalMatrix};
use crate::model::{DistanceMatrix, Polytope};

/// Saturated Z-basis of `Y(P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyBasis {
    pub vectors: Vec<Vec<BigInt>>,
}

impl DependencyBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Dependency `y_w` expressing vertex `w` over an affine basis `V0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDependency {
    pub w: usize,
    pub y: Vec<BigInt>,
}

/// The `(n+1) × |V|` integer matrix whose kernel is `Y(P)`: one row per
/// coordinate (scaled by its common denominator) and a row of ones.
fn affine_matrix(p: &Polytope) -> IntMatrix {
    let nv = p.num_vertices();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(p.dim() + 1);
    for i in 0..p.dim() {
        let denom = p
            .vertices()
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v[i].denom()));
        rows.push(
            p.vertices()
                .iter()
                .map(|v| v[i].numer() * (&denom / v[i].denom()))
                .collect(),
        );
    }
    rows.push(vec![BigInt::one(); nv]);
    IntMatrix::from_rows(nv, rows)
}

pub fn dependency_module(p: &Polytope) -> DependencyBasis {
    DependencyBasis {
        vectors: integral_kernel(&affine_matrix(p)),
    }
}

/// Whether `y` is an affine dependency of the vertices.
pub fn is_dependency(p: &Polytope, y: &[BigInt]) -> bool {
    y.len() == p.num_vertices()
        && y.iter().sum::<BigInt>().is_zero()
        && (0..p.dim()).all(|i| {
            p.vertices()
                .iter()
                .zip(y)
                .map(|(v, c)| &v[i] * Rational::from_integer(c.clone()))
                .sum::<Rational>()
                .is_zero()
        })
}

/// For each vertex `w` outside the affine basis `V0`, the primitive dependency
/// supported on `V0 ∪ {w}`, signed so that `y_w(w) > 0`.
pub fn basis_dependencies(p: &Polytope, v0: &[usize]) -> Result<Vec<VertexDependency>> {
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
    // Columns: [z(v); 1] for v in V0.
    let mut m = RationalMatrix::zeros(n + 1, n + 1);
    for (c, &v) in v0.iter().enumerate() {
        for i in 0..n {
            m[(i, c)] = p.vertex(v)[i].clone();
        }
        m[(n, c)] = Rational::one();
    }
    let inv = m
        .inverse()
        .ok_or_else(|| Error::NotAffineBasis("affinely dependent".into()))?;
    let mut out = Vec::new();
    for w in 0..p.num_vertices() {
        if v0.contains(&w) {
            continue;
        }
        let mut rhs = p.vertex(w).to_vec();
        rhs.push(Rational::one());
        let x = inv.mul_vec(&rhs);
        let mut full = vec![Rational::zero(); p.num_vertices()];
        for (c, &v) in v0.iter().enumerate() {
            full[v] = x[c].clone();
        }
        full[w] = -Rational::one();
        let mut y = primitivize(&full)?;
        if y[w].is_negative() {
            for c in &mut y {
                *c = -std::mem::take(c);
            }
        }
        out.push(VertexDependency { w, y });
    }
    Ok(out)
}

/// `Σ_v y(v)·d(u, v) = 0` for every vertex `u`.
pub fn check_dist_system(d: &DistanceMatrix, y: &[BigInt]) -> bool {
    y.len() == d.len()
        && (0..d.len()).all(|u| weighted_row_sum(d, u, y).is_zero())
}

fn weighted_row_sum(d: &DistanceMatrix, u: usize, y: &[BigInt]) -> Rational {
    y.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(v, c)| d.get(u, v) * Rational::from_integer(c.clone()))
        .sum()
}

/// `Σ_{u,v} y(u)·y(v)·d(u, v) = 0` over ordered pairs. Requires `Σ y = 0`.
pub fn check_negative_type(d: &DistanceMatrix, y: &[BigInt]) -> Result<bool> {
    let s: BigInt = y.iter().sum();
    if !s.is_zero() {
        return Err(Error::SumNotZero(s.to_string()));
    }
    if y.len() != d.len() {
        return Err(Error::DimensionMismatch {
            expected: d.len(),
            found: y.len(),
        });
    }
    let total: Rational = (0..d.len())
        .filter(|&u| !y[u].is_zero())
        .map(|u| weighted_row_sum(d, u, y) * Rational::from_integer(y[u].clone()))
        .sum();
    Ok(total.is_zero())
}
