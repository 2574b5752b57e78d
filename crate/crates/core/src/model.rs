//! Delaunay polytope data model.
//!
//! A [`Polytope`] stores vertex coordinates `z(v)` in a reference basis
//! `b_1..b_n`; a [`GramForm`] stores the inner products `<b_i, b_j>`. Squared
//! Euclidean distances, the circumscribed sphere and central symmetry are
//! derived from the pair.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{hermite_normal_form, IntMatrix, Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    base: usize,
}

impl Polytope {
    /// Validates and builds a polytope: at least `dim + 1` distinct vertices
    /// whose affine hull is `dim`-dimensional.
    pub fn from_coords(dim: usize, vertices: Vec<Vec<Rational>>) -> Result<Self> {
        if vertices.len() < dim + 1 {
            return Err(Error::TooFewVertices {
                needed: dim + 1,
                found: vertices.len(),
            });
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        let mut seen: HashMap<&[Rational], usize> = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if let Some(&j) = seen.get(v.as_slice()) {
                return Err(Error::DuplicateVertex(j, i));
            }
            seen.insert(v, i);
        }
        let found = affine_rank(&vertices);
        if found < dim {
            return Err(Error::DimensionDeficient {
                expected: dim,
                found,
            });
        }
        Ok(Polytope {
            dim,
            vertices,
            base: 0,
        })
    }

    pub fn from_i64(dim: usize, vertices: &[&[i64]]) -> Result<Self> {
        Self::from_coords(
            dim,
            vertices
                .iter()
                .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Same polytope with another distinguished vertex `v0`.
    pub fn with_base(mut self, base: usize) -> Result<Self> {
        if base >= self.vertices.len() {
            return Err(Error::IndexOutOfRange(base));
        }
        self.base = base;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[Rational] {
        &self.vertices[i]
    }

    pub fn base_index(&self) -> usize {
        self.base
    }

    /// `a(v) = z(v) - z(v0)`.
    pub fn relative(&self, i: usize) -> Vec<Rational> {
        sub(&self.vertices[i], &self.vertices[self.base])
    }

    pub fn index_of(&self, point: &[Rational]) -> Option<usize> {
        self.vertices.iter().position(|v| v.as_slice() == point)
    }

    pub fn is_integral(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|x| x.is_integer()))
    }

    /// Vertices reordered so that new vertex `i` is old vertex `perm[i]`. The
    /// distinguished vertex follows its coordinates.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertices.len() {
            return Err(Error::WrongSize {
                expected: self.vertices.len(),
                found: perm.len(),
            });
        }
        let base = perm
            .iter()
            .position(|&p| p == self.base)
            .ok_or(Error::IndexOutOfRange(self.base))?;
        let vertices = perm
            .iter()
            .map(|&p| {
                self.vertices
                    .get(p)
                    .cloned()
                    .ok_or(Error::IndexOutOfRange(p))
            })
            .collect::<Result<Vec<_>>>()?;
        Polytope::from_coords(self.dim, vertices)?.with_base(base)
    }

    /// Polytope induced on a vertex subset, in the same ambient coordinates.
    pub fn induced(&self, subset: &[usize]) -> Result<Self> {
        let vertices = subset
            .iter()
            .map(|&i| {
                self.vertices
                    .get(i)
                    .cloned()
                    .ok_or(Error::IndexOutOfRange(i))
            })
            .collect::<Result<Vec<_>>>()?;
        Polytope::from_coords(self.dim, vertices)
    }

    /// Greedy affine basis: starting from `start`, scan vertices in order and
    /// keep each one that raises the affine rank.
    pub fn greedy_affine_basis(&self, start: usize) -> Vec<usize> {
        let mut chosen = vec![start];
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for i in 0..self.vertices.len() {
            if i == start || chosen.len() == self.dim + 1 {
                continue;
            }
            let mut trial = rows.clone();
            trial.push(sub(&self.vertices[i], &self.vertices[start]));
            if RationalMatrix::from_rows(self.dim, trial.clone()).rank() == trial.len() {
                rows = trial;
                chosen.push(i);
            }
        }
        chosen
    }

    /// Basis of the lattice `L(P)` generated by the differences `v - v0`, as
    /// the rows of an `n × n` rational matrix in Hermite normal form.
    pub fn lattice_basis(&self) -> RationalMatrix {
        let diffs: Vec<Vec<Rational>> =
            (0..self.vertices.len()).map(|i| self.relative(i)).collect();
        let (h, denom) = integer_lattice_hnf(&diffs, self.dim);
        let d = Rational::from_integer(denom);
        RationalMatrix::from_rows(
            self.dim,
            (0..self.dim)
                .map(|i| {
                    h.row(i)
                        .iter()
                        .map(|x| Rational::from_integer(x.clone()) / &d)
                        .collect()
                })
                .collect(),
        )
    }
}

/// HNF of the lattice spanned by rational vectors, returned as the first `dim`
/// rows of the HNF of the vectors scaled to integers, plus the scale.
pub(crate) fn integer_lattice_hnf(vectors: &[Vec<Rational>], dim: usize) -> (IntMatrix, BigInt) {
    let denom = vectors
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.iter().map(|x| x.numer() * (&denom / x.denom())).collect())
        .collect();
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(dim, rows));
    let top = IntMatrix::from_rows(dim, (0..dim.min(h.rows())).map(|i| h.row(i).to_vec()).collect());
    (top, denom)
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Dimension of the affine hull of a point set.
pub fn affine_rank(points: &[Vec<Rational>]) -> usize {
    let Some(first) = points.first() else { return 0 };
    let rows: Vec<Vec<Rational>> = points[1..].iter().map(|p| sub(p, first)).collect();
    if rows.is_empty() {
        return 0;
    }
    RationalMatrix::from_rows(first.len(), rows).rank()
}

/// Symmetric positive definite matrix `G[i][j] = <b_i, b_j>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm {
    matrix: RationalMatrix,
}

impl GramForm {
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if !is_positive_definite(&matrix) {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(GramForm { matrix })
    }

    pub fn identity(n: usize) -> Self {
        GramForm {
            matrix: RationalMatrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.matrix.bilinear(x, y)
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        self.matrix.bilinear(x, x)
    }

    /// Gram form of the basis in which coordinates become `z' = U·z`, i.e.
    /// `G' = U⁻ᵀ G U⁻¹`.
    pub fn transformed(&self, u: &IntMatrix) -> Result<Self> {
        if u.rows() != self.dim() || u.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.rows(),
            });
        }
        let ur = RationalMatrix::from_rows(
            u.cols(),
            u.row_vecs()
                .into_iter()
                .map(|r| r.into_iter().map(Rational::from_integer).collect())
                .collect(),
        );
        let inv = ur
            .inverse()
            .ok_or_else(|| Error::NotUnimodular("0".into()))?;
        GramForm::new(inv.transpose().mul(&self.matrix).mul(&inv))
    }

    /// Restriction to the span of the first `k` basis vectors.
    pub fn leading(&self, k: usize) -> GramForm {
        GramForm {
            matrix: self.matrix.leading(k),
        }
    }
}

/// All leading principal minors strictly positive. Computed as the pivots of
/// elimination without row exchanges, `pivot_k = minor_k / minor_{k-1}`.
pub fn is_positive_definite(m: &RationalMatrix) -> bool {
    ldl(m).is_some_and(|(_, d)| d.iter().all(Signed::is_positive))
}

/// `M = L·D·Lᵀ` with `L` unit lower triangular; `None` if a zero pivot shows
/// up.
fn ldl(m: &RationalMatrix) -> Option<(RationalMatrix, Vec<Rational>)> {
    let n = m.rows();
    let mut l = RationalMatrix::identity(n);
    let mut d: Vec<Rational> = Vec::with_capacity(n);
    for j in 0..n {
        let mut dj = m[(j, j)].clone();
        for k in 0..j {
            dj -= &l[(j, k)] * &l[(j, k)] * &d[k];
        }
        if dj.is_zero() {
            return None;
        }
        for i in j + 1..n {
            let mut s = m[(i, j)].clone();
            for k in 0..j {
                s -= &l[(i, k)] * &l[(j, k)] * &d[k];
            }
            l[(i, j)] = s / &dj;
        }
        d.push(dj);
    }
    Some((l, d))
}

/// Matrix of squared distances `d(u, v) = ||u - v||²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    matrix: RationalMatrix,
}

impl DistanceMatrix {
    pub fn new(matrix: RationalMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::InvalidDistances("not square".into()));
        }
        if !matrix.is_symmetric() {
            return Err(Error::InvalidDistances("not symmetric".into()));
        }
        for i in 0..matrix.rows() {
            if !matrix[(i, i)].is_zero() {
                return Err(Error::InvalidDistances(format!("nonzero diagonal at {i}")));
            }
            for j in 0..i {
                if !matrix[(i, j)].is_positive() {
                    return Err(Error::InvalidDistances(format!(
                        "non-positive distance between {j} and {i}"
                    )));
                }
            }
        }
        Ok(DistanceMatrix { matrix })
    }

    pub fn len(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.rows() == 0
    }

    pub fn get(&self, u: usize, v: usize) -> &Rational {
        &self.matrix[(u, v)]
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }
}

fn check_dims(p: &Polytope, g: &GramForm) -> Result<()> {
    if p.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: g.dim(),
        });
    }
    Ok(())
}

pub fn distance_matrix(p: &Polytope, g: &GramForm) -> Result<DistanceMatrix> {
    check_dims(p, g)?;
    let n = p.num_vertices();
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            let d = g.norm(&sub(p.vertex(i), p.vertex(j)));
            m[(i, j)] = d.clone();
            m[(j, i)] = d;
        }
    }
    DistanceMatrix::new(m)
}

/// Realizes a distance matrix as a polytope with a Gram form.
///
/// Vertex 0 becomes the origin. The basis vertices are picked greedily in
/// input order, keeping each vertex that leaves the Gram matrix of the picked
/// set nonsingular; basis vertex `k` gets coordinates `e_k`. Every other
/// vertex is solved for from its inner products with the basis, and the
/// whole matrix is checked against the realization.
pub fn from_distances(d: &DistanceMatrix) -> Result<(Polytope, GramForm)> {
    let n_pts = d.len();
    if n_pts < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            found: n_pts,
        });
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let inner = |i: usize, j: usize| -> Rational {
        (d.get(i, 0) + d.get(j, 0) - d.get(i, j)) * &half
    };
    let gram_of = |idx: &[usize]| -> RationalMatrix {
        let mut m = RationalMatrix::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = inner(i, j);
            }
        }
        m
    };

    let mut chosen: Vec<usize> = Vec::new();
    for i in 1..n_pts {
        let mut trial = chosen.clone();
        trial.push(i);
        if !gram_of(&trial).determinant().is_zero() {
            chosen = trial;
        }
    }
    let dim = chosen.len();
    if dim == 0 {
        return Err(Error::NotRealizable("every candidate Gram matrix is singular".into()));
    }
    let gram_m = gram_of(&chosen);
    if !is_positive_definite(&gram_m) {
        return Err(Error::NotPositiveDefinite);
    }
    let gram = GramForm { matrix: gram_m };

    let mut coords = vec![vec![Rational::zero(); dim]; n_pts];
    for (k, &i) in chosen.iter().enumerate() {
        coords[i][k] = Rational::one();
    }
    for w in 1..n_pts {
        if chosen.contains(&w) {
            continue;
        }
        let rhs: Vec<Rational> = chosen.iter().map(|&i| inner(w, i)).collect();
        coords[w] = gram
            .matrix
            .solve(&rhs)
            .ok_or_else(|| Error::NotRealizable(format!("vertex {w} has no solution")))?;
    }
    let poly = Polytope::from_coords(dim, coords)
        .map_err(|e| Error::NotRealizable(e.to_string()))?;
    let realized = distance_matrix(&poly, &gram)
        .map_err(|e| Error::NotRealizable(e.to_string()))?;
    if realized.matrix != d.matrix {
        return Err(Error::NotRealizable(
            "realization does not reproduce the distance matrix".into(),
        ));
    }
    Ok((poly, gram))
}

/// Center `c` (in reference coordinates) and squared radius of the sphere
/// through all vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circumdata {
    pub center: Vec<Rational>,
    pub radius_sq: Rational,
}

/// Solves `2<c, a(v_i)> = ||a(v_i)||²` over an affine basis containing `v0`
/// and then checks the same equation for every vertex.
pub fn circumcenter(p: &Polytope, g: &GramForm) -> Result<Circumdata> {
    check_dims(p, g)?;
    let n = p.dim();
    let basis = p.greedy_affine_basis(p.base_index());
    let two = Rational::from_integer(BigInt::from(2));
    let mut system = RationalMatrix::zeros(n, n);
    let mut rhs = Vec::with_capacity(n);
    for (row, &i) in basis[1..].iter().enumerate() {
        let a = p.relative(i);
        let ga = g.matrix().mul_vec(&a);
        for j in 0..n {
            system[(row, j)] = &ga[j] * &two;
        }
        rhs.push(g.norm(&a));
    }
    let rel_center = system
        .solve(&rhs)
        .expect("affine basis gives a nonsingular system");
    for i in 0..p.num_vertices() {
        let a = p.relative(i);
        if g.inner(&rel_center, &a) * &two != g.norm(&a) {
            return Err(Error::NotCospherical(i));
        }
    }
    let radius_sq = g.norm(&rel_center);
    let center = p
        .vertex(p.base_index())
        .iter()
        .zip(&rel_center)
        .map(|(a, b)| a + b)
        .collect();
    Ok(Circumdata { center, radius_sq })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetry {
    pub symmetric: bool,
    /// `pairing[i]` is the index of `2c - v_i`, when the polytope is symmetric.
    pub pairing: Option<Vec<usize>>,
}

pub fn is_centrally_symmetric(p: &Polytope, g: &GramForm) -> Result<Symmetry> {
    let circ = circumcenter(p, g)?;
    Ok(symmetry_about(p, &circ.center))
}

pub(crate) fn symmetry_about(p: &Polytope, center: &[Rational]) -> Symmetry {
    let index: HashMap<&[Rational], usize> = p
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    let two = Rational::from_integer(BigInt::from(2));
    let mut pairing = Vec::with_capacity(p.num_vertices());
    for v in p.vertices() {
        let opposite: Vec<Rational> = center.iter().zip(v).map(|(c, x)| c * &two - x).collect();
        match index.get(opposite.as_slice()) {
            Some(&j) => pairing.push(j),
            None => {
                return Symmetry {
                    symmetric: false,
                    pairing: None,
                }
            }
        }
    }
    Symmetry {
        symmetric: true,
        pairing: Some(pairing),
    }
}

/// Outcome of the bounded-window emptiness check. This is a heuristic: only
/// lattice points inside the window are examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptySphereReport {
    pub window: usize,
    pub circumdata: Circumdata,
    /// Lattice points in the window strictly inside the sphere.
    pub strict_violations: Vec<Vec<Rational>>,
    /// Lattice points in the window on the sphere that are not vertices.
    pub extra_on_sphere: Vec<Vec<Rational>>,
    /// Number of window lattice points found in the closed ball.
    pub points_in_ball: usize,
}

impl EmptySphereReport {
    pub const LABEL: &'static str = "HEURISTIC: bounded window, not a proof of emptiness";

    /// No lattice point of the window lies strictly inside the sphere.
    pub fn is_empty(&self) -> bool {
        self.strict_violations.is_empty()
    }

    /// Empty, and every window lattice point on the sphere is a vertex.
    pub fn is_delaunay(&self) -> bool {
        self.strict_violations.is_empty() && self.extra_on_sphere.is_empty()
    }
}

/// Searches the lattice `L(P)` (translated to pass through the vertices) for
/// points inside the circumscribed sphere.
///
/// Coordinates are taken in the Hermite basis of `L(P)`; the window is the
/// bounding box of the vertices in those coordinates, widened by `window` on
/// every side. Points of the box are enumerated exactly, pruning on the
/// partial sums of the `L·D·Lᵀ` decomposition of the form.
pub fn verify_empty_sphere(p: &Polytope, g: &GramForm, window: usize) -> Result<EmptySphereReport> {
    let circ = circumcenter(p, g)?;
    let n = p.dim();
    let basis = p.lattice_basis();
    let inv = basis.inverse().expect("lattice basis is nonsingular");
    let origin = p.vertex(p.base_index()).to_vec();
    let to_lattice = |x: &[Rational]| -> Vec<Rational> {
        let rel = sub(x, &origin);
        inv.transpose().mul_vec(&rel)
    };
    let from_lattice = |k: &[BigInt]| -> Vec<Rational> {
        let kr: Vec<Rational> = k.iter().cloned().map(Rational::from_integer).collect();
        let rel = basis.transpose().mul_vec(&kr);
        rel.iter().zip(&origin).map(|(a, b)| a + b).collect()
    };

    let w = BigInt::from(window);
    let mut lo: Vec<BigInt> = Vec::with_capacity(n);
    let mut hi: Vec<BigInt> = Vec::with_capacity(n);
    let vk: Vec<Vec<Rational>> = p.vertices().iter().map(|v| to_lattice(v)).collect();
    for i in 0..n {
        let min = vk.iter().map(|v| v[i].to_integer()).min().unwrap();
        let max = vk.iter().map(|v| v[i].to_integer()).max().unwrap();
        lo.push(min - &w);
        hi.push(max + &w);
    }

    let form = basis.mul(g.matrix()).mul(&basis.transpose());
    let (l, d) = ldl(&form).expect("Gram form is positive definite");
    let ck = to_lattice(&circ.center);

    let mut search = BallSearch {
        n,
        l: &l,
        d: &d,
        center: &ck,
        radius_sq: &circ.radius_sq,
        lo: &lo,
        hi: &hi,
        k: vec![BigInt::zero(); n],
        found: Vec::new(),
    };
    if n > 0 {
        search.descend(n - 1, Rational::zero());
    }

    let mut strict_violations = Vec::new();
    let mut extra_on_sphere = Vec::new();
    let points_in_ball = search.found.len();
    for (k, strict) in search.found {
        let x = from_lattice(&k);
        if strict {
            strict_violations.push(x);
        } else if p.index_of(&x).is_none() {
            extra_on_sphere.push(x);
        }
    }
    strict_violations.sort();
    extra_on_sphere.sort();
    Ok(EmptySphereReport {
        window,
        circumdata: circ,
        strict_violations,
        extra_on_sphere,
        points_in_ball,
    })
}

struct BallSearch<'a> {
    n: usize,
    l: &'a RationalMatrix,
    d: &'a [Rational],
    center: &'a [Rational],
    radius_sq: &'a Rational,
    lo: &'a [BigInt],
    hi: &'a [BigInt],
    k: Vec<BigInt>,
    found: Vec<(Vec<BigInt>, bool)>,
}

impl BallSearch<'_> {
    fn descend(&mut self, i: usize, partial: Rational) {
        // t_i = (k_i - c_i) + sum_{j>i} L[j][i] (k_j - c_j) = k_i - m
        let mut m = self.center[i].clone();
        for j in i + 1..self.n {
            let kj = Rational::from_integer(self.k[j].clone());
            m -= &self.l[(j, i)] * (kj - &self.center[j]);
        }
        let budget = self.radius_sq - &partial;
        let reach = (&budget / &self.d[i]).floor().to_integer().max(BigInt::zero()).sqrt();
        let one = BigInt::one();
        let start: BigInt = (m.floor().to_integer() - &reach - &one).max(self.lo[i].clone());
        let end: BigInt = (m.ceil().to_integer() + &reach + &one).min(self.hi[i].clone());
        let mut ki = start;
        while ki <= end {
            let t = Rational::from_integer(ki.clone()) - &m;
            let term = &t * &t * &self.d[i];
            if term <= budget {
                self.k[i] = ki.clone();
                let next = &partial + term;
                if i == 0 {
                    let strict = &next < self.radius_sq;
                    self.found.push((self.k.clone(), strict));
                } else {
                    self.descend(i - 1, next);
                }
            }
            ki += 1;
        }
    }
}
