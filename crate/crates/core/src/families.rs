//! Standard Delaunay polytopes and Gram forms under which they are Delaunay.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{int, rat, RationalMatrix};
use crate::model::{from_distances, DistanceMatrix, GramForm, Polytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Simplex,
    Cross,
    HalfCube,
    Cube,
    P0,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Simplex,
        Family::Cross,
        Family::HalfCube,
        Family::Cube,
        Family::P0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Simplex => "simplex",
            Family::Cross => "cross",
            Family::HalfCube => "halfcube",
            Family::Cube => "cube",
            Family::P0 => "p0",
        }
    }

    fn min_dim(self) -> usize {
        match self {
            Family::Simplex | Family::Cube | Family::P0 => 1,
            Family::Cross => 2,
            Family::HalfCube => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    /// Ignored for [`Family::P0`].
    pub n: usize,
}

/// A generated polytope with a Gram form making it a Delaunay polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub name: String,
    pub polytope: Polytope,
    pub gram: GramForm,
    /// Present when the polytope is defined by its distances.
    pub distances: Option<DistanceMatrix>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if family != Family::P0 && n < family.min_dim() {
            return Err(Error::InvalidFamily(format!(
                "{family} needs n >= {}, got {n}",
                family.min_dim()
            )));
        }
        Ok(FamilySpec { family, n })
    }

    pub fn build(&self) -> FamilyInstance {
        let n = self.n;
        let (name, polytope, gram) = match self.family {
            Family::Simplex => (format!("simplex-{n}"), simplex(n), simplex_gram(n)),
            Family::Cross => (format!("cross-{n}"), cross_polytope(n), cross_gram(n)),
            Family::HalfCube => (format!("halfcube-{n}"), half_cube(n), GramForm::identity(n)),
            Family::Cube => (format!("cube-{n}"), cube(n), GramForm::identity(n)),
            Family::P0 => {
                let p = p0();
                return FamilyInstance {
                    name: "p0".into(),
                    polytope: p.polytope,
                    gram: p.gram,
                    distances: Some(p.distances),
                };
            }
        };
        FamilyInstance {
            name,
            polytope,
            gram,
            distances: None,
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn from_int_rows(n: usize, rows: Vec<Vec<i64>>) -> Polytope {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Polytope::from_i64(n, &refs).expect("family vertices are full-dimensional and distinct")
}

/// `{0, e_1, …, e_n}`.
pub fn simplex(n: usize) -> Polytope {
    assert!(n >= 1);
    let mut rows = vec![vec![0; n]];
    rows.extend((0..n).map(|i| unit(n, i)));
    from_int_rows(n, rows)
}

/// `<e_i, e_j> = 1 + δ_ij`, scaled by 1/2: all edges of the simplex have
/// length 1, which makes it a Delaunay simplex of the root lattice `A_n`.
pub fn simplex_gram(n: usize) -> GramForm {
    let m = RationalMatrix::from_rows(
        n,
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { int(1) } else { rat(1, 2) }).collect())
            .collect(),
    );
    GramForm::new(m).expect("positive definite")
}

/// `{0, e_1, …, e_{n-1}, e_n, e_n - e_1, …, e_n - e_{n-1}}`, with `e_n = 2c`.
pub fn cross_polytope(n: usize) -> Polytope {
    assert!(n >= 2);
    let mut rows = vec![vec![0; n]];
    rows.extend((0..n).map(|i| unit(n, i)));
    for i in 0..n - 1 {
        let mut v = unit(n, n - 1);
        v[i] = -1;
        rows.push(v);
    }
    from_int_rows(n, rows)
}

/// Gram form of `e_i = u_n + u_i` (`i < n`) and `e_n = 2 u_n` for an
/// orthonormal `u`: the cross-polytope becomes `{±u_k}` around its center,
/// a Delaunay polytope of a translate of `D_n`.
pub fn cross_gram(n: usize) -> GramForm {
    let entry = |i: usize, j: usize| -> i64 {
        match (i == n - 1, j == n - 1) {
            (true, true) => 4,
            (true, false) | (false, true) => 2,
            (false, false) => 1 + i64::from(i == j),
        }
    };
    let m = RationalMatrix::from_rows(
        n,
        (0..n)
            .map(|i| (0..n).map(|j| int(entry(i, j))).collect())
            .collect(),
    );
    GramForm::new(m).expect("positive definite")
}

/// `{e(T) : T ⊆ {1..n}, |T| even}` in ambient coordinates, ordered by the
/// bitmask of `T`.
pub fn half_cube(n: usize) -> Polytope {
    assert!(n >= 3);
    let rows = (0u64..1 << n)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| (0..n).map(|i| ((m >> i) & 1) as i64).collect())
        .collect();
    from_int_rows(n, rows)
}

/// All `0/1` vectors, ordered by bitmask.
pub fn cube(n: usize) -> Polytope {
    assert!(n >= 1);
    let rows = (0u64..1 << n)
        .map(|m| (0..n).map(|i| ((m >> i) & 1) as i64).collect())
        .collect();
    from_int_rows(n, rows)
}

/// The 12-dimensional polytope with 14 vertices and a one-dimensional
/// dependency module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P0 {
    pub polytope: Polytope,
    pub gram: GramForm,
    pub distances: DistanceMatrix,
    pub dependency: Vec<BigInt>,
}

/// Block of each vertex: Σ1² (0..3), Σ2² (3..6), Σ1³ (6..10), Σ2³ (10..14).
/// Encoded as (i, q).
const P0_BLOCKS: [(u8, u8); 14] = [
    (1, 2), (1, 2), (1, 2),
    (2, 2), (2, 2), (2, 2),
    (1, 3), (1, 3), (1, 3), (1, 3),
    (2, 3), (2, 3), (2, 3), (2, 3),
];

pub fn p0_distances() -> DistanceMatrix {
    let d = |u: usize, v: usize| -> i64 {
        let (a, b) = (P0_BLOCKS[u], P0_BLOCKS[v]);
        if u == v {
            0
        } else if a == b {
            7
        } else if a.0 == b.0 {
            6
        } else if a.1 == 2 && b.1 == 2 {
            10
        } else {
            12
        }
    };
    let m = RationalMatrix::from_rows(
        14,
        (0..14).map(|u| (0..14).map(|v| int(d(u, v))).collect()).collect(),
    );
    DistanceMatrix::new(m).expect("valid distance matrix")
}

pub fn p0() -> P0 {
    let distances = p0_distances();
    let (polytope, gram) = from_distances(&distances).expect("the distance table is realizable");
    let dependency = P0_BLOCKS
        .iter()
        .map(|&(i, q)| {
            let mag = if q == 2 { 3 } else { 2 };
            let sign = if (i == 1) == (q == 2) { 1 } else { -1 };
            BigInt::from(sign * mag)
        })
        .collect();
    P0 {
        polytope,
        gram,
        distances,
        dependency,
    }
}
