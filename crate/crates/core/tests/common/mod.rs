#![allow(dead_code)]

use delaunay_rank::exact::BigInt;
use delaunay_rank::families::{cross_polytope, cube, half_cube, simplex};
use delaunay_rank::{IntMatrix, Polytope, Rational, RationalMatrix};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn square() -> Polytope {
    cube(2)
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Families with at most `max_vertices` vertices and dimension at most 8.
pub fn family_corpus(max_vertices: usize) -> Vec<(String, Polytope)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("simplex-{n}"), simplex(n)));
    }
    for n in 2..=8 {
        out.push((format!("cross-{n}"), cross_polytope(n)));
    }
    for n in 3..=8 {
        if 1usize << (n - 1) <= max_vertices {
            out.push((format!("halfcube-{n}"), half_cube(n)));
        }
    }
    for n in 1..=7 {
        if 1usize << n <= max_vertices {
            out.push((format!("cube-{n}"), cube(n)));
        }
    }
    out
}

/// Distinct random integer points of full affine rank.
pub fn random_polytope<R: Rng>(rng: &mut R, max_dim: usize) -> Polytope {
    loop {
        let n = rng.gen_range(1..=max_dim);
        let nv = rng.gen_range(n + 1..=n + 6);
        let mut pts: Vec<Vec<i64>> = Vec::new();
        while pts.len() < nv {
            let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            if !pts.contains(&v) {
                pts.push(v);
            }
        }
        let refs: Vec<&[i64]> = pts.iter().map(|v| v.as_slice()).collect();
        if let Ok(p) = Polytope::from_i64(n, &refs) {
            return p;
        }
    }
}

/// Product of random elementary row operations, sign changes and a
/// permutation.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    if n > 1 {
        for _ in 0..2 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let k = rng.gen_range(-1..=1);
            for c in 0..n {
                m[i][c] += k * m[j][c];
            }
        }
    }
    for row in m.iter_mut() {
        if rng.gen_bool(0.5) {
            row.iter_mut().for_each(|x| *x = -*x);
        }
    }
    m.shuffle(rng);
    IntMatrix::from_rows(n, m.iter().map(|r| big(r)).collect())
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

/// Dense rank of a list of integer rows.
pub fn dense_rank(cols: usize, rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    RationalMatrix::from_rows(cols, rows.iter().map(|r| to_rational(r)).collect()).rank()
}
