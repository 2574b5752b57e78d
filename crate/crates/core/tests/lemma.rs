//! `H(b)·d = 0` exactly when `Σ b(v)·v` is a vertex, for empty spheres.

mod common;

use delaunay_rank::families::{Family, FamilySpec};
use delaunay_rank::hyp::{check_lemma_hy, eval_hypermetric, representation_point, HypVector};
use delaunay_rank::model::{distance_matrix, verify_empty_sphere};
use delaunay_rank::{GramForm, Polytope};
use num_traits::{Signed, Zero};

/// Every `b ∈ [-r, r]^V` with `Σ b = 1`.
fn sum_one_vectors(nv: usize, r: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (2 * r + 1) as u64;
    let total = width.pow((nv - 1) as u32);
    (0..total).filter_map(move |code| {
        let mut b: Vec<i64> = (0..nv - 1)
            .map(|k| (code / width.pow(k as u32) % width) as i64 - r)
            .collect();
        let last = 1 - b.iter().sum::<i64>();
        (last.abs() <= r).then(|| {
            b.push(last);
            b
        })
    })
}

fn sweep(p: &Polytope, g: &GramForm) -> usize {
    assert!(verify_empty_sphere(p, g, 1).unwrap().is_delaunay());
    let d = distance_matrix(p, g).unwrap();
    let mut checked = 0;
    for b in sum_one_vectors(p.num_vertices(), 2) {
        let h = HypVector::from_i64(&b).unwrap();
        let value = eval_hypermetric(&d, &h).unwrap();
        let (_, vertex) = representation_point(p, &h).unwrap();
        assert!(!value.is_positive(), "{b:?}");
        assert_eq!(value.is_zero(), vertex.is_some(), "{b:?}");
        checked += 1;
    }
    checked
}

#[test]
fn square_biconditional() {
    let inst = FamilySpec::new(Family::Cube, 2).unwrap().build();
    assert!(sweep(&inst.polytope, &inst.gram) > 0);
}

#[test]
fn cross_polytope_biconditional() {
    let inst = FamilySpec::new(Family::Cross, 3).unwrap().build();
    assert!(sweep(&inst.polytope, &inst.gram) > 0);
}

#[test]
fn check_lemma_reports_both_sides() {
    let inst = FamilySpec::new(Family::Cube, 2).unwrap().build();
    let b = HypVector::from_i64(&[1, 1, 0, -1]).unwrap();
    // 0 + (1,0) - (1,1) = (0,-1): not a vertex, value -2.
    let c = check_lemma_hy(&inst.polytope, &inst.gram, &b, 1).unwrap();
    assert!(c.consistent && !c.equality && c.vertex.is_none());
    assert!(c.window_is_delaunay);
    let b = HypVector::from_i64(&[-1, 1, 1, 0]).unwrap();
    let c = check_lemma_hy(&inst.polytope, &inst.gram, &b, 1).unwrap();
    assert!(c.consistent && c.equality);
    assert_eq!(c.vertex, Some(3));
}
