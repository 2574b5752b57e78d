//! Affine bases over Z and Q, and basicity of a polytope.
//!
//! For rational coordinates, R-affine independence and Q-affine independence
//! coincide, so only the rings Z and Q are exposed.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, Rational, RationalMatrix};
use crate::model::{integer_lattice_hnf, sub, Polytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasicityClass {
    /// Some affine basis expresses every vertex with integer coefficients.
    ZBasic { witness: Vec<usize>, tested: usize },
    /// Every affinely independent `(n+1)`-subset was tried; `tested` of them.
    QBasicOnly { tested: usize },
    /// The budget ran out after `tested` affinely independent subsets.
    Undecided { tested: usize, budget: usize },
}

impl BasicityClass {
    pub fn label(&self) -> &'static str {
        match self {
            BasicityClass::ZBasic { .. } => "Z_BASIC",
            BasicityClass::QBasicOnly { .. } => "Q_BASIC_ONLY",
            BasicityClass::Undecided { .. } => "UNDECIDED",
        }
    }
}

fn check_subset(p: &Polytope, subset: &[usize]) -> Result<()> {
    if subset.len() != p.dim() + 1 {
        return Err(Error::WrongSize {
            expected: p.dim() + 1,
            found: subset.len(),
        });
    }
    if let Some(&bad) = subset.iter().find(|&&i| i >= p.num_vertices()) {
        return Err(Error::IndexOutOfRange(bad));
    }
    Ok(())
}

pub fn is_affine_basis(p: &Polytope, subset: &[usize], ring: Ring) -> Result<bool> {
    check_subset(p, subset)?;
    Ok(affine_basis_unchecked(p, subset, ring))
}

fn affine_basis_unchecked(p: &Polytope, subset: &[usize], ring: Ring) -> bool {
    let n = p.dim();
    let base = p.vertex(subset[0]);
    let diffs: Vec<Vec<Rational>> = subset[1..].iter().map(|&v| sub(p.vertex(v), base)).collect();
    // Rows of the inverse transpose give the linear coordinates over the
    // differences.
    let Some(inv) = RationalMatrix::from_rows(n, diffs).transpose().inverse() else {
        return false;
    };
    match ring {
        Ring::Q => true,
        Ring::Z => (0..p.num_vertices()).all(|w| {
            inv.mul_vec(&sub(p.vertex(w), base))
                .iter()
                .all(|c| c.is_integer())
        }),
    }
}

/// Lexicographic search for a Z-affine basis among the affinely independent
/// `(n+1)`-subsets, testing at most `budget` of them.
///
/// Prefixes that are already affinely dependent are skipped as a whole, so the
/// cost is driven by the independent subsets only.
pub fn classify_basicity(p: &Polytope, budget: usize) -> BasicityClass {
    let mut search = BasisSearch {
        p,
        budget,
        tested: 0,
        chosen: Vec::with_capacity(p.dim() + 1),
        echelon: Vec::with_capacity(p.dim()),
    };
    match search.descend(0) {
        Some(class) => class,
        None => BasicityClass::QBasicOnly {
            tested: search.tested,
        },
    }
}

struct BasisSearch<'a> {
    p: &'a Polytope,
    budget: usize,
    tested: usize,
    chosen: Vec<usize>,
    /// Reduced differences `v - chosen[0]`, with their pivot columns.
    echelon: Vec<(usize, Vec<Rational>)>,
}

impl BasisSearch<'_> {
    fn descend(&mut self, start: usize) -> Option<BasicityClass> {
        let k = self.p.dim() + 1;
        if self.chosen.len() == k {
            if self.tested == self.budget {
                return Some(BasicityClass::Undecided {
                    tested: self.tested,
                    budget: self.budget,
                });
            }
            self.tested += 1;
            if affine_basis_unchecked(self.p, &self.chosen, Ring::Z) {
                return Some(BasicityClass::ZBasic {
                    witness: self.chosen.clone(),
                    tested: self.tested,
                });
            }
            return None;
        }
        let nv = self.p.num_vertices();
        for v in start..=nv - (k - self.chosen.len()) {
            let row = match self.chosen.first() {
                None => None,
                Some(&b) => match self.reduce(sub(self.p.vertex(v), self.p.vertex(b))) {
                    Some(row) => Some(row),
                    None => continue,
                },
            };
            self.chosen.push(v);
            let pushed = row.is_some();
            if let Some(row) = row {
                self.echelon.push(row);
            }
            let found = self.descend(v + 1);
            self.chosen.pop();
            if pushed {
                self.echelon.pop();
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Reduces `x` against the echelon rows; `None` if it becomes zero.
    fn reduce(&self, mut x: Vec<Rational>) -> Option<(usize, Vec<Rational>)> {
        for (pivot, row) in &self.echelon {
            if x[*pivot].is_zero() {
                continue;
            }
            let f = &x[*pivot] / &row[*pivot];
            for (a, b) in x.iter_mut().zip(row) {
                *a -= &f * b;
            }
        }
        let pivot = x.iter().position(|c| !c.is_zero())?;
        Some((pivot, x))
    }
}

/// Index of the lattice spanned by `v - v_{subset[0]}`, `v ∈ subset`, inside
/// the lattice spanned by all vertex differences.
pub fn lattice_index(p: &Polytope, subset: &[usize]) -> Result<BigInt> {
    check_subset(p, subset)?;
    let n = p.dim();
    let base = p.vertex(subset[0]);
    let sub_vectors: Vec<_> = subset[1..].iter().map(|&v| sub(p.vertex(v), base)).collect();
    let all: Vec<_> = (0..p.num_vertices()).map(|v| p.relative(v)).collect();
    if !affine_basis_unchecked(p, subset, Ring::Q) {
        return Err(Error::AffinelyDependent);
    }
    let (h_sub, d_sub) = integer_lattice_hnf(&sub_vectors, n);
    let (h_all, d_all) = integer_lattice_hnf(&all, n);
    // Full-rank HNFs have their pivots on the diagonal; the covolume of the
    // rational lattice is det/denom^n.
    let det = |h: &IntMatrix| -> BigInt { (0..n).map(|i| h.row(i)[i].abs()).product() };
    let num = det(&h_sub) * num_traits::pow(d_all, n);
    let den = det(&h_all) * num_traits::pow(d_sub, n);
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polytope {
        Polytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn square_bases() {
        let p = square();
        assert!(is_affine_basis(&p, &[0, 1, 2], Ring::Z).unwrap());
        assert!(is_affine_basis(&p, &[0, 1, 2], Ring::Q).unwrap());
        assert_eq!(
            is_affine_basis(&p, &[0, 1], Ring::Q),
            Err(Error::WrongSize { expected: 3, found: 2 })
        );
        assert_eq!(lattice_index(&p, &[0, 1, 2]).unwrap(), BigInt::from(1));
        assert_eq!(
            classify_basicity(&p, 10),
            BasicityClass::ZBasic { witness: vec![0, 1, 2], tested: 1 }
        );
    }

    #[test]
    fn degenerate_subset() {
        let p = Polytope::from_i64(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]).unwrap();
        assert!(!is_affine_basis(&p, &[0, 1, 2], Ring::Q).unwrap());
        assert_eq!(lattice_index(&p, &[0, 1, 2]), Err(Error::AffinelyDependent));
        // {0,1,3} is the first independent subset; (2,0) = 2·(1,0) - 0 is
        // integral over it.
        assert_eq!(
            classify_basicity(&p, 1),
            BasicityClass::ZBasic { witness: vec![0, 1, 3], tested: 1 }
        );
    }

    #[test]
    fn non_basic_triangle_with_midpoint_lattice() {
        // The differences span a lattice containing (1,1); the axis
        // vertices alone span an index-2 sublattice.
        let p = Polytope::from_i64(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1]]).unwrap();
        assert_eq!(lattice_index(&p, &[0, 1, 2]).unwrap(), BigInt::from(2));
        assert_eq!(lattice_index(&p, &[0, 1, 3]).unwrap(), BigInt::from(1));
        assert!(!is_affine_basis(&p, &[0, 1, 2], Ring::Z).unwrap());
        assert!(is_affine_basis(&p, &[0, 1, 3], Ring::Z).unwrap());
    }

    #[test]
    fn budget_exhaustion() {
        let p = Polytope::from_i64(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1]]).unwrap();
        assert_eq!(
            classify_basicity(&p, 1),
            BasicityClass::Undecided { tested: 1, budget: 1 }
        );
    }
}
