use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Incremental row echelon form over sparse integer rows.
///
/// Rows are lists of `(column, coefficient)`; the leading entry is the one with
/// the smallest column. Each inserted row is reduced against the stored pivots
/// by fraction-free elimination of its leading entry only, so fill-in stays to
/// the right of the leading column. Callers control fill-in through the order
/// in which they number columns.
#[derive(Debug, Default)]
pub struct SparseEchelon {
    pivots: HashMap<usize, Vec<(usize, BigInt)>>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` and stores it if it is independent of the rows inserted
    /// so far. Returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<(usize, BigInt)>) -> bool {
        let mut row = normalize(row);
        while let Some((lead, coef)) = row.first() {
            let Some(pivot) = self.pivots.get(lead) else {
                let lead = *lead;
                make_primitive(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let p = &pivot[0].1;
            let g = p.gcd(coef);
            let row_scale = p / &g;
            let pivot_scale = coef / &g;
            row = combine(&row, &row_scale, pivot, &pivot_scale);
            make_primitive(&mut row);
        }
        false
    }
}

fn normalize(mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a * sa - b * sb` on sorted sparse rows.
fn combine(
    a: &[(usize, BigInt)],
    sa: &BigInt,
    b: &[(usize, BigInt)],
    sb: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, &a[i].1 * sa));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(&b[j].1 * sb)));
            j += 1;
        } else {
            let v = &a[i].1 * sa - &b[j].1 * sb;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let Some(first) = row.first() else { return };
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::matrix::RationalMatrix;
    use super::*;
    use num_rational::BigRational;

    fn sparse(row: &[i64]) -> Vec<(usize, BigInt)> {
        row.iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(c, v)| (c, BigInt::from(*v)))
            .collect()
    }

    #[test]
    fn detects_dependence() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(sparse(&[1, 2, 0])));
        assert!(e.insert(sparse(&[2, 1, 1])));
        assert!(!e.insert(sparse(&[3, 3, 1])));
        assert!(!e.insert(Vec::new()));
        assert!(e.insert(sparse(&[0, 0, 5])));
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn duplicate_columns_are_summed() {
        let mut e = SparseEchelon::new();
        let row = vec![(0, BigInt::from(1)), (0, BigInt::from(-1))];
        assert!(!e.insert(row));
    }

    proptest::proptest! {
        #[test]
        fn matches_dense_rank(entries in proptest::collection::vec(-3i64..4, 30), cols in 1usize..7) {
            let rows = entries.len() / cols;
            let mut e = SparseEchelon::new();
            let mut dense = Vec::new();
            for i in 0..rows {
                let r = &entries[i * cols..(i + 1) * cols];
                e.insert(sparse(r));
                dense.push(r.iter().map(|&x| BigRational::from_integer(x.into())).collect());
            }
            let m = RationalMatrix::from_rows(cols, dense);
            proptest::prop_assert_eq!(e.rank(), m.rank());
        }
    }
}
