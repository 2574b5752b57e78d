use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        IntMatrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = s * q;
            self.data[dst * self.cols + j] -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    fn reverse_columns(&self) -> IntMatrix {
        let mut m = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, self.cols - 1 - j)] = self[(i, j)].clone();
            }
        }
        m
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular and `H = U · M`. Nonzero rows of `H`
/// come first, pivots are positive and strictly increase in column, and
/// entries above a pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut r = 0;
    for c in 0..h.cols {
        if r == h.rows {
            break;
        }
        loop {
            let Some(p) = (r..h.rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].magnitude().cmp(h[(b, c)].magnitude()))
            else {
                break;
            };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..h.rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.sub_row_multiple(i, r, &q);
                u.sub_row_multiple(i, r, &q);
                if !h[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Z-basis of the integer kernel `{y ∈ Zᶜ : M·y = 0}`.
///
/// The basis spans the full (saturated) integer kernel. It is returned in a
/// canonical form: the Hermite normal form of the kernel lattice computed with
/// pivots taken from the last column backwards, each vector's first nonzero
/// entry made positive, sorted by the position of the last nonzero entry.
pub fn integral_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (h, u) = hermite_normal_form(&m.transpose());
    let rank = (0..h.rows)
        .take_while(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .count();
    if rank == h.rows {
        return Vec::new();
    }
    let raw = IntMatrix::from_rows(
        u.cols,
        (rank..u.rows).map(|i| u.row(i).to_vec()).collect(),
    );
    let (canon, _) = hermite_normal_form(&raw.reverse_columns());
    let canon = canon.reverse_columns();
    let mut out: Vec<Vec<BigInt>> = canon
        .row_vecs()
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|mut r| {
            if r.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                for x in &mut r {
                    *x = -std::mem::take(x);
                }
            }
            r
        })
        .collect();
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn is_hnf(h: &IntMatrix) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            let lead = (0..h.cols()).find(|&j| !h[(i, j)].is_zero());
            match lead {
                None => seen_zero = true,
                Some(j) => {
                    if seen_zero || last_pivot.is_some_and(|p| p >= j) {
                        return false;
                    }
                    if !h[(i, j)].is_positive() {
                        return false;
                    }
                    for k in 0..i {
                        if h[(k, j)].is_negative() || h[(k, j)] >= h[(i, j)] {
                            return false;
                        }
                    }
                    last_pivot = Some(j);
                }
            }
        }
        true
    }

    #[test]
    fn hnf_identity_and_zero() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(3));
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));
        let z = IntMatrix::from_i64(&[&[0]]);
        let (h, u) = hermite_normal_form(&z);
        assert_eq!(h, z);
        assert!(u.is_unimodular());
    }

    #[test]
    fn hnf_two_by_two() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(u.mul(&m), h);
        assert!(u.is_unimodular());
        // Lattice spanned by (2,4),(6,8) has determinant 8 and contains (2,0).
        assert_eq!(h, IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(
            integral_kernel(&IntMatrix::from_i64(&[&[1, 1, 1]])),
            vec![ints(&[1, -1, 0]), ints(&[1, 0, -1])]
        );
        assert!(integral_kernel(&IntMatrix::from_i64(&[&[2, 1], &[1, 1]])).is_empty());
        assert_eq!(
            integral_kernel(&IntMatrix::from_i64(&[&[2, -1]])),
            vec![ints(&[1, 2])]
        );
        // Saturation: the rational kernel of [2 2] is spanned by (1,-1),
        // which is not twice anything.
        assert_eq!(
            integral_kernel(&IntMatrix::from_i64(&[&[2, 2]])),
            vec![ints(&[1, -1])]
        );
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 1]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
        let m = IntMatrix::from_i64(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        assert_eq!(m.determinant(), BigInt::from(2 * (3 - 2) + (1 - 3)));
        assert!(IntMatrix::from_i64(&[&[1, 1], &[0, 1]]).is_unimodular());
        assert!(!IntMatrix::from_i64(&[&[2, 1], &[0, 1]]).is_unimodular());
    }

    proptest::proptest! {
        #[test]
        fn hnf_properties(entries in proptest::collection::vec(-6i64..7, 12), cols in 1usize..5) {
            let rows = entries.len() / cols;
            let m = IntMatrix::from_rows(
                cols,
                (0..rows).map(|i| ints(&entries[i * cols..(i + 1) * cols])).collect(),
            );
            let (h, u) = hermite_normal_form(&m);
            proptest::prop_assert_eq!(u.mul(&m), h.clone());
            proptest::prop_assert!(u.is_unimodular());
            proptest::prop_assert!(is_hnf(&h));
            let (h2, _) = hermite_normal_form(&h);
            proptest::prop_assert_eq!(h2, h);
        }

        #[test]
        fn kernel_vectors_are_primitive_and_annihilated(
            entries in proptest::collection::vec(-4i64..5, 8),
            cols in 2usize..5,
        ) {
            let rows = entries.len() / cols;
            let m = IntMatrix::from_rows(
                cols,
                (0..rows).map(|i| ints(&entries[i * cols..(i + 1) * cols])).collect(),
            );
            let k = integral_kernel(&m);
            for y in &k {
                proptest::prop_assert!(m.mul_vec(y).iter().all(Zero::is_zero));
                let g = y.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
                proptest::prop_assert!(g.is_one());
                proptest::prop_assert!(y.iter().find(|x| !x.is_zero()).unwrap().is_positive());
            }
        }
    }
}
