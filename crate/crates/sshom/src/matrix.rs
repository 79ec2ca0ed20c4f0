//! Dense exact integer matrices and Smith normal form.
//!
//! Entries are `i128` and all arithmetic is checked: exceeding the `i128`
//! range aborts with a panic rather than wrapping. The matrices seen in
//! practice (boundary operators with entries in `{-1, 0, 1}`) stay far away
//! from that bound.

use alloc::vec;
use alloc::vec::Vec;

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in exact matrix arithmetic")
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer overflow in exact matrix arithmetic")
}

fn checked_sub(a: i128, b: i128) -> i128 {
    a.checked_sub(b).expect("integer overflow in exact matrix arithmetic")
}

/// A dense matrix over the integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from explicit rows. Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows in IntMatrix::from_rows");
            data.extend_from_slice(row);
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix product `self * rhs`. Panics on dimension mismatch.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        let v = checked_add(out.get(i, j), checked_mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = checked_sub(0, *v);
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`; any block may be given as `None`
    /// (meaning a zero block), with shapes inferred from the others.
    pub fn block_2x2(
        a: &IntMatrix,
        b: &IntMatrix,
        c: &IntMatrix,
        d: &IntMatrix,
    ) -> IntMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut out = IntMatrix::zeros(a.rows + c.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j));
            }
            for j in 0..b.cols {
                out.set(i, a.cols + j, b.get(i, j));
            }
        }
        for i in 0..c.rows {
            for j in 0..c.cols {
                out.set(a.rows + i, j, c.get(i, j));
            }
            for j in 0..d.cols {
                out.set(a.rows + i, a.cols + j, d.get(i, j));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: i128) {
        if q == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = checked_sub(self.get(dst, j), checked_mul(q, self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: i128) {
        if q == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = checked_sub(self.get(i, dst), checked_mul(q, self.get(i, src)));
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = checked_sub(0, self.get(i, j));
            self.set(i, j, v);
        }
    }
}

/// Result of a Smith normal form computation.
///
/// `diagonal` holds the elementary divisors `d_1 | d_2 | ... | d_r`, all
/// positive; `rank` is their count. When transforms were requested,
/// `row_transform * M * col_transform` is the diagonal matrix and both
/// transforms are unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<i128>,
    pub rank: usize,
    pub row_transform: Option<IntMatrix>,
    pub col_transform: Option<IntMatrix>,
}

impl SmithForm {
    /// Elementary divisors strictly greater than 1 (the torsion part).
    pub fn nontrivial_divisors(&self) -> Vec<i128> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }
}

/// Quotient rounding to nearest, which keeps remainders at most half the
/// divisor and so controls entry growth during elimination.
fn nearest_quotient(a: i128, b: i128) -> i128 {
    debug_assert!(b != 0);
    let q = a.div_euclid(b);
    let r = a.rem_euclid(b);
    if r > b.abs() / 2 {
        q + 1
    } else {
        q
    }
}

/// Smith normal form of an integer matrix.
///
/// The algorithm is classical pivoting with smallest-entry selection: the
/// minimal nonzero entry of the remaining submatrix becomes the pivot, its
/// row and column are cleared by nearest-quotient reduction, and a
/// divisibility sweep folds any non-multiple of the pivot back into the
/// working row. Deterministic (first minimal entry in row-major order wins).
pub fn smith_normal_form(m: &IntMatrix, with_transforms: bool) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut u = if with_transforms { Some(IntMatrix::identity(rows)) } else { None };
    let mut v = if with_transforms { Some(IntMatrix::identity(cols)) } else { None };
    let mut diagonal = Vec::new();
    let bound = rows.min(cols);

    for t in 0..bound {
        // locate minimal nonzero entry in the submatrix [t.., t..]
        let mut pivot: Option<(usize, usize, i128)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if x != 0 && pivot.map_or(true, |(_, _, best)| x.abs() < best.abs()) {
                    pivot = Some((i, j, x));
                }
            }
        }
        let Some((pi, pj, _)) = pivot else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if let Some(u) = u.as_mut() {
            u.swap_rows(t, pi);
        }
        if let Some(v) = v.as_mut() {
            v.swap_cols(t, pj);
        }

        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..rows {
                let x = a.get(i, t);
                if x == 0 {
                    continue;
                }
                let p = a.get(t, t);
                let q = nearest_quotient(x, p);
                a.row_axpy(i, t, q);
                if let Some(u) = u.as_mut() {
                    u.row_axpy(i, t, q);
                }
                if a.get(i, t) != 0 {
                    // remainder is smaller than the pivot; swap it up and restart
                    a.swap_rows(t, i);
                    if let Some(u) = u.as_mut() {
                        u.swap_rows(t, i);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                let x = a.get(t, j);
                if x == 0 {
                    continue;
                }
                let p = a.get(t, t);
                let q = nearest_quotient(x, p);
                a.col_axpy(j, t, q);
                if let Some(v) = v.as_mut() {
                    v.col_axpy(j, t, q);
                }
                if a.get(t, j) != 0 {
                    a.swap_cols(t, j);
                    if let Some(v) = v.as_mut() {
                        v.swap_cols(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot now divides its cleared row and column; enforce that it
            // divides the rest of the submatrix before moving on
            let p = a.get(t, t);
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if a.get(i, j).rem_euclid(p.abs()) != 0 {
                        // fold row i into row t to expose the non-multiple
                        a.row_axpy(t, i, -1);
                        if let Some(u) = u.as_mut() {
                            u.row_axpy(t, i, -1);
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }

        if a.get(t, t) < 0 {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        diagonal.push(a.get(t, t));
    }

    let rank = diagonal.len();
    SmithForm { diagonal, rank, row_transform: u, col_transform: v }
}

/// Rank of an integer matrix (over the rationals), via Smith normal form.
pub fn integer_rank(m: &IntMatrix) -> usize {
    smith_normal_form(m, false).rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_snf() {
        let s = smith_normal_form(&IntMatrix::identity(3), false);
        assert_eq!(s.diagonal, vec![1, 1, 1]);
        assert_eq!(s.rank, 3);
    }

    #[test]
    fn zero_matrix_snf() {
        let s = smith_normal_form(&IntMatrix::zeros(2, 4), true);
        assert!(s.diagonal.is_empty());
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn empty_matrix_snf() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 5), false);
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn gcd_of_minors_example() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = smith_normal_form(&m, true);
        assert_eq!(s.diagonal, vec![2, 4]);
        let u = s.row_transform.unwrap();
        let v = s.col_transform.unwrap();
        let d = u.mul(&m).mul(&v);
        assert_eq!(d.get(0, 0), 2);
        assert_eq!(d.get(1, 1), 4);
        assert_eq!(d.get(0, 1), 0);
        assert_eq!(d.get(1, 0), 0);
    }

    #[test]
    fn divisibility_chain_on_fixed_cases() {
        let cases = [
            IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]),
            IntMatrix::from_rows(&[vec![6, 4, 2], vec![4, 8, 0], vec![2, 0, 10]]),
            IntMatrix::from_rows(&[vec![0, 5], vec![5, 0], vec![10, 10]]),
        ];
        for m in &cases {
            let s = smith_normal_form(m, true);
            for w in s.diagonal.windows(2) {
                assert_eq!(w[1].rem_euclid(w[0]), 0, "divisibility chain broken");
            }
            let u = s.row_transform.as_ref().unwrap();
            let v = s.col_transform.as_ref().unwrap();
            let d = u.mul(m).mul(v);
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    let expect = if i == j && i < s.rank { s.diagonal[i] } else { 0 };
                    assert_eq!(d.get(i, j), expect);
                }
            }
        }
    }
}
