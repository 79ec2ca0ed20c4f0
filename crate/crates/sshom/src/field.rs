//! Exact field arithmetic and field-valued matrices.
//!
//! Fields are context objects (the rationals carry no data, a prime field
//! carries its modulus) and elements are plain data. Rational arithmetic is
//! over `i128` with checked operations; prime field moduli are validated
//! primes below `2^31` so products fit in `u64`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::IntMatrix;

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        let (mut num, mut den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if den < 0 {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn from_int(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }
}

fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in rational arithmetic")
}

/// Context object for a coefficient field.
pub trait Field: Clone {
    type Elem: Clone + PartialEq + core::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i128) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::from_int(0)
    }

    fn one(&self) -> Rational {
        Rational::from_int(1)
    }

    fn from_int(&self, n: i128) -> Rational {
        Rational::from_int(n)
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        let num = cmul(a.num, b.den)
            .checked_add(cmul(b.num, a.den))
            .expect("integer overflow in rational arithmetic");
        Rational::new(num, cmul(a.den, b.den))
    }

    fn neg(&self, a: &Rational) -> Rational {
        Rational { num: -a.num, den: a.den }
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        // cross-reduce before multiplying to keep intermediates small
        let g1 = gcd(a.num, b.den).max(1);
        let g2 = gcd(b.num, a.den).max(1);
        Rational::new(cmul(a.num / g1, b.num / g2), cmul(a.den / g2, b.den / g1))
    }

    fn inv(&self, a: &Rational) -> Rational {
        assert!(a.num != 0, "division by zero");
        Rational::new(a.den, a.num)
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.num == 0
    }

    fn render(&self, a: &Rational) -> String {
        if a.den == 1 {
            format!("{}", a.num)
        } else {
            format!("{}/{}", a.num, a.den)
        }
    }
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let pow = |mut b: u128, mut e: u64, m: u128| {
        let mut acc: u128 = 1;
        b %= m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a as u128, d, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x * x % (n as u128);
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field `F_p`, `p` a validated prime `<= 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, &'static str> {
        if p > (1 << 31) {
            return Err("prime field modulus exceeds 2^31");
        }
        if !is_prime(p) {
            return Err("prime field modulus is not prime");
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_int(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a % self.p != 0, "division by zero");
        // Fermat: a^(p-2)
        let mut acc: u64 = 1;
        let mut base = *a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a % self.p == 0
    }

    fn render(&self, a: &u64) -> String {
        format!("{}", a % self.p)
    }
}

/// A dense matrix over a coefficient field, stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct FMatrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> FMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        FMatrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_int_matrix(field: &F, m: &IntMatrix) -> Self {
        let mut out = Self::zeros(field, m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, field.from_int(m.get(i, j)));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, field: &F, rhs: &FMatrix<F>) -> FMatrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k).clone();
                if field.is_zero(&a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !field.is_zero(b) {
                        let v = field.add(out.get(i, j), &field.mul(&a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, field: &F, rhs: &FMatrix<F>) -> FMatrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, field.add(self.get(i, j), rhs.get(i, j)));
            }
        }
        out
    }

    pub fn neg(&self, field: &F) -> FMatrix<F> {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = field.neg(v);
        }
        out
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> FMatrix<F> {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = field.mul(v, c);
        }
        out
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    /// Stack columns side by side: `[self | rhs]`.
    pub fn hstack(&self, field: &F, rhs: &FMatrix<F>) -> FMatrix<F> {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Self::zeros(field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(field: &F, rows: usize, cols: &[Vec<F::Elem>]) -> FMatrix<F> {
        let mut out = Self::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    /// Row echelon form in place; returns the pivot (row, col) list in order.
    /// Pivot selection is first nonzero entry scanning top-down, columns
    /// left to right, so the result is deterministic.
    pub fn row_reduce(&mut self, field: &F) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !field.is_zero(self.get(i, col))) else {
                continue;
            };
            // swap rows p, row
            if p != row {
                for j in 0..self.cols {
                    let a = self.get(row, j).clone();
                    let b = self.get(p, j).clone();
                    self.set(row, j, b);
                    self.set(p, j, a);
                }
            }
            let inv = field.inv(self.get(row, col));
            for j in col..self.cols {
                let v = field.mul(self.get(row, j), &inv);
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || field.is_zero(self.get(i, col)) {
                    continue;
                }
                let c = self.get(i, col).clone();
                for j in col..self.cols {
                    let v = field.sub(self.get(i, j), &field.mul(&c, self.get(row, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push((row, col));
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &F) -> usize {
        let mut m = self.clone();
        m.row_reduce(field).len()
    }

    /// Columns spanning the kernel of `self`.
    pub fn kernel_basis(&self, field: &F) -> FMatrix<F> {
        let mut m = self.clone();
        let pivots = m.row_reduce(field);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> =
            (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut out = Self::zeros(field, self.cols, free_cols.len());
        for (k, &fc) in free_cols.iter().enumerate() {
            out.set(fc, k, field.one());
            for &(pr, pc) in &pivots {
                // x[pc] = -m[pr][fc]
                out.set(pc, k, field.neg(m.get(pr, fc)));
            }
        }
        out
    }

    /// Solve `self * x = b` for each column of `b`. Returns `None` if any
    /// column is outside the column space.
    pub fn solve(&self, field: &F, b: &FMatrix<F>) -> Option<FMatrix<F>> {
        assert_eq!(self.rows, b.rows);
        let mut aug = self.hstack(field, b);
        let pivots = aug.row_reduce(field);
        // any pivot in the appended block means inconsistency
        if pivots.iter().any(|&(_, c)| c >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(field, self.cols, b.cols);
        for &(pr, pc) in &pivots {
            for j in 0..b.cols {
                x.set(pc, j, aug.get(pr, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// A basis for the column span: the subset of columns that are pivots
    /// when reducing left to right.
    pub fn column_space_basis(&self, field: &F) -> FMatrix<F> {
        let mut m = self.clone();
        let pivots = m.row_reduce(field);
        let cols: Vec<Vec<F::Elem>> = pivots.iter().map(|&(_, c)| self.column(c)).collect();
        Self::from_columns(field, self.rows, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_reduction() {
        let q = Rational::new(6, -4);
        assert_eq!((q.numer(), q.denom()), (-3, 2));
        let f = Rationals;
        assert_eq!(f.add(&q, &Rational::new(3, 2)), Rational::from_int(0));
    }

    #[test]
    fn prime_field_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2147483647).is_ok());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1 << 32).is_err());
    }

    #[test]
    fn fp_inverse() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u64 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn kernel_and_solve() {
        let f = Rationals;
        let m = FMatrix::from_int_matrix(
            &f,
            &IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]),
        );
        let k = m.kernel_basis(&f);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&f, &k).is_zero(&f));
        let b = FMatrix::from_int_matrix(&f, &IntMatrix::from_rows(&[vec![6], vec![12]]));
        let x = m.solve(&f, &b).unwrap();
        assert_eq!(m.mul(&f, &x), b);
        let bad = FMatrix::from_int_matrix(&f, &IntMatrix::from_rows(&[vec![1], vec![0]]));
        assert!(m.solve(&f, &bad).is_none());
    }
}
