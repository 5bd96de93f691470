//! Dense matrices and the exact algorithms on them: characteristic
//! polynomials via Hessenberg reduction, fraction-free Bareiss
//! determinants over the polynomial ring, and Gaussian solves over the
//! rational-function field.

use num_traits::{One, Zero};

use super::{Polynomial, Rational, RationalFunction};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
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
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    pub fn matmul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.get(i, k) * rhs.get(k, j);
            }
            acc
        })
    }
}

/// Exact characteristic polynomial det(xI - M) of a square rational
/// matrix, computed by similarity reduction to Hessenberg form followed by
/// the standard leading-minor recurrence. O(n^3) field operations, monic
/// of degree n by construction.
pub fn char_poly(m: &Matrix<Rational>) -> Polynomial {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Polynomial::one();
    }
    let mut h = m.clone();

    // Similarity transforms preserve the characteristic polynomial.
    for c in 0..n.saturating_sub(2) {
        let Some(pivot) = (c + 1..n).find(|&i| !h.get(i, c).is_zero()) else {
            continue;
        };
        if pivot != c + 1 {
            h.swap_rows(pivot, c + 1);
            h.swap_cols(pivot, c + 1);
        }
        let inv = h.get(c + 1, c).recip();
        for r in c + 2..n {
            if h.get(r, c).is_zero() {
                continue;
            }
            let factor = h.get(r, c) * &inv;
            for j in 0..n {
                let v = h.get(r, j) - &(&factor * h.get(c + 1, j));
                h.set(r, j, v);
            }
            for i in 0..n {
                let v = h.get(i, c + 1) + &(&factor * h.get(i, r));
                h.set(i, c + 1, v);
            }
        }
    }

    // p_k = (x - h[k-1][k-1]) p_{k-1} - sum over earlier rows weighted by
    // subdiagonal products.
    let x = Polynomial::x();
    let mut p: Vec<Polynomial> = Vec::with_capacity(n + 1);
    p.push(Polynomial::one());
    for k in 1..=n {
        let head = &(&x - &Polynomial::constant(h.get(k - 1, k - 1).clone())) * &p[k - 1];
        let mut acc = head;
        let mut subdiag = Rational::one();
        for m_row in (0..k - 1).rev() {
            subdiag = &subdiag * h.get(m_row + 1, m_row);
            if subdiag.is_zero() {
                break;
            }
            let w = h.get(m_row, k - 1) * &subdiag;
            if !w.is_zero() {
                acc = &acc - &p[m_row].mul_scalar(&w);
            }
        }
        p.push(acc);
    }
    p.pop().unwrap()
}

/// Fraction-free Bareiss determinant over the polynomial ring. Every
/// intermediate division is exact by the Sylvester identity.
pub fn poly_matrix_det(m: &Matrix<Polynomial>) -> Polynomial {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Polynomial::one();
    }
    let mut w = m.clone();
    let mut negated = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if w.get(k, k).is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !w.get(i, k).is_zero()) else {
                return Polynomial::zero();
            };
            w.swap_rows(k, pivot);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(w.get(k, k) * w.get(i, j)) - &(w.get(i, k) * w.get(k, j));
                w.set(i, j, num.exact_div(&prev));
            }
            w.set(i, k, Polynomial::zero());
        }
        prev = w.get(k, k).clone();
    }
    let det = w.get(n - 1, n - 1).clone();
    if negated {
        -det
    } else {
        det
    }
}

/// Determinant of a matrix with rational-function entries: clear each
/// column's denominators, run Bareiss over the polynomial ring, divide the
/// accumulated column factors back out.
pub fn ratfun_matrix_det(m: &Matrix<RationalFunction>) -> RationalFunction {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return RationalFunction::one();
    }
    let mut scale = Polynomial::one();
    let mut cleared = Matrix::zero(n, n);
    for j in 0..n {
        let mut lcm = Polynomial::one();
        for i in 0..n {
            let den = m.get(i, j).den();
            lcm = (&lcm * den).exact_div(&lcm.gcd(den));
        }
        for i in 0..n {
            let entry = m.get(i, j);
            let cofactor = lcm.exact_div(entry.den());
            cleared.set(i, j, entry.num() * &cofactor);
        }
        scale = &scale * &lcm;
    }
    RationalFunction::new(poly_matrix_det(&cleared), scale).expect("column scale is nonzero")
}

/// Solves A·y = b over the rational-function field by Gaussian
/// elimination. Returns None when A is singular.
pub fn solve_linear_system(
    a: &Matrix<RationalFunction>,
    b: &[RationalFunction],
) -> Option<Vec<RationalFunction>> {
    assert!(a.is_square(), "solve requires a square system");
    let n = a.rows();
    assert_eq!(b.len(), n, "right-hand side length mismatch");
    let mut w = a.clone();
    let mut rhs = b.to_vec();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !w.get(i, k).is_zero())?;
        w.swap_rows(pivot, k);
        rhs.swap(pivot, k);
        let inv = w.get(k, k).recip();
        for i in k + 1..n {
            if w.get(i, k).is_zero() {
                continue;
            }
            let factor = w.get(i, k) * &inv;
            for j in k..n {
                let v = w.get(i, j) - &(&factor * w.get(k, j));
                w.set(i, j, v);
            }
            rhs[i] = &rhs[i] - &(&factor * &rhs[k]);
        }
    }
    let mut y = vec![RationalFunction::zero(); n];
    for k in (0..n).rev() {
        let mut acc = rhs[k].clone();
        for j in k + 1..n {
            acc = &acc - &(w.get(k, j) * &y[j]);
        }
        y[k] = &acc / w.get(k, k);
    }
    Some(y)
}
