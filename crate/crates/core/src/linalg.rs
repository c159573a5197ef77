//! Small dense matrices and exact Gaussian elimination.

use std::fmt;

use num_rational::Ratio;
use num_traits::{Num, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = Ratio<i128>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.data[r * self.cols + c].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Position of the first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }
}

impl<T: Clone + Num> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(r, k);
                if x.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let y = other.get(k, c);
                    if !y.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] = out.data[idx].clone() + x.clone() * y.clone();
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &T, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = a.clone() + s.clone() * b.clone();
            }
        }
    }

    /// Commutator `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }
}

/// Reduced row echelon form over a field; returns the reduced matrix and the
/// pivot columns.
pub fn rref<T: Clone + Num>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&k| !a.get(k, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = T::one() / a.get(r, c).clone();
        for j in 0..a.cols {
            let v = a.get(r, j).clone() * inv.clone();
            a.set(r, j, v);
        }
        for k in 0..a.rows {
            if k == r {
                continue;
            }
            let f = a.get(k, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..a.cols {
                let v = a.get(k, j).clone() - f.clone() * a.get(r, j).clone();
                a.set(k, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Clone + Num>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// Determinant of a square matrix over a field.
pub fn determinant<T: Clone + Num>(m: &Matrix<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&k| !a.get(k, c).is_zero()) else {
            return T::zero();
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = T::zero() - det;
        }
        let piv = a.get(c, c).clone();
        det = det * piv.clone();
        for k in c + 1..n {
            let f = a.get(k, c).clone() / piv.clone();
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let v = a.get(k, j).clone() - f.clone() * a.get(c, j).clone();
                a.set(k, j, v);
            }
        }
    }
    det
}

/// Solution of `A x = b` with every free variable set to zero, together with
/// the rank of `A`. `None` when the system is inconsistent.
pub fn solve_affine<T: Clone + Num>(a: &Matrix<T>, b: &[T]) -> Option<(Vec<T>, usize)> {
    assert_eq!(a.rows, b.len());
    let aug = Matrix::from_fn(a.rows, a.cols + 1, |r, c| {
        if c < a.cols {
            a.get(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![T::zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red.get(r, a.cols).clone();
    }
    Some((x, pivots.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect())
    }

    #[test]
    fn products_and_commutators() {
        let e12 = q(vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        let e23 = q(vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        let e13 = q(vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(e12.commutator(&e23), e13);
        assert!(e12.matmul(&e12).is_zero());
        assert_eq!(Matrix::<Rational>::identity(3).matmul(&e13), e13);
        assert_eq!(e13.first_nonzero(), Some((0, 2)));
    }

    #[test]
    fn rank_and_determinant() {
        let m = q(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(determinant(&m), rat(0));
        let n = q(vec![vec![1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
        assert_eq!(determinant(&n), rat(2));
        assert_eq!(determinant(&Matrix::<Rational>::identity(4)), rat(1));
    }

    #[test]
    fn affine_solve_sets_free_variables_to_zero() {
        let a = q(vec![vec![1, 1, 0], vec![0, 0, 1]]);
        let (x, r) = solve_affine(&a, &[rat(3), rat(-2)]).unwrap();
        assert_eq!(r, 2);
        assert_eq!(x, vec![rat(3), rat(0), rat(-2)]);
        let bad = q(vec![vec![1, 1], vec![2, 2]]);
        assert!(solve_affine(&bad, &[rat(1), rat(3)]).is_none());
        let (x, _) = solve_affine(&q(vec![vec![2]]), &[rat(1)]).unwrap();
        assert_eq!(x, vec![Rational::new(1, 2)]);
    }
}
