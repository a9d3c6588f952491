//! Dense matrices over an exact ring, with Gauss–Jordan elimination over the
//! rationals.

use std::fmt;

use crate::arith::{Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Ring> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<C>]) -> Self {
        let rows = columns.first().map_or(0, Vec::len);
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<C> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[C] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, o: &Matrix<C>) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out: Matrix<C> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let t = a.clone() * b;
                        out[(i, j)] = out[(i, j)].clone() + &t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[C]) -> Vec<C> {
        assert_eq!(self.cols, x.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(C::zero(), |acc, j| acc + &(self[(i, j)].clone() * &x[j])))
            .collect()
    }

    pub fn add(&self, o: &Matrix<C>) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "dimension mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + &o[(i, j)]
        })
    }

    pub fn sub(&self, o: &Matrix<C>) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "dimension mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - &o[(i, j)]
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() * c)
    }

    /// The commutator `self·o − o·self`.
    pub fn bracket(&self, o: &Matrix<C>) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// Converts entries through `f`, e.g. lifting rationals into polynomials.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<C> std::ops::Index<(usize, usize)> for Matrix<C> {
    type Output = C;

    fn index(&self, (i, j): (usize, usize)) -> &C {
        &self.data[i * self.cols + j]
    }
}

impl<C> std::ops::IndexMut<(usize, usize)> for Matrix<C> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C {
        &mut self.data[i * self.cols + j]
    }
}

impl<C: Ring> fmt::Display for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a rational matrix together with its pivot columns.
pub fn rref(m: &Matrix<Rational>) -> (Matrix<Rational>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, row * a.cols + j);
            }
        }
        let inv = a[(row, col)].recip();
        for j in col..a.cols {
            a[(row, j)] = &a[(row, j)] * &inv;
        }
        for r in 0..a.rows {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for j in col..a.cols {
                if !a[(row, j)].is_zero() {
                    let t = &factor * &a[(row, j)];
                    a[(r, j)] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix<Rational>) -> usize {
    rref(m).1.len()
}

/// A basis of `{x : m·x = 0}`; each vector has a 1 in its own free column and
/// 0 in every other free column.
pub fn nullspace(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); m.cols];
            x[f] = Rational::from_integer(1.into());
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -r[(row, f)].clone();
            }
            x
        })
        .collect()
}

/// Solves `m·x = b`, returning one solution when the system is consistent.
pub fn solve(m: &Matrix<Rational>, b: &[Rational]) -> Option<Vec<Rational>> {
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[(row, m.cols)].clone();
    }
    Some(x)
}

pub fn determinant(m: &Matrix<Rational>) -> Rational {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let mut a = m.clone();
    let n = a.rows;
    let mut det = Rational::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            for j in 0..n {
                a.data.swap(p * n + j, col * n + j);
            }
            det = -det;
        }
        let pivot = a[(col, col)].clone();
        det *= &pivot;
        for r in col + 1..n {
            let factor = &a[(r, col)] / &pivot;
            if factor.is_zero() {
                continue;
            }
            for j in col..n {
                let t = &factor * &a[(col, j)];
                a[(r, j)] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_fn(rows.len(), rows[0].len(), |i, j| int(rows[i][j]))
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            assert!(a.mul_vec(x).iter().all(Ring::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[int(3), int(1)]).unwrap(), vec![int(2), int(1)]);
        let singular = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&singular, &[int(1), int(3)]).is_none());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(
            determinant(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])),
            int(6)
        );
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }
}
