//! Dense exact linear algebra over arbitrary-precision rationals.
//!
//! Everything downstream (section spaces on nodal chains, quiver
//! representation homomorphisms, resolutions) reduces to row reduction of
//! small dense matrices, so a single straightforward implementation over
//! `BigRational` keeps every dimension count exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        RatMatrix { rows: nr, cols: nc, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c) + a * b;
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    /// Stack side by side: `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols { self.at(r, c).clone() } else { other.at(r, c - self.cols).clone() }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows { self.at(r, c).clone() } else { other.at(r - self.rows, c).clone() }
        })
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = {
                let piv = self.at(row, col).clone();
                Rat::one() / piv
            };
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c) - &factor * self.at(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space, one column vector per basis element.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                vec[p] = -m.at(i, free).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// One solution `x` of `self * x = rhs` per column of `rhs`, if consistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None; // pivot in the rhs block: inconsistent
        }
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(p, c, aug.at(i, self.cols + c).clone());
            }
        }
        Some(x)
    }

    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let piv = m.at(col, col).clone();
            det *= &piv;
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col) / &piv;
                for c in col..n {
                    let v = m.at(r, c) - &factor * m.at(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && !self.determinant().is_zero()
    }

    /// Columns of `self` that form a basis of the column space.
    pub fn column_space_basis(&self) -> RatMatrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut out = Self::zeros(self.rows, pivots.len());
        for (j, &p) in pivots.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.at(r, p).clone());
            }
        }
        out
    }

    pub fn abs_max_den(&self) -> BigInt {
        self.data.iter().map(|x| x.denom().abs()).max().unwrap_or_else(|| BigInt::from(1))
    }
}

/// Row-reduction data for a subspace `W` of `k^dim`, spanned by the columns
/// of `span`. Supports reducing vectors modulo `W` and building the quotient.
pub struct SubspaceReducer {
    pub dim: usize,
    /// RREF rows spanning `W` (as row vectors of length `dim`).
    rows: RatMatrix,
    pivots: Vec<usize>,
    /// Coordinates not hit by a pivot: these index a basis of the quotient.
    pub free: Vec<usize>,
}

impl SubspaceReducer {
    pub fn new(span: &RatMatrix) -> Self {
        let mut rows = span.transpose();
        let pivots = rows.rref();
        let rank = pivots.len();
        let rows = RatMatrix::from_fn(rank, span.rows(), |r, c| rows.at(r, c).clone());
        let free: Vec<usize> = (0..span.rows()).filter(|c| !pivots.contains(c)).collect();
        SubspaceReducer { dim: span.rows(), rows, pivots, free }
    }

    pub fn subspace_dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of `v + W` in the free-coordinate basis of `k^dim / W`.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for c in 0..self.dim {
                let v = &w[c] - &factor * self.rows.at(i, c);
                w[c] = v;
            }
        }
        self.free.iter().map(|&f| w[f].clone()).collect()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Matrix of the projection `k^dim -> k^dim / W` in the free basis.
    pub fn projection_matrix(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.free.len(), self.dim);
        for j in 0..self.dim {
            let mut e = vec![Rat::zero(); self.dim];
            e[j] = Rat::one();
            let r = self.reduce(&e);
            for (i, x) in r.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        out
    }

    /// The section of the projection sending the free basis to coordinate vectors.
    pub fn section_matrix(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.dim, self.free.len());
        for (j, &f) in self.free.iter().enumerate() {
            out.set(f, j, Rat::one());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let m = RatMatrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let id = RatMatrix::identity(4);
        assert_eq!(id.rank(), 4);
    }

    #[test]
    fn kernel_of_projection() {
        let m = RatMatrix::from_int_rows(&[vec![1, 0, -1], vec![0, 1, -1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = RatMatrix::from_int_rows(&[vec![1, 1], vec![0, 1]]);
        let b = RatMatrix::from_int_rows(&[vec![3], vec![2]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);

        let sing = RatMatrix::from_int_rows(&[vec![1, 1], vec![1, 1]]);
        let bad = RatMatrix::from_int_rows(&[vec![0], vec![1]]);
        assert!(sing.solve(&bad).is_none());
    }

    #[test]
    fn determinant_sign() {
        let m = RatMatrix::from_int_rows(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(m.determinant(), rat(3));
        let swap = RatMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.determinant(), rat(-1));
    }

    #[test]
    fn subspace_reduction() {
        // W = span{(1,1,0)} in k^3.
        let span = RatMatrix::from_int_rows(&[vec![1], vec![1], vec![0]]);
        let red = SubspaceReducer::new(&span);
        assert_eq!(red.subspace_dim(), 1);
        assert_eq!(red.free.len(), 2);
        assert!(red.contains(&[rat(2), rat(2), rat(0)]));
        assert!(!red.contains(&[rat(1), rat(0), rat(0)]));
        // projection then section is the identity on the quotient.
        let p = red.projection_matrix();
        let s = red.section_matrix();
        assert_eq!(p.mul(&s), RatMatrix::identity(2));
    }
}
