//! Dense exact matrices over the rationals.
//!
//! Ranks, determinants and echelon forms run a fraction-free (Bareiss-style)
//! elimination over the integers after clearing row denominators, which keeps
//! intermediate entries divisions-exact and controls coefficient growth. Null
//! space bases come from the normalized reduced echelon form, so a given
//! matrix always yields the same basis, in the same order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    nrows: usize,
    ncols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat {
            nrows,
            ncols,
            data: vec![Rat::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Mat {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Mat::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rat]> {
        self.data.chunks(self.ncols)
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.nrows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.ncols, self.nrows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.ncols, other.nrows, "matrix product shape mismatch");
        Mat::from_fn(self.nrows, other.ncols, |i, j| {
            (0..self.ncols).map(|t| &self[(i, t)] * &other[(t, j)]).sum()
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.ncols, v.len(), "matrix-vector shape mismatch");
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        Mat::from_fn(self.nrows, self.ncols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        Mat::from_fn(self.nrows, self.ncols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.nrows, self.ncols, |i, j| -self[(i, j)].clone())
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat::from_fn(self.nrows, self.ncols, |i, j| c * &self[(i, j)])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.nrows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.nrows).all(|i| (0..=i).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    /// Clear denominators row by row, yielding an integer matrix with the same
    /// row space and null space.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows()
            .map(|row| {
                let mut lcm = BigInt::one();
                for x in row {
                    lcm = num_integer::lcm(lcm, x.denom().clone());
                }
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the echelon matrix
    /// together with the pivot columns. Pivot choice is the first nonzero
    /// entry, so the result is deterministic.
    fn bareiss_echelon(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut m = self.integer_rows();
        let (nr, nc) = (self.nrows, self.ncols);
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = (r..nr).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..nr {
                for j in c + 1..nc {
                    let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    debug_assert!((&t % &prev).is_zero(), "Bareiss division not exact");
                    m[i][j] = t / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.nrows == 0 || self.ncols == 0 {
            return 0;
        }
        self.bareiss_echelon().1.len()
    }

    /// Reduced row echelon form over the rationals (pivots normalized to 1,
    /// zeros above and below), with the pivot column list.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let (ech, pivots) = self.bareiss_echelon();
        let mut m = Mat::from_rows(
            ech.into_iter()
                .map(|row| row.into_iter().map(Rat::from_integer).collect())
                .collect(),
        );
        for (r, &c) in pivots.iter().enumerate() {
            let inv = {
                let p = m[(r, c)].clone();
                p.recip()
            };
            for j in c..self.ncols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..r {
                if !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..self.ncols {
                        let v = &m[(i, j)] - &f * &m[(r, j)];
                        m[(i, j)] = v;
                    }
                }
            }
        }
        (m, pivots)
    }

    /// Basis of `{ x : A x = 0 }`, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        if self.nrows == 0 {
            return (0..self.ncols)
                .map(|j| unit_vec(self.ncols, j))
                .collect();
        }
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        for f in 0..self.ncols {
            if pivots.contains(&f) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.ncols];
            v[f] = Rat::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.nrows;
        if n == 0 {
            return Rat::one();
        }
        // Track the row scaling used to clear denominators.
        let mut scale = Rat::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for row in self.rows() {
            let mut lcm = BigInt::one();
            for x in row {
                lcm = num_integer::lcm(lcm, x.denom().clone());
            }
            scale *= Rat::from_integer(lcm.clone());
            m.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        }
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Rat::zero();
            };
            if p != k {
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = Rat::from_integer(m[n - 1][n - 1].clone());
        let signed = if sign < 0 { -d } else { d };
        signed / scale
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.nrows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// One solution of `A x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.nrows, b.len());
        let mut aug = Mat::zeros(self.nrows, self.ncols + 1);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.ncols)] = b[i].clone();
        }
        let (m, pivots) = aug.rref();
        if pivots.contains(&self.ncols) {
            return None; // inconsistent
        }
        let mut x = vec![Rat::zero(); self.ncols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = m[(r, self.ncols)].clone();
        }
        Some(x)
    }

    /// Exact positive-definiteness test: all leading principal minors > 0.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        for k in 1..=self.nrows {
            let minor = Mat::from_fn(k, k, |i, j| self[(i, j)].clone());
            if !minor.det().is_positive() {
                return false;
            }
        }
        true
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.ncols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.ncols + j]
    }
}

pub fn unit_vec(n: usize, j: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[j] = Rat::one();
    v
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Rank of the span of a set of vectors.
pub fn span_rank(vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Mat::from_rows(vectors.to_vec()).rank()
}

/// Deterministic echelonized basis of the span of the given vectors.
pub fn span_basis(vectors: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let nonzero: Vec<Vec<Rat>> = vectors.iter().filter(|v| !vec_is_zero(v)).cloned().collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_rows(nonzero);
    assert_eq!(m.ncols(), ncols);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        for row in a.rows() {
            assert!(dot(row, &ns[0]).is_zero());
        }
    }

    #[test]
    fn det_matches_cofactor_on_small_matrices() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.det(), rat(1));
        let b = m(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]]);
        assert_eq!(b.det(), rat(-3));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det(), rat(0));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(3));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn positive_definite() {
        assert!(Mat::identity(4).is_positive_definite());
        assert!(m(&[&[2, 1], &[1, 2]]).is_positive_definite());
        assert!(!m(&[&[1, 2], &[2, 1]]).is_positive_definite());
        assert!(!m(&[&[0, 0], &[0, 1]]).is_positive_definite());
    }

    #[test]
    fn nullspace_of_empty_system_is_everything() {
        let a = Mat::zeros(0, 3);
        assert_eq!(a.nullspace().len(), 3);
    }
}
