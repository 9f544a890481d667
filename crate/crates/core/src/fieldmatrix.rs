//! Dense matrices over a [`GaloisField`], with exact Gaussian elimination.
//!
//! Entries are stored row-major. Products skip zero entries of the left factor, which
//! makes multiplying the (very sparse) generator matrices cheap while keeping a single
//! dense representation.

use crate::finitefield::{FieldElem, GaloisField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FieldMatrix {
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElem::ONE);
        }
        m
    }

    pub fn from_diagonal(diag: &[FieldElem]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j) == if i == j { FieldElem::ONE } else { FieldElem::ZERO })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn mul(&self, other: &FieldMatrix, f: &GaloisField) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = FieldMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, &b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        let slot = &mut out.data[base + j];
                        *slot = f.add(*slot, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElem], f: &GaloisField) -> Vec<FieldElem> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(FieldElem::ZERO, |acc, (&a, &b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        f.add(acc, f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn add(&self, other: &FieldMatrix, f: &GaloisField) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: FieldElem, f: &GaloisField) -> FieldMatrix {
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(c, a)).collect(),
        }
    }

    pub fn sub_identity(&self, f: &GaloisField) -> FieldMatrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let d = m.get(i, i);
            m.set(i, i, f.sub(d, FieldElem::ONE));
        }
        m
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = FieldMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FieldMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn row_reduce(&mut self, f: &GaloisField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let x = self.get(r, j);
                self.set(r, j, f.mul(inv, x));
            }
            let pivot_row: Vec<(usize, FieldElem)> = (c..self.cols)
                .map(|j| (j, self.get(r, j)))
                .filter(|(_, x)| !x.is_zero())
                .collect();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for &(j, x) in &pivot_row {
                    let y = self.get(i, j);
                    self.set(i, j, f.sub(y, f.mul(factor, x)));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &GaloisField) -> usize {
        self.clone().row_reduce(f).len()
    }

    /// Dimension of the right kernel.
    pub fn nullity(&self, f: &GaloisField) -> usize {
        self.cols - self.rank(f)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self, f: &GaloisField) -> Option<FieldMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = FieldMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, FieldElem::ONE);
        }
        let pivots = aug.row_reduce(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = FieldMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling_rng;

    fn random_matrix(n: usize, f: &GaloisField, rng: &mut rand_chacha::ChaCha8Rng) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f.random(rng));
            }
        }
        m
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = sampling_rng();
        for (p, k) in [(17u64, 1usize), (3, 4), (7, 2)] {
            let f = GaloisField::new(p, k).unwrap();
            let mut done = 0;
            while done < 5 {
                let m = random_matrix(8, &f, &mut rng);
                if let Some(inv) = m.inverse(&f) {
                    assert!(m.mul(&inv, &f).is_identity());
                    assert!(inv.mul(&m, &f).is_identity());
                    assert_eq!(m.rank(&f), 8);
                    done += 1;
                } else {
                    assert!(m.rank(&f) < 8);
                }
            }
        }
    }

    #[test]
    fn rank_and_nullity() {
        let f = GaloisField::prime(5).unwrap();
        let one = f.one();
        let two = f.from_int(2);
        let mut m = FieldMatrix::zeros(3, 3);
        for j in 0..3 {
            m.set(0, j, one);
            m.set(1, j, two);
        }
        m.set(2, 2, one);
        assert_eq!(m.rank(&f), 2);
        assert_eq!(m.nullity(&f), 1);
        assert!(m.inverse(&f).is_none());
        assert_eq!(FieldMatrix::identity(4).sub_identity(&f).nullity(&f), 4);
        let stacked = m.vstack(&FieldMatrix::identity(3));
        assert_eq!(stacked.rank(&f), 3);
    }

    #[test]
    fn products_are_associative() {
        let mut rng = sampling_rng();
        let f = GaloisField::new(5, 2).unwrap();
        let a = random_matrix(6, &f, &mut rng);
        let b = random_matrix(6, &f, &mut rng);
        let c = random_matrix(6, &f, &mut rng);
        assert_eq!(a.mul(&b, &f).mul(&c, &f), a.mul(&b.mul(&c, &f), &f));
        let v: Vec<FieldElem> = (0..6).map(|_| f.random(&mut rng)).collect();
        assert_eq!(a.mul(&b, &f).mul_vec(&v, &f), a.mul_vec(&b.mul_vec(&v, &f), &f));
        assert_eq!(a.transpose().transpose(), a);
    }
}
