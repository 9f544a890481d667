//! Integer linear algebra on small dense matrices.
//!
//! Matrices are `Vec<Vec<i64>>` in row-major order. Everything here is exact; the
//! sizes involved (rank <= 8) keep all intermediate values far from overflow.

pub type IntMatrix = Vec<Vec<i64>>;

/// Smith normal form `D = U * A * V` with unimodular `U`, `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal entries `d_1 | d_2 | ...`, non-negative; length `min(rows, cols)`.
    pub diagonal: Vec<i64>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// Invariant factors greater than one, i.e. the torsion of the cokernel.
    pub fn torsion_factors(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d != 0).count()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &IntMatrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// Fraction-free (Bareiss) determinant of a square matrix.
pub fn determinant(a: &IntMatrix) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "determinant of a non-square matrix");
            r.iter().map(|&x| i128::from(x)).collect()
        })
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    i64::try_from(sign * m[n - 1][n - 1]).expect("determinant overflows i64")
}

/// Smith normal form with transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let mut left = identity(rows);
    let mut right = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0
                        && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(m, left, right);
            };
            m.swap(t, pi);
            left.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            for row in right.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            let p = m[t][t];
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in 0..cols {
                        m[i][j] -= q * m[t][j];
                    }
                    for j in 0..rows {
                        left[i][j] -= q * left[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for i in 0..rows {
                        m[i][j] -= q * m[i][t];
                    }
                    for i in 0..cols {
                        right[i][j] -= q * right[i][t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility condition on the remaining block
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in 0..cols {
                        m[t][j] += m[i][j];
                    }
                    for j in 0..rows {
                        left[t][j] += left[i][j];
                    }
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for x in m[t].iter_mut() {
                *x = -*x;
            }
            for x in left[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    finish(m, left, right)
}

fn finish(m: IntMatrix, left: IntMatrix, right: IntMatrix) -> SmithForm {
    let n = m.len().min(m.first().map_or(0, Vec::len));
    SmithForm {
        diagonal: (0..n).map(|i| m[i][i].abs()).collect(),
        left,
        right,
    }
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank()
}

/// Some integer solution of `A x = b`, or `None` if no integer solution exists.
pub fn solve_integer(a: &IntMatrix, b: &[i64]) -> Option<Vec<i64>> {
    let snf = smith_normal_form(a);
    let cols = a.first().map_or(0, Vec::len);
    let ub = mat_vec(&snf.left, b);
    let mut y = vec![0i64; cols];
    for (i, &ubi) in ub.iter().enumerate() {
        let d = snf.diagonal.get(i).copied().unwrap_or(0);
        if d == 0 {
            if ubi != 0 {
                return None;
            }
        } else if ubi % d != 0 {
            return None;
        } else {
            y[i] = ubi / d;
        }
    }
    Some(mat_vec(&snf.right, &y))
}
