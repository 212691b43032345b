//! Small dense real matrices.
//!
//! Everything in this crate works at desk scale (orders below ~50), so a plain
//! row-major `Vec<f64>` square matrix is all we need. The pivoted-elimination
//! determinant and inverse here double as the brute-force oracles against which
//! the Toeplitz recursions are tested, so they deliberately share no code with
//! the recursive path.

use crate::error::ToeplitzError;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    dim: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(dim: usize) -> Self {
        Mat { dim, data: vec![0.0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Mat::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Build from rows; panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix rows must form a square");
            data.extend_from_slice(row);
        }
        Mat { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// y = A x.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim);
        let mut y = vec![0.0; self.dim];
        for i in 0..self.dim {
            let row = &self.data[i * self.dim..(i + 1) * self.dim];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    /// xᵀ A y.
    pub fn quadratic_form(&self, x: &[f64], y: &[f64]) -> f64 {
        self.mul_vec(y).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Sum of the entries of A x (the `𝟙ᵀ A x` border term).
    pub fn ones_form(&self, x: &[f64]) -> f64 {
        self.mul_vec(x).iter().sum()
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Copy with row `r` and column `c` deleted.
    pub fn minor(&self, r: usize, c: usize) -> Mat {
        let n = self.dim;
        let mut out = Mat::zeros(n - 1);
        let mut ii = 0;
        for i in 0..n {
            if i == r {
                continue;
            }
            let mut jj = 0;
            for j in 0..n {
                if j == c {
                    continue;
                }
                out[(ii, jj)] = self[(i, j)];
                jj += 1;
            }
            ii += 1;
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
///
/// Oracle-grade: O(n³), no cleverness. A singular matrix gives 0.
pub fn brute_det(m: &Mat) -> f64 {
    let n = m.dim;
    let mut a = m.clone();
    let mut det = 1.0;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| a[(i, col)].abs().total_cmp(&a[(j, col)].abs()))
            .unwrap();
        let pivot = a[(pivot_row, col)];
        if pivot == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            for j in 0..n {
                let tmp = a[(col, j)];
                a[(col, j)] = a[(pivot_row, j)];
                a[(pivot_row, j)] = tmp;
            }
            det = -det;
        }
        det *= pivot;
        for i in col + 1..n {
            let factor = a[(i, col)] / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in col..n {
                a[(i, j)] -= factor * a[(col, j)];
            }
        }
    }
    det
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
pub fn brute_inverse(m: &Mat) -> Result<Mat, ToeplitzError> {
    let n = m.dim;
    let mut a = m.clone();
    let mut inv = Mat::identity(n);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| a[(i, col)].abs().total_cmp(&a[(j, col)].abs()))
            .unwrap();
        let pivot = a[(pivot_row, col)];
        if pivot == 0.0 {
            return Err(ToeplitzError::Singular);
        }
        if pivot_row != col {
            for j in 0..n {
                a.data.swap(col * n + j, pivot_row * n + j);
                inv.data.swap(col * n + j, pivot_row * n + j);
            }
        }
        let scale = 1.0 / pivot;
        for j in 0..n {
            a[(col, j)] *= scale;
            inv[(col, j)] *= scale;
        }
        for i in 0..n {
            if i == col {
                continue;
            }
            let factor = a[(i, col)];
            if factor == 0.0 {
                continue;
            }
            for j in 0..n {
                a[(i, j)] -= factor * a[(col, j)];
                inv[(i, j)] -= factor * inv[(col, j)];
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_identity_is_one() {
        assert_eq!(brute_det(&Mat::identity(4)), 1.0);
    }

    #[test]
    fn inverse_of_identity() {
        let inv = brute_inverse(&Mat::identity(3)).unwrap();
        assert_eq!(inv, Mat::identity(3));
    }

    #[test]
    fn two_by_two_closed_form() {
        let m = Mat::from_rows(&[vec![1.0, 0.5], vec![0.5, 1.0]]);
        assert!((brute_det(&m) - 0.75).abs() < 1e-15);
        let inv = brute_inverse(&m).unwrap();
        let expect = Mat::from_rows(&[
            vec![4.0 / 3.0, -2.0 / 3.0],
            vec![-2.0 / 3.0, 4.0 / 3.0],
        ]);
        assert!(inv.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = Mat::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert_eq!(brute_det(&m), 0.0);
        assert!(matches!(brute_inverse(&m), Err(ToeplitzError::Singular)));
    }

    #[test]
    fn random_spd_inverse_consistency() {
        // B Bᵀ + I is symmetric positive definite for any B.
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let n = 5;
        let mut b = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                b[(i, j)] = next();
            }
        }
        let mut spd = Mat::identity(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    spd[(i, j)] += b[(i, k)] * b[(j, k)];
                }
            }
        }
        let inv = brute_inverse(&spd).unwrap();
        let prod = inv.matmul(&spd);
        assert!(
            prod.max_abs_diff(&Mat::identity(n)) < 1e-11,
            "inverse * matrix should be identity"
        );
    }
}
