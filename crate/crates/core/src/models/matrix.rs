//! Matrices over the integers mod a small prime, with the Kronecker product
//! as a strict tensor.

use std::fmt;

use rand::Rng;

use crate::category::MonoidalCategory;
use crate::error::{CatError, Result};

/// A `rows × cols` matrix, row-major, entries reduced mod the category's prime.
/// As a morphism it goes from `cols` to `rows`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone)]
pub struct MatrixModCategory {
    p: u32,
}

impl Default for MatrixModCategory {
    fn default() -> Self {
        MatrixModCategory { p: 7 }
    }
}

impl MatrixModCategory {
    pub fn new(p: u32) -> Result<Self> {
        let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime {
            return Err(CatError::Precondition(format!("{p} is not prime")));
        }
        Ok(MatrixModCategory { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Build a matrix from row-major entries (any integers; reduced mod p).
    pub fn matrix(&self, rows: usize, cols: usize, entries: &[i64]) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(CatError::Precondition(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let p = i64::from(self.p);
        Ok(Matrix {
            rows,
            cols,
            data: entries.iter().map(|e| e.rem_euclid(p) as u32).collect(),
        })
    }

    /// The 1×1 matrix `[k]`.
    pub fn scalar(&self, k: i64) -> Matrix {
        self.matrix(1, 1, &[k]).expect("one entry")
    }

    pub fn random(&self, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
        Matrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| rng.gen_range(0..self.p)).collect(),
        }
    }
}

impl MonoidalCategory for MatrixModCategory {
    type Obj = usize;
    type Mor = Matrix;

    fn dom(&self, f: &Matrix) -> usize {
        f.cols
    }
    fn cod(&self, f: &Matrix) -> usize {
        f.rows
    }
    fn identity(&self, n: &usize) -> Result<Matrix> {
        let n = *n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Ok(Matrix {
            rows: n,
            cols: n,
            data,
        })
    }
    fn compose(&self, g: &Matrix, f: &Matrix) -> Result<Matrix> {
        if f.rows != g.cols {
            return Err(CatError::NotComposable {
                g: format!("{g:?}"),
                f: format!("{f:?}"),
                cod: f.rows.to_string(),
                dom: g.cols.to_string(),
            });
        }
        let (n, m, k) = (g.rows, f.cols, g.cols);
        let mut data = vec![0; n * m];
        for i in 0..n {
            for j in 0..m {
                let mut acc = 0u32;
                for l in 0..k {
                    acc = (acc + g.data[i * k + l] * f.data[l * m + j]) % self.p;
                }
                data[i * m + j] = acc;
            }
        }
        Ok(Matrix {
            rows: n,
            cols: m,
            data,
        })
    }
    fn mor_eq(&self, f: &Matrix, g: &Matrix) -> bool {
        f == g
    }
    fn unit(&self) -> usize {
        1
    }
    fn tensor_obj(&self, x: &usize, y: &usize) -> Result<usize> {
        Ok(x * y)
    }
    fn tensor_mor(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        let rows = f.rows * g.rows;
        let cols = f.cols * g.cols;
        let mut data = vec![0; rows * cols];
        for i in 0..f.rows {
            for j in 0..f.cols {
                let a = f.data[i * f.cols + j];
                for k in 0..g.rows {
                    for l in 0..g.cols {
                        let r = i * g.rows + k;
                        let c = j * g.cols + l;
                        data[r * cols + c] = a * g.data[k * g.cols + l] % self.p;
                    }
                }
            }
        }
        Ok(Matrix { rows, cols, data })
    }
    fn associator(&self, x: &usize, y: &usize, z: &usize) -> Result<Matrix> {
        self.identity(&(x * y * z))
    }
    fn associator_inv(&self, x: &usize, y: &usize, z: &usize) -> Result<Matrix> {
        self.identity(&(x * y * z))
    }
    fn lunitor(&self, x: &usize) -> Result<Matrix> {
        self.identity(x)
    }
    fn lunitor_inv(&self, x: &usize) -> Result<Matrix> {
        self.identity(x)
    }
    fn runitor(&self, x: &usize) -> Result<Matrix> {
        self.identity(x)
    }
    fn runitor_inv(&self, x: &usize) -> Result<Matrix> {
        self.identity(x)
    }
    fn is_strict(&self) -> bool {
        true
    }
    fn obj_label(&self, x: &usize) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_of_small_matrices() {
        let c = MatrixModCategory::default();
        let f = c.matrix(1, 2, &[1, 2]).unwrap();
        let g = c.matrix(2, 1, &[3, 4]).unwrap();
        let fg = c.tensor_mor(&f, &g).unwrap();
        assert_eq!(fg.rows(), 2);
        assert_eq!(fg.cols(), 2);
        // [1*3 2*3; 1*4 2*4] mod 7
        assert_eq!(fg.entries(), &[3, 6, 4, 1]);
    }

    #[test]
    fn entries_reduce_mod_p() {
        let c = MatrixModCategory::default();
        assert_eq!(c.scalar(-1), c.scalar(6));
        assert_eq!(c.scalar(9), c.scalar(2));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(MatrixModCategory::new(6).is_err());
        assert!(MatrixModCategory::new(5).is_ok());
    }
}
