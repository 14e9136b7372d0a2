use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};

/// Symmetric bilinear form given by its Gram matrix in the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(BilinearForm { gram })
    }

    pub fn zero(n: usize) -> Self {
        BilinearForm {
            gram: Matrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        BilinearForm {
            gram: Matrix::identity(n),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        crate::linalg::scalar::dot(x, &gy)
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.gram[(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.gram.is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.det().expect("square gram").is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> BilinearForm {
        BilinearForm {
            gram: self.gram.scale(c),
        }
    }

    /// Gram matrix of the restriction to `u`, in the canonical basis of `u`.
    pub fn restricted_gram(&self, u: &Subspace) -> Matrix {
        let b = u.basis_vectors();
        Matrix::from_fn(b.len(), b.len(), |i, j| self.eval(&b[i], &b[j]))
    }

    pub fn is_nondegenerate_on(&self, u: &Subspace) -> bool {
        !self
            .restricted_gram(u)
            .det()
            .expect("square gram")
            .is_zero()
    }

    /// `U^⊥ = {x : φ(x, u) = 0 for all u in U}` (no nondegeneracy required).
    pub fn perp_unchecked(&self, u: &Subspace) -> Subspace {
        let rows: Vec<_> = u
            .basis_vectors()
            .iter()
            .map(|v| self.gram.transpose().mul_vec(v))
            .collect();
        Matrix::from_rows_with_cols(rows, self.dim()).kernel()
    }

    /// Orthogonal complement; requires a nondegenerate form.
    pub fn orthogonal_complement(&self, u: &Subspace) -> Result<Subspace> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        if !self.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        Ok(self.perp_unchecked(u))
    }

    /// Orthogonal direct sum with another form.
    pub fn direct_sum(&self, other: &BilinearForm) -> BilinearForm {
        let (a, b) = (self.dim(), other.dim());
        BilinearForm {
            gram: Matrix::from_fn(a + b, a + b, |i, j| {
                if i < a && j < a {
                    self.gram[(i, j)].clone()
                } else if i >= a && j >= a {
                    other.gram[(i - a, j - a)].clone()
                } else {
                    Scalar::zero()
                }
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn hyperbolic_plane() {
        let h = BilinearForm::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(h.is_nondegenerate());
        let line = Subspace::coordinate(2, [0]);
        assert!(!h.is_nondegenerate_on(&line));
        assert_eq!(h.orthogonal_complement(&line).unwrap(), line);
        assert_eq!(h.eval(&[int(1), int(2)], &[int(3), int(5)]), int(11));
    }

    #[test]
    fn rejects_asymmetric_and_degenerate() {
        assert!(BilinearForm::new(Matrix::from_i64(&[&[0, 1], &[0, 0]])).is_err());
        let z = BilinearForm::zero(2);
        assert!(z.is_zero() && !z.is_nondegenerate());
        let s = BilinearForm::identity(1).direct_sum(&BilinearForm::identity(2).scale(&int(3)));
        assert_eq!(s.at(2, 2), &int(3));
        assert_eq!(s.dim(), 3);
    }
}
