use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};

/// Sparse coordinates `[(k, c)]` meaning `sum c * e_k`, sorted by `k`.
pub type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional Lie algebra given by structure constants
/// `[e_i, e_j] = sum_k c^k_ij e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `products[i * dim + j]` holds `[e_i, e_j]`.
    products: Vec<Sparse>,
    levi_hint: Option<Subspace>,
    provenance: Option<String>,
}

/// Accumulates brackets while keeping the table antisymmetric.
#[derive(Clone, Debug)]
pub struct LieAlgebraBuilder {
    labels: Vec<String>,
    dense: Vec<Vec<Scalar>>,
}

impl LieAlgebraBuilder {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        LieAlgebraBuilder {
            labels,
            dense: vec![vec![Scalar::zero(); n]; n * n],
        }
    }

    /// Builder with labels `prefix1 .. prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        LieAlgebraBuilder::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `[e_i, e_j] += c * e_k` (and `[e_j, e_i] -= c * e_k`).
    pub fn add(&mut self, i: usize, j: usize, k: usize, c: Scalar) -> &mut Self {
        let n = self.dim();
        assert!(i != j || c.is_zero(), "[e_i, e_i] must vanish");
        self.dense[j * n + i][k] -= &c;
        self.dense[i * n + j][k] += c;
        self
    }

    pub fn add_int(&mut self, i: usize, j: usize, k: usize, c: i64) -> &mut Self {
        self.add(i, j, k, crate::linalg::int(c))
    }

    /// `[e_i, e_j] += v` for a dense vector `v`.
    pub fn add_vector(&mut self, i: usize, j: usize, v: &[Scalar]) -> &mut Self {
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                self.add(i, j, k, c.clone());
            }
        }
        self
    }

    pub fn build(self) -> LieAlgebra {
        let products = self
            .dense
            .iter()
            .map(|v| crate::linalg::to_sparse(v))
            .collect();
        LieAlgebra {
            labels: self.labels,
            products,
            levi_hint: None,
            provenance: None,
        }
    }
}

impl LieAlgebra {
    pub fn abelian(n: usize) -> Self {
        LieAlgebraBuilder::numbered("v", n).build()
    }

    /// Raw constructor from a full tensor `c[i][j][k]`; antisymmetry is not
    /// enforced here so that `validate` can report violations.
    pub fn from_tensor(labels: Vec<String>, c: &[Vec<Vec<Scalar>>]) -> Result<Self> {
        let n = labels.len();
        if c.len() != n || c.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: c.len(),
            });
        }
        let mut products = Vec::with_capacity(n * n);
        for row in c {
            for v in row {
                products.push(crate::linalg::to_sparse(v));
            }
        }
        Ok(LieAlgebra {
            labels,
            products,
            levi_hint: None,
            provenance: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn levi_hint(&self) -> Option<&Subspace> {
        self.levi_hint.as_ref()
    }

    pub fn with_levi_hint(mut self, s: Option<Subspace>) -> Self {
        self.levi_hint = s;
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn with_provenance(mut self, tag: impl Into<String>) -> Self {
        self.provenance = Some(tag.into());
        self
    }

    /// `[e_i, e_j]` in sparse form.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.products[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        let p = self.bracket_basis(i, j);
        p.binary_search_by_key(&k, |e| e.0)
            .map(|pos| p[pos].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    pub fn is_abelian_table(&self) -> bool {
        self.products.iter().all(Vec::is_empty)
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `[x, y]`
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = &self.products[i * n + j];
                if p.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in p {
                    out[*k] += &c * v;
                }
            }
        }
        out
    }

    /// `[e_i, y]`
    pub(crate) fn bracket_basis_left(&self, i: usize, y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, v) in &self.products[i * n + j] {
                out[*k] += yj * v;
            }
        }
        out
    }

    /// Matrix of `ad e_i`; column `j` is `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, v) in self.bracket_basis(i, j) {
                m[(*k, j)] = v.clone();
            }
        }
        m
    }

    /// Matrix of `ad x = [x, -]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, v) in self.bracket_basis(i, j) {
                    m[(*k, j)] += xi * v;
                }
            }
        }
        Ok(m)
    }

    pub fn ad_matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.ad_basis(i)).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::linalg::scalar::unit_vector(self.dim(), i)
    }

    /// Lists antisymmetry and Jacobi violations; empty means the table is a Lie algebra.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            if !self.bracket_basis(i, i).is_empty() {
                out.push(Diagnostic::Antisymmetry { i, j: i });
            }
            for j in i + 1..n {
                let a = crate::linalg::to_dense(self.bracket_basis(i, j), n);
                let b = crate::linalg::to_dense(self.bracket_basis(j, i), n);
                if a.iter().zip(&b).any(|(x, y)| !(x + y).is_zero()) {
                    out.push(Diagnostic::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let ij = crate::linalg::to_dense(self.bracket_basis(i, j), n);
                for k in j + 1..n {
                    let jk = crate::linalg::to_dense(self.bracket_basis(j, k), n);
                    let ki = crate::linalg::to_dense(self.bracket_basis(k, i), n);
                    let mut sum = self.bracket_unchecked(&ij, &self.basis_vector(k));
                    let t2 = self.bracket_unchecked(&jk, &self.basis_vector(i));
                    let t3 = self.bracket_unchecked(&ki, &self.basis_vector(j));
                    for idx in 0..n {
                        sum[idx] += &t2[idx] + &t3[idx];
                    }
                    if sum.iter().any(|x| !x.is_zero()) {
                        out.push(Diagnostic::Jacobi { i, j, k });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Same table with basis vectors permuted: new `e_p` is old `e_{perm[p]}`.
    pub fn permuted(&self, perm: &[usize]) -> LieAlgebra {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (p, &old) in perm.iter().enumerate() {
            inv[old] = p;
        }
        let labels = perm.iter().map(|&o| self.labels[o].clone()).collect::<Vec<_>>();
        let mut b = LieAlgebraBuilder::new(labels);
        for p in 0..n {
            for q in p + 1..n {
                for (k, v) in self.bracket_basis(perm[p], perm[q]) {
                    b.add(p, q, inv[*k], v.clone());
                }
            }
        }
        b.build()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Antisymmetry { i, j } => {
                write!(f, "antisymmetry fails for basis pair ({i}, {j})")
            }
            Diagnostic::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails for basis triple ({i}, {j}, {k})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn so3() -> LieAlgebra {
        let mut b = LieAlgebraBuilder::new(["x", "y", "z"]);
        b.add_int(0, 1, 2, 1).add_int(1, 2, 0, 1).add_int(2, 0, 1, 1);
        b.build()
    }

    #[test]
    fn builder_is_antisymmetric() {
        let l = so3();
        assert_eq!(l.structure_constant(1, 0, 2), int(-1));
        assert!(l.bracket_basis(0, 0).is_empty());
        assert!(l.is_valid());
    }

    #[test]
    fn ad_columns_are_brackets() {
        let l = so3();
        let ad = l.ad_basis(0);
        for j in 0..3 {
            let col = ad.column(j);
            assert_eq!(col, l.bracket(&l.basis_vector(0), &l.basis_vector(j)).unwrap());
        }
        // ad is a homomorphism
        let (a, b) = (l.ad_basis(0), l.ad_basis(1));
        assert_eq!(a.commutator(&b), l.ad_basis(2));
    }

    #[test]
    fn validate_reports_jacobi_and_antisymmetry() {
        let mut b = LieAlgebraBuilder::new(["a", "b", "c"]);
        b.add_int(0, 1, 2, 1).add_int(1, 2, 0, 1).add_int(0, 2, 0, 1);
        assert!(b.build().validate().iter().any(|d| matches!(d, Diagnostic::Jacobi { .. })));

        let zero = vec![vec![vec![int(0); 2]; 2]; 2];
        let mut c = zero.clone();
        c[0][1][0] = int(1);
        let l = LieAlgebra::from_tensor(vec!["a".into(), "b".into()], &c).unwrap();
        assert_eq!(l.validate(), vec![Diagnostic::Antisymmetry { i: 0, j: 1 }]);
        assert!(LieAlgebra::from_tensor(vec!["a".into()], &zero).is_err());
    }

    #[test]
    fn permutation_is_isomorphism() {
        let l = so3();
        let p = l.permuted(&[2, 0, 1]);
        assert!(p.is_valid());
        assert_eq!(p.labels(), ["z", "x", "y"]);
        // [x, y] = z becomes [e1, e2] = e0
        assert_eq!(p.structure_constant(1, 2, 0), int(1));
        assert_eq!(p.permuted(&[1, 2, 0]), l);
    }

    #[test]
    fn bracket_rejects_wrong_length() {
        assert!(so3().bracket(&[int(1)], &[int(1)]).is_err());
    }
}
