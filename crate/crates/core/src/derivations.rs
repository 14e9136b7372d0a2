//! Derivations, inner derivations and φ-skew derivations as exact linear systems.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::lie::LieAlgebra;
use crate::linalg::{Echelon, Matrix, Scalar, SparseRow, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DerivationKind {
    All,
    Inner,
    Skew,
}

/// A space of derivations of a fixed algebra, with a basis of matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    dim_algebra: usize,
    basis: Vec<Matrix>,
    kind: DerivationKind,
}

impl DerivationSpace {
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn kind(&self) -> DerivationKind {
        self.kind
    }

    /// The space as a subspace of `K^{n²}` (row-major flattening).
    pub fn as_subspace(&self) -> Subspace {
        let n = self.dim_algebra;
        Subspace::span(n * n, self.basis.iter().map(|m| m.flat().to_vec()))
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rows() == self.dim_algebra
            && m.cols() == self.dim_algebra
            && self.as_subspace().contains_vector(m.flat())
    }

    /// `[d, d'] = dd' - d'd` stays in the space for all basis pairs.
    pub fn bracket_closed(&self) -> bool {
        let s = self.as_subspace();
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                if !s.contains_vector(a.commutator(b).flat()) {
                    return false;
                }
            }
        }
        true
    }

    /// `[self, other] ⊆ other`, i.e. `other` is an ideal of the Lie algebra `self`.
    pub fn has_ideal(&self, other: &DerivationSpace) -> bool {
        let s = other.as_subspace();
        self.basis
            .iter()
            .all(|a| other.basis.iter().all(|b| s.contains_vector(a.commutator(b).flat())))
    }
}

fn merge(mut row: Vec<(usize, Scalar)>) -> SparseRow {
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (k, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 += v,
            _ => out.push((k, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// Leibniz equations `D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0` in the
/// unknowns `D[r][c]` at index `r * n + c`.
fn leibniz_system(l: &LieAlgebra, e: &mut Echelon) {
    let n = l.dim();
    for i in 0..n {
        for j in i + 1..n {
            // coefficient of e_k in each side, as sparse rows over unknowns
            let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
            for (m, c) in l.bracket_basis(i, j) {
                for (k, row) in rows.iter_mut().enumerate() {
                    row.push((k * n + m, c.clone()));
                }
            }
            for m in 0..n {
                // [D e_i, e_j] = sum_m D[m][i] [e_m, e_j]
                for (k, c) in l.bracket_basis(m, j) {
                    rows[*k].push((m * n + i, -c.clone()));
                }
                for (k, c) in l.bracket_basis(i, m) {
                    rows[*k].push((m * n + j, -c.clone()));
                }
            }
            for row in rows {
                let row = merge(row);
                if !row.is_empty() {
                    e.insert(row);
                }
            }
        }
    }
}

/// `G D + D^T G = 0`, one equation per `r <= c`.
fn skew_system(g: &Matrix, e: &mut Echelon) {
    let n = g.rows();
    for r in 0..n {
        for c in r..n {
            let mut row = Vec::new();
            for m in 0..n {
                if !g[(r, m)].is_zero() {
                    row.push((m * n + c, g[(r, m)].clone()));
                }
                if !g[(m, c)].is_zero() {
                    row.push((m * n + r, g[(m, c)].clone()));
                }
            }
            let row = merge(row);
            if !row.is_empty() {
                e.insert(row);
            }
        }
    }
}

fn space_from_null(n: usize, e: &Echelon, kind: DerivationKind) -> DerivationSpace {
    let basis = Subspace::span(n * n, e.null_space())
        .basis_vectors()
        .iter()
        .map(|v| Matrix::from_flat(n, v))
        .collect();
    DerivationSpace {
        dim_algebra: n,
        basis,
        kind,
    }
}

pub fn derivations(l: &LieAlgebra) -> DerivationSpace {
    let n = l.dim();
    let mut e = Echelon::new(n * n);
    leibniz_system(l, &mut e);
    space_from_null(n, &e, DerivationKind::All)
}

/// `span{ad e_i}`; its dimension is `dim L - dim Z(L)`.
pub fn inner_derivations(l: &LieAlgebra) -> DerivationSpace {
    let n = l.dim();
    let basis = Subspace::span(n * n, l.ad_matrices().iter().map(|m| m.flat().to_vec()))
        .basis_vectors()
        .iter()
        .map(|v| Matrix::from_flat(n, v))
        .collect();
    DerivationSpace {
        dim_algebra: n,
        basis,
        kind: DerivationKind::Inner,
    }
}

/// Derivations `D` with `φ(Dx, y) + φ(x, Dy) = 0`.
pub fn skew_derivations(l: &LieAlgebra, phi: &BilinearForm) -> Result<DerivationSpace> {
    let n = l.dim();
    if phi.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: phi.dim(),
        });
    }
    if !phi.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let mut e = Echelon::new(n * n);
    skew_system(phi.gram(), &mut e);
    leibniz_system(l, &mut e);
    Ok(space_from_null(n, &e, DerivationKind::Skew))
}

fn check_size(l: &LieAlgebra, m: &Matrix) -> Result<()> {
    if m.rows() != l.dim() || m.cols() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: if m.rows() != l.dim() { m.rows() } else { m.cols() },
        });
    }
    Ok(())
}

pub fn is_derivation(l: &LieAlgebra, m: &Matrix) -> Result<bool> {
    check_size(l, m)?;
    let n = l.dim();
    let cols: Vec<_> = (0..n).map(|j| m.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let ij = crate::linalg::to_dense(l.bracket_basis(i, j), n);
            let lhs = m.mul_vec(&ij);
            let a = l.bracket_unchecked(&cols[i], &l.basis_vector(j));
            let b = l.bracket_basis_left(i, &cols[j]);
            if lhs
                .iter()
                .zip(a.iter().zip(&b))
                .any(|(x, (y, z))| *x != y + z)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `G M + M^T G = 0`
pub fn is_skew(phi: &BilinearForm, m: &Matrix) -> Result<bool> {
    let g = phi.gram();
    if m.rows() != g.rows() || m.cols() != g.rows() {
        return Err(Error::DimensionMismatch {
            expected: g.rows(),
            found: m.rows(),
        });
    }
    Ok(g.mul(m).add(&m.transpose().mul(g)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebraBuilder;
    use crate::linalg::int;

    fn d4() -> (LieAlgebra, BilinearForm) {
        let mut b = LieAlgebraBuilder::new(["x1", "x2", "x3", "z"]);
        b.add_int(0, 1, 2, 1).add_int(0, 2, 1, -1).add_int(1, 2, 3, 1);
        let g = Matrix::from_i64(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 0]]);
        (b.build(), BilinearForm::new(g).unwrap())
    }

    #[test]
    fn abelian_derivations_are_everything() {
        let l = LieAlgebra::abelian(3);
        assert_eq!(derivations(&l).dim(), 9);
        assert_eq!(inner_derivations(&l).dim(), 0);
    }

    #[test]
    fn d4_skew_equals_inner() {
        let (l, phi) = d4();
        let inner = inner_derivations(&l);
        let skew = skew_derivations(&l, &phi).unwrap();
        assert_eq!(inner.dim(), 3);
        assert_eq!(skew.as_subspace(), inner.as_subspace());
        assert!(skew.bracket_closed());
        assert!(skew.has_ideal(&inner));
    }

    #[test]
    fn identity_is_not_a_derivation_of_d4() {
        let (l, _) = d4();
        assert!(!is_derivation(&l, &Matrix::identity(4)).unwrap());
        for a in l.ad_matrices() {
            assert!(is_derivation(&l, &a).unwrap());
        }
    }

    #[test]
    fn solver_output_passes_pointwise_checks() {
        let (l, phi) = d4();
        for d in derivations(&l).basis() {
            assert!(is_derivation(&l, d).unwrap());
        }
        for d in skew_derivations(&l, &phi).unwrap().basis() {
            assert!(is_skew(&phi, d).unwrap());
        }
    }

    #[test]
    fn degenerate_form_rejected() {
        let (l, _) = d4();
        let err = skew_derivations(&l, &BilinearForm::zero(4)).unwrap_err();
        assert!(matches!(err, Error::DegenerateForm));
        let _ = int(0);
    }
}
