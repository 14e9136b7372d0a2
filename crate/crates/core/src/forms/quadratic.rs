use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::form::BilinearForm;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::pencil::{pencil_nonzero_test, PencilVerdict, ZeroProof};
use crate::linalg::{Echelon, Matrix, Scalar, SparseRow, Subspace};

/// A Lie algebra together with a symmetric, invariant, nondegenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    algebra: LieAlgebra,
    form: BilinearForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormDiagnostic {
    DimensionMismatch { algebra: usize, form: usize },
    NotSymmetric,
    NotInvariant { i: usize, j: usize, k: usize },
    Degenerate,
}

impl fmt::Display for FormDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormDiagnostic::DimensionMismatch { algebra, form } => {
                write!(f, "form has size {form} but algebra has dimension {algebra}")
            }
            FormDiagnostic::NotSymmetric => write!(f, "form is not symmetric"),
            FormDiagnostic::NotInvariant { i, j, k } => {
                write!(f, "invariance fails on basis triple ({i}, {j}, {k})")
            }
            FormDiagnostic::Degenerate => write!(f, "form is degenerate"),
        }
    }
}

/// First basis triple with `φ([e_i, e_j], e_k) != φ(e_i, [e_j, e_k])`.
fn first_invariance_failure(l: &LieAlgebra, phi: &BilinearForm) -> Option<(usize, usize, usize)> {
    let n = l.dim();
    let g = phi.gram();
    let pair = |v: &crate::lie::Sparse, k: usize, left: bool| -> Scalar {
        v.iter().fold(Scalar::zero(), |acc, (m, c)| {
            let entry = if left { &g[(*m, k)] } else { &g[(k, *m)] };
            acc + c * entry
        })
    };
    for i in 0..n {
        for j in 0..n {
            let ij = l.bracket_basis(i, j);
            for k in 0..n {
                let lhs = pair(ij, k, true);
                let rhs = pair(l.bracket_basis(j, k), i, false);
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// `φ([x,y],z) = φ(x,[y,z])` on all basis triples.
pub fn is_invariant(l: &LieAlgebra, phi: &BilinearForm) -> bool {
    phi.dim() == l.dim() && first_invariance_failure(l, phi).is_none()
}

pub fn validate_quadratic(l: &LieAlgebra, phi: &BilinearForm) -> Vec<FormDiagnostic> {
    if phi.dim() != l.dim() {
        return vec![FormDiagnostic::DimensionMismatch {
            algebra: l.dim(),
            form: phi.dim(),
        }];
    }
    let mut out = Vec::new();
    if !phi.gram().is_symmetric() {
        out.push(FormDiagnostic::NotSymmetric);
    }
    if let Some((i, j, k)) = first_invariance_failure(l, phi) {
        out.push(FormDiagnostic::NotInvariant { i, j, k });
    }
    if !phi.is_nondegenerate() {
        out.push(FormDiagnostic::Degenerate);
    }
    out
}

impl QuadraticAlgebra {
    pub fn new(algebra: LieAlgebra, form: BilinearForm) -> Result<Self> {
        let diags = validate_quadratic(&algebra, &form);
        if !diags.is_empty() {
            let msg: Vec<String> = diags.iter().map(ToString::to_string).collect();
            return Err(Error::NotQuadratic(msg.join("; ")));
        }
        Ok(QuadraticAlgebra { algebra, form })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn into_parts(self) -> (LieAlgebra, BilinearForm) {
        (self.algebra, self.form)
    }

    pub fn map_algebra(self, f: impl FnOnce(LieAlgebra) -> LieAlgebra) -> Self {
        QuadraticAlgebra {
            algebra: f(self.algebra),
            form: self.form,
        }
    }

    /// `U^⊥`
    pub fn perp(&self, u: &Subspace) -> Subspace {
        self.form.perp_unchecked(u)
    }

    /// Orthogonal direct sum as ideals.
    pub fn direct_sum(&self, other: &QuadraticAlgebra) -> QuadraticAlgebra {
        QuadraticAlgebra {
            algebra: self.algebra.direct_sum(&other.algebra),
            form: self.form.direct_sum(&other.form),
        }
    }
}

fn sym_index(n: usize, r: usize, c: usize) -> usize {
    let (r, c) = if r <= c { (r, c) } else { (c, r) };
    r * n - r * (r + 1) / 2 + c
}

fn push_merged(row: &mut Vec<(usize, Scalar)>) -> SparseRow {
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (k, v) in row.drain(..) {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 += v,
            _ => out.push((k, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// Basis of the space of invariant symmetric bilinear forms: symmetric `G`
/// with `ad(e_i)^T G + G ad(e_i) = 0` for every `i`.
pub fn invariant_forms(l: &LieAlgebra) -> Vec<BilinearForm> {
    let n = l.dim();
    let unknowns = n * (n + 1) / 2;
    let mut e = Echelon::new(unknowns);
    for i in 0..n {
        let a = l.ad_basis(i);
        for r in 0..n {
            for c in r..n {
                let mut row: Vec<(usize, Scalar)> = Vec::new();
                for m in 0..n {
                    if !a[(m, r)].is_zero() {
                        row.push((sym_index(n, m, c), a[(m, r)].clone()));
                    }
                    if !a[(m, c)].is_zero() {
                        row.push((sym_index(n, r, m), a[(m, c)].clone()));
                    }
                }
                let row = push_merged(&mut row);
                if !row.is_empty() {
                    e.insert(row);
                }
            }
        }
    }
    let space = Subspace::span(unknowns, e.null_space());
    space
        .basis_vectors()
        .iter()
        .map(|v| {
            let g = Matrix::from_fn(n, n, |r, c| v[sym_index(n, r, c)].clone());
            BilinearForm::new(g).expect("symmetric by construction")
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateReason {
    /// Only the zero form is invariant.
    NoInvariantForms,
    /// `det(sum t_i G_i)` vanishes identically on the invariant-form space.
    PencilIdenticallyZero(ZeroProof),
    /// A quadratic algebra satisfies `dim g = dim g² + dim Z(g)`.
    DimensionIdentityFails {
        dim: usize,
        derived: usize,
        center: usize,
    },
    /// Nonzero solvable quadratic algebras have nonzero centre.
    SolvableCentreless,
}

/// Proof that no invariant nondegenerate symmetric form exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonMetrizableCertificate {
    pub invariant_forms_dim: usize,
    pub reason: CertificateReason,
}

impl fmt::Display for NonMetrizableCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            CertificateReason::NoInvariantForms => {
                write!(f, "only the zero form is invariant")
            }
            CertificateReason::PencilIdenticallyZero(p) => write!(
                f,
                "determinant of the {}-parameter invariant form pencil vanishes identically ({})",
                self.invariant_forms_dim,
                match p {
                    ZeroProof::Symbolic => "symbolic expansion",
                    ZeroProof::ExhaustiveGrid => "exhaustive degree-bound grid",
                    ZeroProof::EmptyPencil => "empty pencil",
                }
            ),
            CertificateReason::DimensionIdentityFails {
                dim,
                derived,
                center,
            } => write!(
                f,
                "dim g = {dim} but dim g^2 + dim Z(g) = {derived} + {center}"
            ),
            CertificateReason::SolvableCentreless => {
                write!(f, "solvable and centreless")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Metrizability {
    Quadratic {
        algebra: QuadraticAlgebra,
        /// Coordinates of the found form in the `invariant_forms` basis.
        coefficients: Vec<Scalar>,
    },
    NotQuadratic(NonMetrizableCertificate),
    /// The pencil test fell back to sampling without a proof either way.
    Undecided { invariant_forms_dim: usize },
}

impl Metrizability {
    pub fn quadratic(&self) -> Option<&QuadraticAlgebra> {
        match self {
            Metrizability::Quadratic { algebra, .. } => Some(algebra),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&NonMetrizableCertificate> {
        match self {
            Metrizability::NotQuadratic(c) => Some(c),
            _ => None,
        }
    }
}

/// Decides whether `l` carries an invariant nondegenerate symmetric form.
pub fn find_quadratic_structure(l: &LieAlgebra, seed: u64) -> Metrizability {
    let forms = invariant_forms(l);
    let m = forms.len();
    if l.dim() == 0 {
        return Metrizability::Quadratic {
            algebra: QuadraticAlgebra::new(l.clone(), BilinearForm::zero(0)).expect("empty"),
            coefficients: Vec::new(),
        };
    }
    if m == 0 {
        return Metrizability::NotQuadratic(NonMetrizableCertificate {
            invariant_forms_dim: 0,
            reason: CertificateReason::NoInvariantForms,
        });
    }
    let grams: Vec<Matrix> = forms.iter().map(|f| f.gram().clone()).collect();
    let verdict = pencil_nonzero_test(&grams, seed).expect("uniform pencil");
    match verdict {
        PencilVerdict::NonzeroWitness { point, .. } => {
            let gram = crate::linalg::pencil::eval_pencil(&grams, &point);
            let form = BilinearForm::new(gram).expect("symmetric");
            let algebra = QuadraticAlgebra::new(l.clone(), form)
                .expect("invariant nondegenerate by construction");
            Metrizability::Quadratic {
                algebra,
                coefficients: point,
            }
        }
        PencilVerdict::IdenticallyZero(proof) => {
            Metrizability::NotQuadratic(NonMetrizableCertificate {
                invariant_forms_dim: m,
                reason: CertificateReason::PencilIdenticallyZero(proof),
            })
        }
        PencilVerdict::Undecided { .. } => {
            let tp = l.type_pair();
            if tp.r + tp.s != l.dim() {
                return Metrizability::NotQuadratic(NonMetrizableCertificate {
                    invariant_forms_dim: m,
                    reason: CertificateReason::DimensionIdentityFails {
                        dim: l.dim(),
                        derived: tp.r,
                        center: tp.s,
                    },
                });
            }
            if tp.s == 0 && l.is_solvable() {
                return Metrizability::NotQuadratic(NonMetrizableCertificate {
                    invariant_forms_dim: m,
                    reason: CertificateReason::SolvableCentreless,
                });
            }
            Metrizability::Undecided {
                invariant_forms_dim: m,
            }
        }
    }
}
