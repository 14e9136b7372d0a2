//! T*-extensions and double extensions.

use num_traits::{One, Zero};

use crate::derivations::{is_derivation, is_skew};
use crate::error::{Error, Result};
use crate::forms::{BilinearForm, QuadraticAlgebra};
use crate::lie::{LieAlgebra, LieAlgebraBuilder};
use crate::linalg::{Echelon, Matrix, Scalar, Subspace, Vector};

/// A representation `ρ` of `source`, one matrix `ρ(e_i)` per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    source: LieAlgebra,
    target_dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn new(source: LieAlgebra, target_dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != source.dim() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for a {}-dimensional algebra",
                matrices.len(),
                source.dim()
            )));
        }
        if let Some(m) = matrices
            .iter()
            .find(|m| m.rows() != target_dim || m.cols() != target_dim)
        {
            return Err(Error::InvalidRepresentation(format!(
                "matrix of size {}x{} in a {target_dim}-dimensional representation",
                m.rows(),
                m.cols()
            )));
        }
        let rep = Representation {
            source,
            target_dim,
            matrices,
        };
        if let Some((i, j)) = rep.homomorphism_failure() {
            return Err(Error::InvalidRepresentation(format!(
                "ρ([e{i}, e{j}]) differs from [ρ(e{i}), ρ(e{j})]"
            )));
        }
        Ok(rep)
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `ρ(x)` for a coordinate vector `x` of the source.
    pub fn apply(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.target_dim, self.target_dim);
        for (c, r) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                m = m.add(&r.scale(c));
            }
        }
        m
    }

    fn homomorphism_failure(&self) -> Option<(usize, usize)> {
        let n = self.source.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.apply(&crate::linalg::to_dense(self.source.bracket_basis(i, j), n));
                if lhs != self.matrices[i].commutator(&self.matrices[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Basis of the symmetric forms `G` with `ρ(x)^T G + G ρ(x) = 0`.
    pub fn invariant_forms(&self) -> Vec<BilinearForm> {
        let n = self.target_dim;
        let idx = |r: usize, c: usize| {
            let (r, c) = if r <= c { (r, c) } else { (c, r) };
            r * n - r * (r + 1) / 2 + c
        };
        let unknowns = n * (n + 1) / 2;
        let mut e = Echelon::new(unknowns);
        for a in &self.matrices {
            for r in 0..n {
                for c in r..n {
                    let mut row = vec![Scalar::zero(); unknowns];
                    for m in 0..n {
                        row[idx(m, c)] += &a[(m, r)];
                        row[idx(r, m)] += &a[(m, c)];
                    }
                    e.insert_dense(&row);
                }
            }
        }
        Subspace::span(unknowns, e.null_space())
            .basis_vectors()
            .iter()
            .map(|v| {
                BilinearForm::new(Matrix::from_fn(n, n, |r, c| v[idx(r, c)].clone()))
                    .expect("symmetric by construction")
            })
            .collect()
    }
}

/// The Lie algebra spanned by linearly independent matrices closed under
/// commutators, with structure constants read off in that basis.
pub fn linear_lie_algebra(labels: Vec<String>, matrices: &[Matrix]) -> Result<LieAlgebra> {
    let k = matrices.len();
    if labels.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: labels.len(),
        });
    }
    if k == 0 {
        return Ok(LieAlgebraBuilder::new(labels).build());
    }
    let cols = Matrix::from_rows(matrices.iter().map(|m| m.flat().to_vec()).collect()).transpose();
    if cols.rank() != k {
        return Err(Error::InvalidParameter("matrices are linearly dependent".into()));
    }
    let mut b = LieAlgebraBuilder::new(labels);
    for i in 0..k {
        for j in i + 1..k {
            let c = matrices[i].commutator(&matrices[j]);
            let coords = cols.solve(c.flat()).map_err(|_| {
                Error::InvalidParameter(format!("commutator of matrices {i} and {j} leaves the span"))
            })?;
            b.add_vector(i, j, &coords);
        }
    }
    Ok(b.build())
}

/// A `g*`-valued 2-form on `g`: `values[i][j]` is `ω(e_i, e_j)` in dual coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    dim: usize,
    values: Vec<Vec<Vector>>,
}

impl Cocycle2 {
    pub fn zero(dim: usize) -> Self {
        Cocycle2 {
            dim,
            values: vec![vec![vec![Scalar::zero(); dim]; dim]; dim],
        }
    }

    /// Table `values[i][j][k] = ω(e_i, e_j)(e_k)`; must be antisymmetric in `i, j`.
    pub fn new(values: Vec<Vec<Vector>>) -> Result<Self> {
        let n = values.len();
        if values.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::InvalidCocycle("table must be n x n x n".into()));
        }
        for (i, row) in values.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.iter().zip(&values[j][i]).any(|(x, y)| !(x + y).is_zero()) {
                    return Err(Error::InvalidCocycle(format!("ω(e{i}, e{j}) is not antisymmetric")));
                }
            }
        }
        Ok(Cocycle2 { dim: n, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, i: usize, j: usize) -> &Vector {
        &self.values[i][j]
    }

    /// `ω(x, y)(z) = ω(y, z)(x)`
    pub fn is_cyclic(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.values[i][j][k] == self.values[j][k][i]))
        })
    }
}

fn dual_label(label: &str) -> String {
    format!("{label}_dual")
}

/// `T*_ω(g) = g ⊕ g*` with the coadjoint action, `ω` in the dual component
/// and the hyperbolic form `q(a + β, a' + β') = β(a') + β'(a)`.
pub fn tstar_extension(l: &LieAlgebra, omega: Option<&Cocycle2>) -> Result<QuadraticAlgebra> {
    let n = l.dim();
    if let Some(w) = omega {
        if w.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: w.dim(),
            });
        }
        if !w.is_cyclic() {
            return Err(Error::InvalidCocycle("ω is not cyclic".into()));
        }
    }
    let mut labels: Vec<String> = l.labels().to_vec();
    labels.extend(l.labels().iter().map(|s| dual_label(s)));
    let mut b = LieAlgebraBuilder::new(labels);
    for i in 0..n {
        for j in i + 1..n {
            for (k, c) in l.bracket_basis(i, j) {
                b.add(i, j, *k, c.clone());
            }
            if let Some(w) = omega {
                for (k, c) in w.value(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        b.add(i, j, n + k, c.clone());
                    }
                }
            }
        }
        // [e_i, ε^k] = -sum_j c^k_ij ε^j
        for j in 0..n {
            for (k, c) in l.bracket_basis(i, j) {
                b.add(i, n + k, n + j, -c.clone());
            }
        }
    }
    let t = b.build();
    if let Some(d) = t.validate().first() {
        return Err(Error::InvalidCocycle(format!("extension is not a Lie algebra: {d}")));
    }
    let hint = l.levi_hint().map(|s| embed(s, 0, 2 * n));
    let t = t.with_levi_hint(hint);
    let t = match l.provenance() {
        Some(p) => t.with_provenance(format!("tstar({p})")),
        None => t,
    };
    let gram = Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if r + n == c || c + n == r {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    QuadraticAlgebra::new(t, BilinearForm::new(gram)?)
}

/// Subspace `s` of `K^m` placed at coordinates `offset..offset+m` of `K^total`.
fn embed(s: &Subspace, offset: usize, total: usize) -> Subspace {
    Subspace::span(
        total,
        s.basis_vectors().iter().map(|v| {
            let mut w = vec![Scalar::zero(); total];
            for (i, c) in v.iter().enumerate() {
                w[offset + i] = c.clone();
            }
            w
        }),
    )
}

/// Double extension `g ⊕ a ⊕ g*` of the quadratic `a` by `ρ : g → der_φ(a)`.
///
/// Brackets: `[b, b'] = [b, b']_g` plus the coadjoint action on `g*`,
/// `[b, x] = ρ(b)x`, and `[x, y] = [x, y]_a + sum_k φ_a(ρ(b_k)x, y) β^k`.
/// The form pairs `g` with `g*` and restricts to `φ_a` on `a`.
pub fn double_extension(
    a: &QuadraticAlgebra,
    g: &LieAlgebra,
    rho: &Representation,
) -> Result<QuadraticAlgebra> {
    let (p, q) = (g.dim(), a.dim());
    if rho.source() != g {
        return Err(Error::InvalidRepresentation("representation of a different algebra".into()));
    }
    if rho.target_dim() != q {
        return Err(Error::InvalidRepresentation(format!(
            "representation on dimension {} but a has dimension {q}",
            rho.target_dim()
        )));
    }
    let al = a.algebra();
    let phi = a.form();
    for (i, m) in rho.matrices().iter().enumerate() {
        if !is_skew(phi, m)? {
            return Err(Error::InvalidRepresentation(format!("ρ(e{i}) is not skew")));
        }
        if !is_derivation(al, m)? {
            return Err(Error::InvalidRepresentation(format!("ρ(e{i}) is not a derivation")));
        }
    }
    let n = 2 * p + q;
    let mut labels: Vec<String> = g.labels().to_vec();
    labels.extend(al.labels().iter().cloned());
    labels.extend(g.labels().iter().map(|s| dual_label(s)));
    let mut seen = std::collections::HashSet::new();
    for l in labels.iter_mut() {
        while !seen.insert(l.clone()) {
            l.push_str("_b");
        }
    }
    let (ga, gd) = (p, p + q);
    let mut b = LieAlgebraBuilder::new(labels);
    for i in 0..p {
        for j in i + 1..p {
            for (k, c) in g.bracket_basis(i, j) {
                b.add(i, j, *k, c.clone());
            }
        }
        for j in 0..p {
            for (k, c) in g.bracket_basis(i, j) {
                b.add(i, gd + k, gd + j, -c.clone());
            }
        }
        let m = &rho.matrices()[i];
        for j in 0..q {
            for r in 0..q {
                if !m[(r, j)].is_zero() {
                    b.add(i, ga + j, ga + r, m[(r, j)].clone());
                }
            }
        }
    }
    // φ_a(ρ(b_k) x, y) = (ρ(b_k)^T G)[x][y]
    let omegas: Vec<Matrix> = rho
        .matrices()
        .iter()
        .map(|m| m.transpose().mul(phi.gram()))
        .collect();
    for i in 0..q {
        for j in i + 1..q {
            for (k, c) in al.bracket_basis(i, j) {
                b.add(ga + i, ga + j, ga + k, c.clone());
            }
            for (k, w) in omegas.iter().enumerate() {
                if !w[(i, j)].is_zero() {
                    b.add(ga + i, ga + j, gd + k, w[(i, j)].clone());
                }
            }
        }
    }
    let out = b.build();
    if let Some(d) = out.validate().first() {
        return Err(Error::InvalidRepresentation(format!(
            "double extension is not a Lie algebra: {d}"
        )));
    }
    let hint = if p > 0 && g.is_simple() {
        Some(Subspace::coordinate(n, 0..p))
    } else {
        None
    };
    let out = out.with_levi_hint(hint);
    let gram = Matrix::from_fn(n, n, |r, c| {
        if (r < p && c == gd + r) || (c < p && r == gd + c) {
            Scalar::one()
        } else if (ga..gd).contains(&r) && (ga..gd).contains(&c) {
            phi.gram()[(r - ga, c - ga)].clone()
        } else {
            Scalar::zero()
        }
    });
    QuadraticAlgebra::new(out, BilinearForm::new(gram)?)
}

/// Double extension by the one-dimensional algebra acting through `δ`.
pub fn double_extension_by_derivation(a: &QuadraticAlgebra, delta: &Matrix) -> Result<QuadraticAlgebra> {
    let g = LieAlgebraBuilder::new(["d"]).build();
    let rho = Representation::new(g.clone(), a.dim(), vec![delta.clone()])?;
    double_extension(a, &g, &rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn rotation() -> Matrix {
        Matrix::from_i64(&[&[0, -1], &[1, 0]])
    }

    #[test]
    fn rotation_extension_is_d4_shape() {
        let a = QuadraticAlgebra::new(LieAlgebra::abelian(2), BilinearForm::identity(2)).unwrap();
        let d = double_extension_by_derivation(&a, &rotation()).unwrap();
        let l = d.algebra();
        assert_eq!(l.dim(), 4);
        assert_eq!(l.structure_constant(0, 1, 2), int(1));
        assert_eq!(l.structure_constant(0, 2, 1), int(-1));
        assert_eq!(l.structure_constant(1, 2, 3), int(1));
    }

    #[test]
    fn non_skew_rejected() {
        let a = QuadraticAlgebra::new(LieAlgebra::abelian(2), BilinearForm::identity(2)).unwrap();
        let err = double_extension_by_derivation(&a, &Matrix::identity(2)).unwrap_err();
        assert!(matches!(err, Error::InvalidRepresentation(_)));
    }

    #[test]
    fn non_homomorphism_rejected() {
        let mut b = LieAlgebraBuilder::new(["x", "y"]);
        b.add_int(0, 1, 1, 1);
        let g = b.build();
        let m = vec![Matrix::identity(2), Matrix::identity(2)];
        assert!(Representation::new(g, 2, m).is_err());
    }

    #[test]
    fn tstar_of_abelian_is_abelian() {
        let t = tstar_extension(&LieAlgebra::abelian(3), None).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(t.algebra().is_abelian());
    }

    #[test]
    fn non_cyclic_cocycle_rejected() {
        let mut v = vec![vec![vec![int(0); 2]; 2]; 2];
        v[0][1][0] = int(1);
        v[1][0][0] = int(-1);
        let w = Cocycle2::new(v).unwrap();
        assert!(!w.is_cyclic());
        assert!(tstar_extension(&LieAlgebra::abelian(2), Some(&w)).is_err());
    }

    #[test]
    fn linear_algebra_of_commuting_matrices() {
        let l = linear_lie_algebra(vec!["a".into()], &[Matrix::identity(2)]).unwrap();
        assert!(l.is_abelian());
    }
}
