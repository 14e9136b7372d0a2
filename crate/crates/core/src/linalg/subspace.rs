use std::fmt;

use super::echelon::Echelon;
use super::matrix::Matrix;
use super::scalar::{format_scalar, unit_vector, Scalar, Vector};
use crate::error::{Error, Result};

/// A linear subspace of `K^n`, stored as its reduced row-echelon basis.
///
/// Equality is syntactic on the canonical basis, so two subspaces compare
/// equal exactly when they are the same subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
        }
    }

    pub fn span<I, V>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Scalar]>,
    {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            let v = v.as_ref();
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
            e.insert_dense(v);
            if e.is_full() {
                break;
            }
        }
        Subspace {
            ambient,
            basis: e.rref_rows(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(ambient, indices.into_iter().map(|i| unit_vector(ambient, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis_vectors(&self) -> &[Vector] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows_with_cols(self.basis.clone(), self.ambient)
    }

    /// Pivot column of each basis vector.
    pub fn pivots(&self) -> Vec<usize> {
        use num_traits::Zero;
        self.basis
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).unwrap())
            .collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient);
        for v in &self.basis {
            e.insert_dense(v);
        }
        e
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && self.echelon().contains_dense(v)
    }

    /// `other ⊆ self`
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        let e = self.echelon();
        Ok(other.basis.iter().all(|v| e.contains_dense(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::span(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()),
        ))
    }

    /// Annihilator with respect to the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let mut e = Echelon::new(self.ambient);
        for v in &self.basis {
            e.insert_dense(v);
        }
        Subspace::span(self.ambient, e.null_space())
    }

    /// `U ∩ V = ann(ann U + ann V)`
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let a = self.annihilator().sum(&other.annihilator())?;
        Ok(a.annihilator())
    }

    /// Greedy completion of `self` inside `outer`: the first basis vectors of
    /// `outer` (in canonical order) that are independent modulo `self`.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Subspace> {
        self.check(outer)?;
        let mut e = self.echelon();
        let mut chosen = Vec::new();
        for v in &outer.basis {
            if e.insert_dense(v) {
                chosen.push(v.clone());
            }
        }
        Ok(Subspace::span(self.ambient, chosen))
    }

    /// Standard basis indices completing `self` to the whole space,
    /// lexicographically first.
    pub fn standard_complement_indices(&self) -> Vec<usize> {
        let mut e = self.echelon();
        (0..self.ambient)
            .filter(|&i| e.insert_dense(&unit_vector(self.ambient, i)))
            .collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|v| {
                let cells: Vec<String> = v.iter().map(format_scalar).collect();
                format!("({})", cells.join(", "))
            })
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// Serialized as `{"ambient": n, "dim": k, "basis": [["1", "-1/2"], ...]}`.
impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let basis: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(format_scalar).collect())
            .collect();
        let mut st = s.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient", &self.ambient)?;
        st.serialize_field("dim", &self.basis.len())?;
        st.serialize_field("basis", &basis)?;
        st.end()
    }
}
