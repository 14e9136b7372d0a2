use num_traits::Zero;
use serde::Serialize;

use super::algebra::{LieAlgebra, LieAlgebraBuilder};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, Scalar, Subspace, SparseRow};

/// Derived, lower central and upper central series, each listed until it stabilizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    /// `g^(1) = g, g^(t+1) = [g^(t), g^(t)]`
    pub derived: Vec<Subspace>,
    /// `g^1 = g, g^(t+1) = [g, g^t]`
    pub lower_central: Vec<Subspace>,
    /// `Z_0 = 0, Z_(t+1) = {x : [x, g] ⊆ Z_t}`
    pub upper_central: Vec<Subspace>,
}

impl SeriesReport {
    /// `g^t` for `t >= 1`, extended past stabilization.
    pub fn lower(&self, t: usize) -> &Subspace {
        assert!(t >= 1);
        &self.lower_central[(t - 1).min(self.lower_central.len() - 1)]
    }

    /// `Z_t` for `t >= 0`, extended past stabilization.
    pub fn upper(&self, t: usize) -> &Subspace {
        &self.upper_central[t.min(self.upper_central.len() - 1)]
    }

    pub fn derived_term(&self, t: usize) -> &Subspace {
        assert!(t >= 1);
        &self.derived[(t - 1).min(self.derived.len() - 1)]
    }
}

/// `(r, s) = (dim g², dim Z(g))`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypePair {
    pub r: usize,
    pub s: usize,
}

fn iterate_series(first: Subspace, mut step: impl FnMut(&Subspace) -> Subspace) -> Vec<Subspace> {
    let mut out = vec![first];
    loop {
        let next = step(out.last().unwrap());
        if &next == out.last().unwrap() {
            return out;
        }
        out.push(next);
    }
}

impl LieAlgebra {
    fn check_ambient(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `[U, V] = span{[u, v]}`
    pub fn product_subspace(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_ambient(u)?;
        self.check_ambient(v)?;
        Ok(self.product_unchecked(u, v))
    }

    pub(crate) fn product_unchecked(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let n = self.dim();
        let mut e = Echelon::new(n);
        let full_u = u.is_full();
        'outer: for (a, x) in u.basis_vectors().iter().enumerate() {
            for y in v.basis_vectors() {
                let w = if full_u {
                    self.bracket_basis_left(a, y)
                } else {
                    self.bracket_unchecked(x, y)
                };
                e.insert_dense(&w);
                if e.is_full() {
                    break 'outer;
                }
            }
        }
        Subspace::span(n, e.rref_rows())
    }

    pub fn derived_algebra(&self) -> Subspace {
        let g = self.full();
        self.product_unchecked(&g, &g)
    }

    /// `[g, U]`
    pub fn bracket_with_algebra(&self, u: &Subspace) -> Subspace {
        self.product_unchecked(&self.full(), u)
    }

    /// `{x : [x, U] = 0}`
    pub fn centralizer(&self, u: &Subspace) -> Result<Subspace> {
        self.check_ambient(u)?;
        let n = self.dim();
        let mut e = Echelon::new(n);
        for v in u.basis_vectors() {
            let ad = self.ad(v)?;
            for r in ad.row_vectors() {
                e.insert_dense(r);
            }
        }
        Ok(Subspace::span(n, e.null_space()))
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut e = Echelon::new(n);
        for i in 0..n {
            for r in self.ad_basis(i).row_vectors() {
                e.insert_dense(r);
            }
        }
        Subspace::span(n, e.null_space())
    }

    /// `{x : [x, g] ⊆ Z}`
    pub fn preimage_of_center_mod(&self, z: &Subspace) -> Subspace {
        let n = self.dim();
        let ann = z.annihilator();
        let mut e = Echelon::new(n);
        for i in 0..n {
            let ad = self.ad_basis(i);
            for w in ann.basis_vectors() {
                let row = ad.transpose().mul_vec(w);
                e.insert_dense(&row);
            }
        }
        Subspace::span(n, e.null_space())
    }

    pub fn series(&self) -> SeriesReport {
        let n = self.dim();
        let derived = iterate_series(self.full(), |s| self.product_unchecked(s, s));
        let lower_central = iterate_series(self.full(), |s| self.bracket_with_algebra(s));
        let upper_central = iterate_series(Subspace::zero(n), |z| self.preimage_of_center_mod(z));
        SeriesReport {
            derived,
            lower_central,
            upper_central,
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian_table()
    }

    pub fn is_solvable(&self) -> bool {
        let d = iterate_series(self.full(), |s| self.product_unchecked(s, s));
        d.last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        let l = iterate_series(self.full(), |s| self.bracket_with_algebra(s));
        l.last().unwrap().is_zero()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_algebra().is_full()
    }

    /// Lower central series of a subalgebra `S`: `S, [S,S], [S,[S,S]], ...`
    pub fn subalgebra_lower_central(&self, s: &Subspace) -> Vec<Subspace> {
        iterate_series(s.clone(), |t| self.product_unchecked(s, t))
    }

    pub fn subalgebra_derived(&self, s: &Subspace) -> Vec<Subspace> {
        iterate_series(s.clone(), |t| self.product_unchecked(t, t))
    }

    /// Upper central series of an ideal `S` viewed as an algebra: `Z_0(S) = 0`,
    /// `Z_(t+1)(S) = {x ∈ S : [x, S] ⊆ Z_t(S)}`.
    pub fn subalgebra_upper_central(&self, s: &Subspace) -> Vec<Subspace> {
        let n = self.dim();
        iterate_series(Subspace::zero(n), |z| {
            let ann = z.annihilator();
            let mut e = Echelon::new(n);
            for w in s.annihilator().basis_vectors() {
                e.insert_dense(w);
            }
            for y in s.basis_vectors() {
                let ad = self.ad(y).expect("ambient vector");
                for w in ann.basis_vectors() {
                    e.insert_dense(&ad.transpose().mul_vec(w));
                }
            }
            Subspace::span(n, e.null_space())
        })
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        self.check_ambient(u)?;
        u.contains(&self.bracket_with_algebra(u))
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        self.check_ambient(u)?;
        u.contains(&self.product_unchecked(u, u))
    }

    /// Smallest ideal containing `S`: fixed point of `U ↦ U + [g, U]`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let mut u = s.clone();
        for _ in 0..=self.dim() {
            let next = u.sum(&self.bracket_with_algebra(&u))?;
            if next == u {
                return Ok(u);
            }
            u = next;
        }
        Ok(u)
    }

    pub fn type_pair(&self) -> TypePair {
        TypePair {
            r: self.derived_algebra().dim(),
            s: self.center().dim(),
        }
    }

    /// Killing form `K(x, y) = tr(ad x ad y)`.
    pub fn killing_form(&self) -> crate::forms::BilinearForm {
        let n = self.dim();
        let ads = self.ad_matrices();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = ads[i].trace_product(&ads[j]);
                g[(j, i)] = v.clone();
                g[(i, j)] = v;
            }
        }
        crate::forms::BilinearForm::new(g).expect("Killing form is symmetric")
    }

    /// Solvable radical: the Killing-orthogonal of `g²`.
    pub fn radical(&self) -> Subspace {
        let k = self.killing_form();
        k.perp_unchecked(&self.derived_algebra())
    }

    /// Largest nilpotent ideal.
    ///
    /// Elements of the radical whose adjoint is nilpotent form the nilradical.
    /// They are cut out linearly by `tr(ad x · b) = 0` for all `b` in the
    /// associative envelope of `ad(rad)`.
    pub fn nilradical(&self) -> Subspace {
        let rad = self.radical();
        if rad.is_zero() {
            return rad;
        }
        if self.subalgebra_lower_central(&rad).last().unwrap().is_zero() {
            return rad;
        }
        let n = self.dim();
        let gens: Vec<Matrix> = rad
            .basis_vectors()
            .iter()
            .map(|v| self.ad(v).expect("ambient vector"))
            .collect();
        let envelope = associative_envelope(&gens, n);
        let mut e = Echelon::new(gens.len());
        for b in &envelope {
            let row: Vec<Scalar> = gens.iter().map(|g| g.trace_product(b)).collect();
            e.insert_dense(&row);
        }
        let coeffs = e.null_space();
        let vectors = coeffs.iter().map(|c| {
            let mut v = vec![Scalar::zero(); n];
            for (ci, r) in c.iter().zip(rad.basis_vectors()) {
                crate::linalg::scalar::axpy(&mut v, ci, r);
            }
            v
        });
        Subspace::span(n, vectors)
    }

    /// `J(g) = [g, rad g]`
    pub fn jacobson_radical(&self) -> Subspace {
        self.bracket_with_algebra(&self.radical())
    }

    pub fn is_semisimple(&self) -> bool {
        self.killing_form().is_nondegenerate()
    }

    /// Linear maps commuting with every `ad x`, as a subspace of flattened `n x n` matrices.
    pub fn centroid(&self) -> Vec<Matrix> {
        let n = self.dim();
        let ads = self.ad_matrices();
        let mut e = Echelon::new(n * n);
        for a in &ads {
            for r in 0..n {
                for c in 0..n {
                    let mut row: SparseRow = Vec::new();
                    // (M A)_{rc} - (A M)_{rc}
                    let mut acc: Vec<(usize, Scalar)> = Vec::new();
                    for m in 0..n {
                        if !a[(m, c)].is_zero() {
                            acc.push((r * n + m, a[(m, c)].clone()));
                        }
                        if !a[(r, m)].is_zero() {
                            acc.push((m * n + c, -a[(r, m)].clone()));
                        }
                    }
                    acc.sort_by_key(|x| x.0);
                    for (k, v) in acc {
                        match row.last_mut() {
                            Some(last) if last.0 == k => last.1 += v,
                            _ => row.push((k, v)),
                        }
                    }
                    row.retain(|x| !x.1.is_zero());
                    if !row.is_empty() {
                        e.insert(row);
                    }
                }
            }
        }
        Subspace::span(n * n, e.null_space())
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_flat(n, v))
            .collect()
    }

    /// Semisimple with one-dimensional centroid.
    pub fn is_simple(&self) -> bool {
        self.dim() > 0 && self.is_semisimple() && self.centroid().len() == 1
    }

    /// Quotient by an ideal, on the lexicographically first standard basis
    /// vectors completing the ideal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let comp = ideal.standard_complement_indices();
        let mut rows: Vec<Vec<Scalar>> = ideal.basis_vectors().to_vec();
        rows.extend(comp.iter().map(|&k| self.basis_vector(k)));
        // columns of `change` are the new basis; coordinates = change^{-1} v
        let change = Matrix::from_rows(rows).transpose();
        let inv = change.inverse()?;
        let offset = ideal.dim();
        let labels: Vec<String> = comp.iter().map(|&k| self.labels()[k].clone()).collect();
        let mut b = LieAlgebraBuilder::new(labels);
        for (a, &ka) in comp.iter().enumerate() {
            for (c, &kc) in comp.iter().enumerate().skip(a + 1) {
                let w = crate::linalg::to_dense(self.bracket_basis(ka, kc), n);
                let coords = inv.mul_vec(&w);
                b.add_vector(a, c, &coords[offset..]);
            }
        }
        Ok(b.build())
    }

    /// `L1 ⊕ L2` with `L1` on the first coordinates.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (a, c) = (self.dim(), other.dim());
        let mut labels: Vec<String> = self.labels().to_vec();
        for l in other.labels() {
            let mut name = l.clone();
            while labels.contains(&name) {
                name.push_str("_b");
            }
            labels.push(name);
        }
        let mut b = LieAlgebraBuilder::new(labels);
        for i in 0..a {
            for j in i + 1..a {
                for (k, v) in self.bracket_basis(i, j) {
                    b.add(i, j, *k, v.clone());
                }
            }
        }
        for i in 0..c {
            for j in i + 1..c {
                for (k, v) in other.bracket_basis(i, j) {
                    b.add(a + i, a + j, a + k, v.clone());
                }
            }
        }
        b.build()
    }

    /// A subalgebra as a Lie algebra in its own canonical basis, labelled `s1..sk`.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(s)? {
            return Err(Error::Precondition("subspace is not closed under the bracket".into()));
        }
        let k = s.dim();
        let basis = s.basis_vectors();
        let cols = s.basis_matrix().transpose();
        let mut b = LieAlgebraBuilder::numbered("s", k);
        for i in 0..k {
            for j in i + 1..k {
                let w = self.bracket_unchecked(&basis[i], &basis[j]);
                b.add_vector(i, j, &cols.solve(&w)?);
            }
        }
        Ok(b.build())
    }
}

/// Basis of the associative algebra generated by `gens` (products of length ≥ 1).
fn associative_envelope(gens: &[Matrix], n: usize) -> Vec<Matrix> {
    let mut e = Echelon::new(n * n);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut frontier: Vec<Matrix> = Vec::new();
    for g in gens {
        if e.insert_dense(g.flat()) {
            basis.push(g.clone());
            frontier.push(g.clone());
        }
    }
    while let Some(b) = frontier.pop() {
        if basis.len() == n * n {
            break;
        }
        for g in gens {
            let p = g.mul(&b);
            if e.insert_dense(p.flat()) {
                basis.push(p.clone());
                frontier.push(p);
            }
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{free_nilpotent, heisenberg, oscillator_d4, sl2, split_h3_extension};
    use crate::linalg::int;

    #[test]
    fn heisenberg_series() {
        let h = heisenberg(2).unwrap();
        let s = h.series();
        assert_eq!(s.lower(2).dim(), 1);
        assert!(s.lower(3).is_zero());
        assert_eq!(s.upper(1), &h.center());
        assert!(s.upper(2).is_full());
        assert!(h.is_nilpotent() && !h.is_abelian());
        assert_eq!(h.type_pair(), TypePair { r: 1, s: 1 });
    }

    #[test]
    fn sl2_is_simple() {
        let l = sl2();
        assert!(l.is_perfect() && l.is_semisimple() && l.is_simple());
        assert!(l.radical().is_zero());
        assert_eq!(l.centroid().len(), 1);
        // Killing form of sl2 in (e, f, h): K(e,f) = 4, K(h,h) = 8
        let k = l.killing_form();
        assert_eq!(k.at(0, 1), &int(4));
        assert_eq!(k.at(2, 2), &int(8));
    }

    #[test]
    fn sum_of_simples_is_not_simple() {
        let l = sl2().direct_sum(&sl2());
        assert!(l.is_semisimple());
        assert!(!l.is_simple());
        assert_eq!(l.centroid().len(), 2);
        assert_eq!(l.labels()[3], "e_b");
    }

    #[test]
    fn radicals_of_solvable_non_nilpotent() {
        let d4 = oscillator_d4();
        let l = d4.algebra();
        assert!(l.is_solvable() && !l.is_nilpotent());
        assert!(l.radical().is_full());
        assert_eq!(l.nilradical(), l.derived_algebra());
        assert_eq!(l.jacobson_radical(), l.derived_algebra());

        let s = split_h3_extension();
        assert_eq!(s.nilradical().dim(), 3);
        assert!(s.center().is_zero());
    }

    #[test]
    fn ideals_and_quotients() {
        let n = free_nilpotent(2, 3).unwrap();
        let d = n.derived_algebra();
        assert!(n.is_ideal(&d).unwrap());
        let q = n.quotient(&d).unwrap();
        assert!(q.is_abelian());
        assert_eq!(q.dim(), 2);
        let closure = n.ideal_closure(&Subspace::span(5, [n.basis_vector(0)])).unwrap();
        assert!(n.is_ideal(&closure).unwrap());
        assert_eq!(closure.dim(), 4);
        let line = Subspace::span(5, [n.basis_vector(0)]);
        assert!(!n.is_ideal(&line).unwrap());
        assert!(matches!(n.quotient(&line), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn subalgebra_in_own_basis() {
        let l = sl2();
        let borel = Subspace::coordinate(3, [0, 2]);
        let b = l.subalgebra(&borel).unwrap();
        assert_eq!(b.dim(), 2);
        assert!(b.is_valid() && b.is_solvable() && !b.is_abelian());
        assert!(l.subalgebra(&Subspace::coordinate(3, [0, 1])).is_err());
    }

    #[test]
    fn centralizer_of_center_is_everything() {
        let h = heisenberg(1).unwrap();
        assert!(h.centralizer(&h.center()).unwrap().is_full());
        assert_eq!(h.centralizer(&h.full()).unwrap(), h.center());
    }
}
