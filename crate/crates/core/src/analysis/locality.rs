use serde::Serialize;

use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

/// Cross-check against a supplied Levi factor `s` with `n` the nilradical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviCheck {
    pub levi_dim: usize,
    /// `g = s ⊕ n` as vector spaces.
    pub complement: bool,
    pub levi_simple_or_one_dim: bool,
    /// Literal set condition `n² = {x ∈ n : [y, n] ⊆ n² for all y ∈ s}`.
    pub literal_condition: bool,
    /// `n² = {x ∈ n : [s, x] ⊆ n²}`.
    pub x_bound_condition: bool,
    /// Whether `complement && levi_simple_or_one_dim && x_bound_condition`
    /// gives the same verdict as the quotient test.
    pub agrees_with_radical_test: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalityReport {
    pub local: bool,
    /// Dimension at most one, or simple: local without further tests.
    pub trivially_local: bool,
    /// `J(g) = n(g)`, necessary but not sufficient.
    pub radicals_agree: bool,
    pub jacobson_dim: usize,
    pub nilradical_dim: usize,
    pub levi_check: Option<LeviCheck>,
}

/// Exactly one maximal ideal.
///
/// Every maximal ideal contains `J(g)` and `g/J(g)` is reductive, so `g` is
/// local iff `g/J(g)` is simple or one-dimensional. This forces `J(g) = n(g)`,
/// but `J = n` alone also holds for `sl2 ⊕ sl2` and `sl2 ⊕ d4`.
pub fn is_local(l: &LieAlgebra) -> bool {
    locality_report(l).local
}

pub fn locality_report(l: &LieAlgebra) -> LocalityReport {
    let n = l.nilradical();
    let j = l.jacobson_radical();
    let trivially_local = l.dim() <= 1 || l.is_simple();
    let radicals_agree = j == n;
    let local = trivially_local
        || (radicals_agree
            && (l.dim() == j.dim() + 1
                || l.quotient(&j).map(|top| top.is_simple()).unwrap_or(false)));
    let levi_check = l.levi_hint().map(|s| levi_check(l, s, &n, local));
    LocalityReport {
        local,
        trivially_local,
        radicals_agree,
        jacobson_dim: j.dim(),
        nilradical_dim: n.dim(),
        levi_check,
    }
}

fn levi_check(l: &LieAlgebra, s: &Subspace, n: &Subspace, local: bool) -> LeviCheck {
    let dim = l.dim();
    let complement = s.dim() + n.dim() == dim && s.intersect(n).map(|i| i.is_zero()).unwrap_or(false);
    let levi_simple_or_one_dim = s.dim() == 1
        || l
            .subalgebra(s)
            .map(|sub| sub.is_simple())
            .unwrap_or(false);
    let n2 = l.product_unchecked(n, n);
    let sn = l.product_unchecked(s, n);
    let literal_condition = if n2.contains(&sn).unwrap_or(false) {
        n2 == *n
    } else {
        false
    };
    // {x ∈ n : [y, x] ∈ n² for all basis y of s}
    let mut constraints = crate::linalg::Echelon::new(dim);
    for w in n.annihilator().basis_vectors() {
        constraints.insert_dense(w);
    }
    let n2_ann = n2.annihilator();
    for y in s.basis_vectors() {
        let ad = l.ad(y).expect("ambient vector").transpose();
        for w in n2_ann.basis_vectors() {
            constraints.insert_dense(&ad.mul_vec(w));
        }
    }
    let bound = Subspace::span(dim, constraints.null_space());
    let x_bound_condition = bound == n2;
    LeviCheck {
        levi_dim: s.dim(),
        complement,
        levi_simple_or_one_dim,
        literal_condition,
        x_bound_condition,
        agrees_with_radical_test: (complement && levi_simple_or_one_dim && x_bound_condition) == local,
    }
}
