use std::collections::HashSet;

use serde::Serialize;

use super::quadratic::QuadraticAlgebra;
use crate::error::{Error, Result};
use crate::lie::TypePair;
use crate::linalg::Subspace;
use crate::sampling;

/// `Ω(I) = I^⊥` for an ideal `I`.
pub fn omega_dual(q: &QuadraticAlgebra, ideal: &Subspace) -> Result<Subspace> {
    if !q.algebra().is_ideal(ideal)? {
        return Err(Error::NotAnIdeal);
    }
    Ok(q.perp(ideal))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub duals_are_ideals: bool,
    pub involutive: bool,
    pub order_reversing: bool,
    /// `(g^{t+1})^⊥ = Z_t` for every computed `t`.
    pub central_series_dual: bool,
    /// `dim g = dim g^{t+1} + dim Z_t` for every computed `t`.
    pub central_dimensions: bool,
    pub failures: Vec<String>,
}

impl DualityReport {
    pub fn all_hold(&self) -> bool {
        self.duals_are_ideals
            && self.involutive
            && self.order_reversing
            && self.central_series_dual
            && self.central_dimensions
    }
}

pub fn duality_report(q: &QuadraticAlgebra, ideals: &[Subspace]) -> Result<DualityReport> {
    let l = q.algebra();
    let mut failures = Vec::new();
    let mut duals = Vec::with_capacity(ideals.len());
    for (idx, i) in ideals.iter().enumerate() {
        let d = omega_dual(q, i).map_err(|e| match e {
            Error::NotAnIdeal => Error::Precondition(format!("input {idx} is not an ideal")),
            other => other,
        })?;
        duals.push(d);
    }
    let mut duals_are_ideals = true;
    let mut involutive = true;
    for (idx, (i, d)) in ideals.iter().zip(&duals).enumerate() {
        if !l.is_ideal(d)? {
            duals_are_ideals = false;
            failures.push(format!("dual of input {idx} is not an ideal"));
        }
        if &q.perp(d) != i {
            involutive = false;
            failures.push(format!("double dual of input {idx} differs"));
        }
    }
    let mut order_reversing = true;
    for a in 0..ideals.len() {
        for b in 0..ideals.len() {
            if a != b && ideals[b].contains(&ideals[a])? && !duals[a].contains(&duals[b])? {
                order_reversing = false;
                failures.push(format!("inputs {a} <= {b} but duals are not reversed"));
            }
        }
    }
    let series = l.series();
    let steps = series.lower_central.len().max(series.upper_central.len()) + 1;
    let mut central_series_dual = true;
    let mut central_dimensions = true;
    for t in 0..steps {
        let lower = series.lower(t + 1);
        let upper = series.upper(t);
        if &q.perp(lower) != upper {
            central_series_dual = false;
            failures.push(format!("(g^{})^perp differs from Z_{t}", t + 1));
        }
        if lower.dim() + upper.dim() != l.dim() {
            central_dimensions = false;
            failures.push(format!("dim g^{} + dim Z_{t} != dim g", t + 1));
        }
    }
    Ok(DualityReport {
        duals_are_ideals,
        involutive,
        order_reversing,
        central_series_dual,
        central_dimensions,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternReport {
    /// `(g²)^⊥ = Z(g)`
    pub perp_of_derived_is_center: bool,
    /// `dim g = dim g² + dim Z(g)`
    pub dim_is_derived_plus_center: bool,
    /// `dim g = dim (g²)^⊥ + dim Z(g)`, i.e. `dim g = 2 dim Z` when the form is invariant.
    pub dim_is_perp_plus_center: bool,
    pub reduced_part: Subspace,
    pub abelian_part: Subspace,
    pub is_reduced: bool,
    pub is_decomposable_witnessed: bool,
    pub witness_ideal: Option<Subspace>,
    pub type_pair: TypePair,
    /// `Some(Z != 0)` when the algebra is solvable and nonzero.
    pub solvable_center_nonzero: Option<bool>,
}

pub const DEFAULT_SEED: u64 = 0;

pub fn pattern_report(q: &QuadraticAlgebra) -> PatternReport {
    pattern_report_seeded(q, DEFAULT_SEED)
}

pub fn pattern_report_seeded(q: &QuadraticAlgebra, seed: u64) -> PatternReport {
    let l = q.algebra();
    let n = l.dim();
    let derived = l.derived_algebra();
    let center = l.center();
    let perp_of_derived_is_center = q.perp(&derived) == center;
    let dim_is_derived_plus_center = n == derived.dim() + center.dim();
    let dim_is_perp_plus_center = n == q.perp(&derived).dim() + center.dim();
    let core = center.intersect(&derived).expect("same ambient");
    let abelian_part = core.complement_in(&center).expect("core inside center");
    let reduced_part = q.perp(&abelian_part);
    let witness_ideal = find_nondegenerate_proper_ideal_seeded(q, seed);
    let solvable_center_nonzero = (n > 0 && l.is_solvable()).then(|| !center.is_zero());
    PatternReport {
        perp_of_derived_is_center,
        dim_is_derived_plus_center,
        dim_is_perp_plus_center,
        reduced_part,
        is_reduced: abelian_part.is_zero(),
        abelian_part,
        is_decomposable_witnessed: witness_ideal.is_some(),
        witness_ideal,
        type_pair: l.type_pair(),
        solvable_center_nonzero,
    }
}

pub const RANDOM_CANDIDATES: usize = 200;

pub fn find_nondegenerate_proper_ideal(q: &QuadraticAlgebra) -> Option<Subspace> {
    find_nondegenerate_proper_ideal_seeded(q, DEFAULT_SEED)
}

/// Searches series terms, centre pieces, radicals and ideal closures of basis
/// and random vectors, together with their perps.
pub fn find_nondegenerate_proper_ideal_seeded(q: &QuadraticAlgebra, seed: u64) -> Option<Subspace> {
    let l = q.algebra();
    let n = l.dim();
    if n < 2 {
        return None;
    }
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut check = |s: Subspace| -> Option<Subspace> {
        if s.is_zero() || s.is_full() || !seen.insert(s.clone()) {
            return None;
        }
        let is_witness = l.is_ideal(&s).unwrap_or(false) && q.form().is_nondegenerate_on(&s);
        is_witness.then_some(s)
    };
    let mut structural = Vec::new();
    let series = l.series();
    structural.extend(series.derived.iter().cloned());
    structural.extend(series.lower_central.iter().cloned());
    structural.extend(series.upper_central.iter().cloned());
    let center = l.center();
    let derived = l.derived_algebra();
    let core = center.intersect(&derived).expect("same ambient");
    structural.push(core.complement_in(&center).expect("core inside center"));
    structural.push(core);
    structural.push(center);
    structural.push(l.radical());
    structural.push(l.nilradical());
    structural.push(l.jacobson_radical());
    for i in 0..n {
        let e = Subspace::coordinate(n, [i]);
        structural.push(l.ideal_closure(&e).expect("ambient"));
    }
    for s in structural {
        let p = q.perp(&s);
        if let Some(w) = check(s) {
            return Some(w);
        }
        if let Some(w) = check(p) {
            return Some(w);
        }
    }
    let mut rng = sampling::rng(seed);
    for _ in 0..RANDOM_CANDIDATES {
        let v = sampling::random_sparse_vector(&mut rng, n, 3);
        let s = l
            .ideal_closure(&Subspace::span(n, [v]))
            .expect("ambient");
        let p = q.perp(&s);
        if let Some(w) = check(s) {
            return Some(w);
        }
        if let Some(w) = check(p) {
            return Some(w);
        }
    }
    None
}
