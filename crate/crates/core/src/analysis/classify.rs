use serde::Serialize;

use super::locality::{locality_report, LocalityReport};
use crate::error::{Error, Result};
use crate::forms::{
    find_quadratic_structure, pattern_report_seeded, validate_quadratic, BilinearForm,
    Metrizability, PatternReport, QuadraticAlgebra,
};
use crate::lie::{LieAlgebra, TypePair};
use crate::linalg::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// a) one-dimensional
    OneDimensional,
    /// b) simple
    Simple,
    /// c) `J` abelian, `J^⊥ = J` and `g/J` simple
    TStarOfSimple,
    /// d) solvable, `n = g²` of codimension one, `n^⊥ = Z(g)` one-dimensional inside `n²`
    SolvableDoubleExtension,
    /// e) perfect and not semisimple, `n^⊥ = Z(n) ⊆ n² ⊊ n = [g, n]`
    PerfectMixed,
    Unclassified,
}

impl Classification {
    pub fn letter(self) -> &'static str {
        match self {
            Classification::OneDimensional => "a",
            Classification::Simple => "b",
            Classification::TStarOfSimple => "c",
            Classification::SolvableDoubleExtension => "d",
            Classification::PerfectMixed => "e",
            Classification::Unclassified => "unclassified",
        }
    }
}

/// Patterns shared by all local quadratic algebras that are neither
/// one-dimensional nor simple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalPatterns {
    pub nilradical_perp_dim: usize,
    pub nilradical_differs_from_perp: bool,
    /// `0 ≠ n^⊥ ⊆ n²`
    pub perp_nonzero_inside_square: bool,
    /// every nonzero ideal contains `n^⊥`, checked on ideal closures of basis vectors
    pub perp_is_minimal_on_closures: bool,
}

fn nilradical_center(l: &LieAlgebra, n: &Subspace) -> Subspace {
    l.centralizer(n)
        .expect("ambient")
        .intersect(n)
        .expect("ambient")
}

/// Assigns the local quadratic shape. Requires `q` to be local.
pub fn classify_local_quadratic(q: &QuadraticAlgebra) -> Result<Classification> {
    let l = q.algebra();
    if !locality_report(l).local {
        return Err(Error::Precondition("algebra is not local".into()));
    }
    Ok(classify_unchecked(q))
}

fn classify_unchecked(q: &QuadraticAlgebra) -> Classification {
    let l = q.algebra();
    let dim = l.dim();
    if dim == 1 {
        return Classification::OneDimensional;
    }
    if l.is_simple() {
        return Classification::Simple;
    }
    let j = l.jacobson_radical();
    if !j.is_zero()
        && 2 * j.dim() == dim
        && q.perp(&j) == j
        && l.product_unchecked(&j, &j).is_zero()
        && l.quotient(&j).map(|s| s.is_simple()).unwrap_or(false)
    {
        return Classification::TStarOfSimple;
    }
    let n = l.nilradical();
    let n_perp = q.perp(&n);
    let n2 = l.product_unchecked(&n, &n);
    if l.is_solvable() {
        let derived = l.derived_algebra();
        let center = l.center();
        if n == derived
            && n.dim() + 1 == dim
            && n_perp == center
            && center.dim() == 1
            && n2.contains(&center).unwrap_or(false)
        {
            return Classification::SolvableDoubleExtension;
        }
        return Classification::Unclassified;
    }
    if l.is_perfect() && !l.is_semisimple() {
        let zn = nilradical_center(l, &n);
        if n_perp == zn
            && n2.contains(&zn).unwrap_or(false)
            && n2 != n
            && l.bracket_with_algebra(&n) == n
        {
            return Classification::PerfectMixed;
        }
    }
    Classification::Unclassified
}

pub fn local_patterns(q: &QuadraticAlgebra) -> LocalPatterns {
    let l = q.algebra();
    let n = l.nilradical();
    let perp = q.perp(&n);
    let n2 = l.product_unchecked(&n, &n);
    let minimal = (0..l.dim()).all(|i| {
        let c = l
            .ideal_closure(&Subspace::coordinate(l.dim(), [i]))
            .expect("ambient");
        c.is_zero() || c.contains(&perp).unwrap_or(false)
    });
    LocalPatterns {
        nilradical_perp_dim: perp.dim(),
        nilradical_differs_from_perp: n != perp,
        perp_nonzero_inside_square: !perp.is_zero() && n2.contains(&perp).unwrap_or(false),
        perp_is_minimal_on_closures: minimal,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum QuadraticStatus {
    /// The supplied form passes all checks.
    Given,
    /// A form was found by the solver.
    Witnessed,
    NotQuadratic { certificate: String },
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    pub algebra: usize,
    pub derived: usize,
    pub center: usize,
    pub radical: usize,
    pub nilradical: usize,
    pub jacobson: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub solvable: bool,
    pub nilpotent: bool,
    pub abelian: bool,
    pub perfect: bool,
    pub semisimple: bool,
    pub simple: bool,
    pub reduced: bool,
    pub local: bool,
    pub quadratic_witnessed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub labels: Vec<String>,
    pub dims: Dimensions,
    pub predicates: Predicates,
    pub type_pair: TypePair,
    pub quadratic: QuadraticStatus,
    /// Diagnostics of a supplied form that failed validation.
    pub form_diagnostics: Vec<String>,
    pub locality: LocalityReport,
    pub classification: Option<Classification>,
    pub local_patterns: Option<LocalPatterns>,
    pub patterns: Option<PatternReport>,
}

impl AnalysisReport {
    pub fn classification_letter(&self) -> Option<&'static str> {
        self.classification.map(Classification::letter)
    }
}

/// Full report. A supplied form is used when it is quadratic; otherwise the
/// metrizability solver runs.
pub fn analyze(l: &LieAlgebra, form: Option<&BilinearForm>, seed: u64) -> AnalysisReport {
    let mut form_diagnostics = Vec::new();
    let mut quadratic = None;
    let mut status = None;
    if let Some(f) = form {
        let diags = validate_quadratic(l, f);
        if diags.is_empty() {
            quadratic = QuadraticAlgebra::new(l.clone(), f.clone()).ok();
            status = Some(QuadraticStatus::Given);
        } else {
            form_diagnostics = diags.iter().map(ToString::to_string).collect();
        }
    }
    if status.is_none() {
        match find_quadratic_structure(l, seed) {
            Metrizability::Quadratic { algebra, .. } => {
                quadratic = Some(algebra);
                status = Some(QuadraticStatus::Witnessed);
            }
            Metrizability::NotQuadratic(c) => {
                status = Some(QuadraticStatus::NotQuadratic {
                    certificate: c.to_string(),
                })
            }
            Metrizability::Undecided { .. } => status = Some(QuadraticStatus::Undecided),
        }
    }
    let derived = l.derived_algebra();
    let center = l.center();
    let locality = locality_report(l);
    let (classification, local_patterns) = match &quadratic {
        Some(q) if locality.local => {
            let c = classify_unchecked(q);
            let p = (l.dim() > 1 && !l.is_simple()).then(|| local_patterns(q));
            (Some(c), p)
        }
        _ => (None, None),
    };
    AnalysisReport {
        labels: l.labels().to_vec(),
        dims: Dimensions {
            algebra: l.dim(),
            derived: derived.dim(),
            center: center.dim(),
            radical: l.radical().dim(),
            nilradical: l.nilradical().dim(),
            jacobson: l.jacobson_radical().dim(),
        },
        predicates: Predicates {
            solvable: l.is_solvable(),
            nilpotent: l.is_nilpotent(),
            abelian: l.is_abelian(),
            perfect: l.is_perfect(),
            semisimple: l.is_semisimple(),
            simple: l.is_simple(),
            reduced: derived.contains(&center).unwrap_or(false),
            local: locality.local,
            quadratic_witnessed: quadratic.is_some(),
        },
        type_pair: l.type_pair(),
        quadratic: status.expect("status set"),
        form_diagnostics,
        locality,
        classification,
        local_patterns,
        patterns: quadratic.as_ref().map(|q| pattern_report_seeded(q, seed)),
    }
}

impl std::fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = &self.dims;
        let p = &self.predicates;
        writeln!(f, "dim {}", d.algebra)?;
        writeln!(
            f,
            "dims: derived {}, center {}, radical {}, nilradical {}, jacobson {}",
            d.derived, d.center, d.radical, d.nilradical, d.jacobson
        )?;
        writeln!(f, "type pair (r,s) = ({},{})", self.type_pair.r, self.type_pair.s)?;
        let flags = [
            ("solvable", p.solvable),
            ("nilpotent", p.nilpotent),
            ("abelian", p.abelian),
            ("perfect", p.perfect),
            ("semisimple", p.semisimple),
            ("simple", p.simple),
            ("reduced", p.reduced),
            ("local", p.local),
        ];
        for (name, value) in flags {
            writeln!(f, "{name}: {}", if value { "yes" } else { "no" })?;
        }
        match &self.quadratic {
            QuadraticStatus::Given => writeln!(f, "quadratic: supplied form verified")?,
            QuadraticStatus::Witnessed => writeln!(f, "quadratic: witnessed")?,
            QuadraticStatus::NotQuadratic { certificate } => {
                writeln!(f, "quadratic: not quadratic (certificate: {certificate})")?
            }
            QuadraticStatus::Undecided => writeln!(f, "quadratic: undecided")?,
        }
        for diag in &self.form_diagnostics {
            writeln!(f, "supplied form rejected: {diag}")?;
        }
        if let Some(c) = &self.locality.levi_check {
            writeln!(
                f,
                "levi check: complement {}, simple factor {}, x-bound condition {}, literal condition {}, agrees with J = n: {}",
                c.complement,
                c.levi_simple_or_one_dim,
                c.x_bound_condition,
                c.literal_condition,
                c.agrees_with_radical_test
            )?;
        }
        if let Some(c) = self.classification {
            writeln!(f, "classification: {}", c.letter())?;
        }
        if let Some(pat) = &self.patterns {
            writeln!(
                f,
                "patterns: (g^2)^perp = Z {}, dim g = dim g^2 + dim Z {}, dim g = dim (g^2)^perp + dim Z {}",
                pat.perp_of_derived_is_center, pat.dim_is_derived_plus_center, pat.dim_is_perp_plus_center
            )?;
            writeln!(
                f,
                "split: reduced part dim {}, abelian part dim {}",
                pat.reduced_part.dim(),
                pat.abelian_part.dim()
            )?;
            match &pat.witness_ideal {
                Some(w) => writeln!(f, "decomposable: witness ideal of dim {}", w.dim())?,
                None => writeln!(f, "decomposable: no witness found")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{abelian_quadratic, heisenberg, n23_quadratic, oscillator_d4, sl2_killing};

    #[test]
    fn shapes() {
        let c = |q: &QuadraticAlgebra| classify_local_quadratic(q).unwrap().letter();
        assert_eq!(c(&abelian_quadratic(1)), "a");
        assert_eq!(c(&sl2_killing()), "b");
        assert_eq!(c(&oscillator_d4()), "d");
        assert!(classify_local_quadratic(&n23_quadratic()).is_err());
    }

    #[test]
    fn d4_local_patterns() {
        let p = local_patterns(&oscillator_d4());
        assert_eq!(p.nilradical_perp_dim, 1);
        assert!(p.nilradical_differs_from_perp);
        assert!(p.perp_nonzero_inside_square && p.perp_is_minimal_on_closures);
    }

    #[test]
    fn report_status() {
        let h = heisenberg(1).unwrap();
        let r = analyze(&h, None, 0);
        assert!(matches!(r.quadratic, QuadraticStatus::NotQuadratic { .. }));
        assert_eq!(r.classification_letter(), None);
        // a wrong form is reported and replaced by a solver witness
        let q = oscillator_d4();
        let r = analyze(q.algebra(), Some(&BilinearForm::identity(4)), 0);
        assert!(!r.form_diagnostics.is_empty());
        assert_eq!(r.quadratic, QuadraticStatus::Witnessed);
        assert_eq!(r.classification_letter(), Some("d"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["quadratic"]["status"], "witnessed");
    }
}
