//! Invariant forms, metrizability and the orthogonality patterns of quadratic
//! Lie algebras.

mod form;
mod patterns;
mod quadratic;

pub use form::BilinearForm;
pub use patterns::{
    duality_report, find_nondegenerate_proper_ideal, find_nondegenerate_proper_ideal_seeded,
    omega_dual, pattern_report, pattern_report_seeded, DualityReport, PatternReport, DEFAULT_SEED,
    RANDOM_CANDIDATES,
};
pub use quadratic::{
    find_quadratic_structure, invariant_forms, is_invariant, validate_quadratic,
    CertificateReason, FormDiagnostic, Metrizability, NonMetrizableCertificate, QuadraticAlgebra,
};
