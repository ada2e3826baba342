//! Exact rational linear algebra, lattice arithmetic, polyhedral
//! projection, and certified linear programming.
//!
//! Everything downstream — cone membership, singularity, quotient
//! orders, states, sign oracles — reduces to queries answered here.
//! Outputs are canonical (fixed pivot and scan orders) so that repeated
//! runs produce identical certificates.

mod cone;
mod lattice;
mod linalg;
mod lp;

pub use cone::{
    cone_combination, generators_to_inequalities, in_generated_cone,
    inequalities_to_generators, project_cone, prune_generators, prune_inequalities, ConeDesc,
    ConeInput,
};
pub use lattice::{
    int_kernel_basis, saturation, smith_normal_form, zspan_coefficients, zspan_contains, IntMat,
    Saturation, Snf,
};
pub use linalg::{
    in_span, kernel_basis, rat, rint, row_space_basis, solve_linear, span_coefficients,
    DimMismatch, Rat, RatMat, RatVec,
};
pub use lp::{
    dual_bound_checks, farkas_refutes, lp, lp_max_certified, CertifiedMax, LinConstraint,
    LpOutcome, Rel, Strictness,
};
