//! Operators on Jacobi forms: products, brackets, Hecke operators,
//! classification, dimensions and the weak-form structure theorem.

mod classify;
mod dim;
mod hecke;
mod lemma12;
mod linalg;
mod ops;
mod weak;

pub use classify::{classify, norm_profile, q_order, qorder_bound, Classification, FormClass, NormProfile};
pub use dim::dim_cusp;
pub(crate) use hecke::LIFT_LEVELS;
pub use hecke::{hecke_minus, sigma_a, sigma_character};
pub use lemma12::{lemma12_cusp_predicate, CuspFamily};
pub use linalg::solve_unique;
pub use ops::{bracket, jf_mul};
pub use weak::{
    build_phi05, decompose_weak, q0_nonconstant, weak_form_with_q0_support, ModularPoly, WeakDecomposition,
};
