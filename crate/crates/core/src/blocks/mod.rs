//! Named forms and the theta-block expression language.

mod builders;
mod form;
mod parser;

pub use builders::{
    build_delta, build_e4, build_e41, build_e6, build_eta, build_phi01, build_phi101, build_phi121, build_phim21,
    build_theta, build_theta32, build_theta32_scaled, build_theta_scaled, classical_theta, theta_product_series,
};
pub use form::{Grading, JacobiForm};
pub use parser::{parse_block, BlockExpr};
