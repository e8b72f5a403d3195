//! Exact arithmetic for Jacobi forms with eta multipliers, their Hecke
//! operators and arithmetic lifts, and the paramodular group identities that
//! underlie the lift.

pub mod arith;
pub mod blocks;
pub mod error;
pub mod genus;
pub mod jacobi;
pub mod lift;
pub mod paramod;
pub mod qseries;
pub mod verify;

pub use arith::{Cyc12, Sl2Matrix};
pub use blocks::{parse_block, JacobiForm};
pub use error::{Error, Result};
pub use lift::{lift, ParamodularForm};
pub use paramod::SpMatrix;
pub use qseries::QSeries;
