//! Truncated two-variable series in q^(1/24) and r^(1/2) with exact
//! coefficients in Q(zeta_12).

mod json;
mod laurent;
mod series;

pub use json::{series_from_json, series_to_json};
pub use laurent::RLaurent;
pub use series::{QSeries, EXACT};
