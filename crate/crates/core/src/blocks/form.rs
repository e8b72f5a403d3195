use std::fmt;

use serde::Serialize;

use crate::arith::{rat, Cyc12};
use crate::error::{Error, Result};
use crate::qseries::{series_to_json, QSeries};

/// A truncated Jacobi form expansion with its grading: weight weight2/2,
/// index index2/2 and multiplier v_eta^eta_exp x v_H^h_exp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiForm {
    pub series: QSeries,
    pub weight2: i64,
    pub index2: i64,
    pub eta_exp: u8,
    pub h_exp: u8,
    pub label: String,
}

/// Metadata without the series, for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub weight2: i64,
    pub index2: i64,
    pub eta_exp: u8,
    pub h_exp: u8,
}

impl JacobiForm {
    pub fn new(series: QSeries, weight2: i64, index2: i64, eta_exp: i64, h_exp: i64, label: impl Into<String>) -> Self {
        JacobiForm {
            series,
            weight2,
            index2,
            eta_exp: eta_exp.rem_euclid(24) as u8,
            h_exp: h_exp.rem_euclid(2) as u8,
            label: label.into(),
        }
    }

    /// The constant 1 of weight 0 and index 0.
    pub fn one() -> Self {
        JacobiForm::new(QSeries::one(), 0, 0, 0, 0, "1")
    }

    pub fn grading(&self) -> Grading {
        Grading {
            weight2: self.weight2,
            index2: self.index2,
            eta_exp: self.eta_exp,
            h_exp: self.h_exp,
        }
    }

    pub fn prec24(&self) -> i64 {
        self.series.prec24()
    }

    pub fn truncate(&self, prec24: i64) -> JacobiForm {
        JacobiForm {
            series: self.series.truncate(prec24),
            ..self.clone()
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn mul(&self, o: &JacobiForm) -> JacobiForm {
        JacobiForm::new(
            self.series.mul(&o.series),
            self.weight2 + o.weight2,
            self.index2 + o.index2,
            i64::from(self.eta_exp) + i64::from(o.eta_exp),
            i64::from(self.h_exp) + i64::from(o.h_exp),
            format!("{}*{}", self.label, o.label),
        )
    }

    pub fn div(&self, o: &JacobiForm) -> Result<JacobiForm> {
        if self.index2 < o.index2 {
            return Err(Error::IndexUnderflow(format!(
                "{} / {} has index {}/2",
                self.label,
                o.label,
                self.index2 - o.index2
            )));
        }
        Ok(JacobiForm::new(
            self.series.div(&o.series)?,
            self.weight2 - o.weight2,
            self.index2 - o.index2,
            i64::from(self.eta_exp) - i64::from(o.eta_exp),
            i64::from(self.h_exp) - i64::from(o.h_exp),
            format!("{}/({})", self.label, o.label),
        ))
    }

    pub fn pow(&self, e: u32) -> JacobiForm {
        let e64 = i64::from(e);
        JacobiForm::new(
            self.series.pow(e64).expect("nonnegative powers never divide"),
            self.weight2 * e64,
            self.index2 * e64,
            i64::from(self.eta_exp) * e64,
            i64::from(self.h_exp) * e64,
            format!("({})^{e}", self.label),
        )
    }

    pub fn scale(&self, c: &Cyc12) -> JacobiForm {
        JacobiForm {
            series: self.series.scale(c),
            ..self.clone()
        }
    }

    /// Sum of two forms of the same grading.
    pub fn add(&self, o: &JacobiForm) -> Result<JacobiForm> {
        if self.grading() != o.grading() {
            return Err(Error::InvalidArgument(format!(
                "cannot add forms of different grading: {:?} vs {:?}",
                self.grading(),
                o.grading()
            )));
        }
        Ok(JacobiForm {
            series: self.series.add(&o.series),
            label: format!("{} + {}", self.label, o.label),
            ..self.clone()
        })
    }

    /// Weight as a rational string such as `1/2` or `3`.
    pub fn weight_str(&self) -> String {
        half_str(self.weight2)
    }

    pub fn index_str(&self) -> String {
        half_str(self.index2)
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "weight2": self.weight2,
            "index2": self.index2,
            "etaExp": self.eta_exp,
            "hExp": self.h_exp,
            "series": series_to_json(&self.series),
        })
    }
}

fn half_str(x2: i64) -> String {
    let r = rat(x2, 2);
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        r.to_string()
    }
}

impl fmt::Display for JacobiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [weight {}, index {}, v_eta^{} x v_H^{}]: {}",
            self.label,
            self.weight_str(),
            self.index_str(),
            self.eta_exp,
            self.h_exp,
            self.series
        )
    }
}
