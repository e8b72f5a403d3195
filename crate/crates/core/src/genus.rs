//! Weight-3 seeds for the exceptional polarizations and their validation.

use serde::Serialize;
use serde_json::{json, Value};

use crate::blocks::{parse_block, JacobiForm};
use crate::jacobi::{classify, FormClass};
use crate::Result;

/// The exceptional polarizations.
pub const EXCEPTIONAL: [i64; 20] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 24, 30, 36];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// as listed
    Listed,
    /// a listed "permutation" written out
    Permutation,
    /// the listed index does not match t; replaced by a block of the same shape that does
    Corrected,
    /// not listed explicitly; built from the weight-3 series
    Constructed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Seed {
    pub expr: &'static str,
    /// order Q of the lift character chi_Q
    pub char_order: i64,
    pub source: Source,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ManifestRow {
    pub t: i64,
    pub seeds: &'static [Seed],
    pub annotation: Option<&'static str>,
}

const fn s(expr: &'static str, char_order: i64) -> Seed {
    Seed {
        expr,
        char_order,
        source: Source::Listed,
    }
}

const fn p(expr: &'static str) -> Seed {
    Seed {
        expr,
        char_order: 2,
        source: Source::Permutation,
    }
}

const fn fix(expr: &'static str) -> Seed {
    Seed {
        expr,
        char_order: 2,
        source: Source::Corrected,
    }
}

const fn built(expr: &'static str) -> Seed {
    Seed {
        expr,
        char_order: 2,
        source: Source::Constructed,
    }
}

const GENUS0: Option<&str> = Some("geometric genus 0 (stated, not computed)");
const GENUS1: Option<&str> = Some("geometric genus 1 (stated, not computed)");

pub const MANIFEST: [ManifestRow; 20] = [
    ManifestRow {
        t: 1,
        seeds: &[],
        annotation: GENUS0,
    },
    ManifestRow {
        t: 2,
        seeds: &[],
        annotation: GENUS0,
    },
    // first Fourier-Jacobi coefficient of the cube of Lift(eta theta)
    ManifestRow {
        t: 3,
        seeds: &[s("eta^3*theta(1)^3", 2)],
        annotation: GENUS1,
    },
    ManifestRow {
        t: 4,
        seeds: &[],
        annotation: GENUS0,
    },
    ManifestRow {
        t: 5,
        seeds: &[],
        annotation: GENUS0,
    },
    ManifestRow {
        t: 6,
        seeds: &[s("eta^3*theta(1)^2*theta(2)", 2), s("eta^5*theta(2)", 3)],
        annotation: None,
    },
    ManifestRow {
        t: 7,
        seeds: &[s("theta(1)^2*bracket(theta(1),theta(2))", 2)],
        annotation: GENUS1,
    },
    ManifestRow {
        t: 8,
        seeds: &[s("eta^2*bracket(theta(1),theta32(1))", 4)],
        annotation: None,
    },
    ManifestRow {
        t: 9,
        seeds: &[s("eta^3*theta(1)*theta(2)^2", 2)],
        annotation: None,
    },
    ManifestRow {
        t: 10,
        seeds: &[s("theta(1)*theta(2)*bracket(theta(1),theta(2))", 2)],
        annotation: None,
    },
    ManifestRow {
        t: 11,
        seeds: &[s("eta^3*theta(1)^2*theta(3)", 2)],
        annotation: None,
    },
    ManifestRow {
        t: 12,
        seeds: &[
            // cube of Lift(eta theta_2)
            s("eta^3*theta(2)^3", 2),
            s("theta(1)^2*bracket(theta(1),theta(3))", 2),
            s("eta*bracket(theta(1),theta(2))*theta32(1)", 3),
        ],
        annotation: None,
    },
    ManifestRow {
        t: 14,
        seeds: &[s("eta^3*theta(1)*theta(2)*theta(3)", 2)],
        annotation: None,
    },
    ManifestRow {
        t: 15,
        seeds: &[
            s("theta(1)*theta(3)*bracket(theta(1),theta(2))", 2),
            s("theta(1)*theta(2)*bracket(theta(1),theta(3))", 2),
            s("theta(1)^2*bracket(theta(2),theta(3))", 2),
            s("eta^2*theta32(1)*theta(2)^3", 2),
            s("eta^2*theta32(2)*theta(1)^3", 2),
            s("eta^3*theta(2)*theta32(1)^2", 3),
        ],
        annotation: None,
    },
    ManifestRow {
        t: 16,
        seeds: &[s("eta^6*theta(3)/theta(1)", 4)],
        annotation: None,
    },
    ManifestRow {
        t: 18,
        seeds: &[
            s("eta^3*theta(1)^2*theta(4)", 2),
            s("eta*theta32(1)^2*theta(2)^3", 2),
            s("theta(2)*theta(3)*bracket(theta(1),theta(2))", 2),
            p("theta(2)^2*bracket(theta(1),theta(3))"),
            p("theta(1)*theta(2)*bracket(theta(2),theta(3))"),
            s("eta^4*theta(3)*theta32(1)", 3),
        ],
        annotation: None,
    },
    ManifestRow {
        t: 20,
        seeds: &[
            built("theta(1)*theta(3)*bracket(theta(1),theta(3))"),
            built("eta^2*theta32(1)*theta(2)^2*theta(3)"),
            built("eta*theta32(1)^2*theta(1)*theta(2)*theta(3)"),
        ],
        annotation: None,
    },
    ManifestRow {
        t: 24,
        seeds: &[fix("eta^3*theta(2)^2*theta(4)"), s("eta^5*theta(4)", 3)],
        annotation: None,
    },
    ManifestRow {
        t: 30,
        seeds: &[
            s("eta^3*theta(1)*theta(2)*theta(5)", 2),
            s("eta^2*theta32(2)*theta(1)^2*theta(4)", 2),
            s("eta^2*theta32(3)*theta(1)^3", 2),
            s("eta*theta32(1)^2*theta(2)^2*theta(4)", 2),
            s("theta(3)*theta(4)*bracket(theta(1),theta(2))", 2),
            p("theta(2)*theta(4)*bracket(theta(1),theta(3))"),
            p("theta(2)*theta(3)*bracket(theta(1),theta(4))"),
            p("theta(1)*theta(4)*bracket(theta(2),theta(3))"),
            p("theta(1)*theta(3)*bracket(theta(2),theta(4))"),
            s("eta^2*bracket(theta(2),theta(4))", 3),
        ],
        annotation: None,
    },
    ManifestRow {
        t: 36,
        seeds: &[
            s("eta^3*theta(2)*theta(4)^2", 2),
            s("eta^2*theta32(3)*theta(1)*theta(2)^2", 2),
            fix("eta^2*theta32(1)*theta(1)*theta(4)^2"),
            s("theta(1)*theta(5)*bracket(theta(1),theta(3))", 2),
            p("theta(1)*theta(3)*bracket(theta(1),theta(5))"),
            p("theta(1)^2*bracket(theta(3),theta(5))"),
            s("eta^5*theta(3)*theta(4)/theta(1)", 3),
        ],
        annotation: None,
    },
];

pub fn manifest_row(t: i64) -> Option<&'static ManifestRow> {
    MANIFEST.iter().find(|r| r.t == t)
}

/// Number of order-2 seeds listed for t.
pub fn order2_count(t: i64) -> usize {
    manifest_row(t).map_or(0, |r| r.seeds.iter().filter(|s| s.char_order == 2).count())
}

fn eta_exp_matches(order: i64, eta: i64) -> bool {
    match order {
        2 => eta == 12,
        3 => eta == 8,
        4 => eta == 6 || eta == 18,
        _ => false,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeedCheck {
    pub expr: String,
    pub char_order: i64,
    pub source: Source,
    pub weight2: i64,
    pub index2: i64,
    pub eta_exp: i64,
    pub h_exp: i64,
    pub class: FormClass,
    pub failures: Vec<String>,
}

impl SeedCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Parses and validates one seed: weight 3, t = Q * index, v_eta^(24/Q),
/// v_H^t and cusp to precision.
pub fn check_seed(t: i64, seed: &Seed, prec24: i64) -> Result<(SeedCheck, JacobiForm)> {
    let phi = parse_block(seed.expr, prec24)?;
    let g = phi.grading();
    let (eta, h) = (i64::from(g.eta_exp), i64::from(g.h_exp));
    let class = classify(&phi).class;
    let mut failures = Vec::new();
    if g.weight2 != 6 {
        failures.push(format!("weight {}/2, expected 3", g.weight2));
    }
    if g.index2 * seed.char_order != 2 * t {
        failures.push(format!(
            "index {}/2 does not give t = {t} with Q = {}",
            g.index2, seed.char_order
        ));
    }
    if !eta_exp_matches(seed.char_order, eta) {
        failures.push(format!("v_eta^{eta} does not have order {}", seed.char_order));
    }
    if h != g.index2.rem_euclid(2) {
        failures.push(format!("v_H^{h} does not match the index"));
    }
    if class != FormClass::Cusp {
        failures.push(format!("classified {class:?} to precision {}", phi.prec24()));
    }
    let check = SeedCheck {
        expr: seed.expr.to_string(),
        char_order: seed.char_order,
        source: seed.source,
        weight2: g.weight2,
        index2: g.index2,
        eta_exp: eta,
        h_exp: h,
        class,
        failures,
    };
    Ok((check, phi))
}

#[derive(Clone, Debug, Serialize)]
pub struct GenusRow {
    pub t: i64,
    pub seeds: Vec<SeedCheck>,
    pub annotation: Option<&'static str>,
    pub extra_failures: Vec<String>,
}

impl GenusRow {
    pub fn ok(&self) -> bool {
        self.extra_failures.is_empty() && self.seeds.iter().all(SeedCheck::ok)
    }
}

pub fn genus_row(row: &ManifestRow, prec24: i64) -> Result<GenusRow> {
    let mut seeds = Vec::new();
    for seed in row.seeds {
        seeds.push(check_seed(row.t, seed, prec24)?.0);
    }
    let mut extra_failures = Vec::new();
    let expected = match row.t {
        15 => Some(5),
        30 => Some(9),
        36 => Some(6),
        _ => None,
    };
    if let Some(n) = expected {
        let got = order2_count(row.t);
        if got != n {
            extra_failures.push(format!("{got} order-2 seeds listed, expected {n}"));
        }
    }
    Ok(GenusRow {
        t: row.t,
        seeds,
        annotation: row.annotation,
        extra_failures,
    })
}

pub fn genus_table(prec24: i64) -> Result<Vec<GenusRow>> {
    MANIFEST.iter().map(|r| genus_row(r, prec24)).collect()
}

pub fn genus_table_json(rows: &[GenusRow]) -> Value {
    json!({
        "rows": rows,
        "ok": rows.iter().all(GenusRow::ok),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_covers_exceptional_levels() {
        let ts: Vec<i64> = MANIFEST.iter().map(|r| r.t).collect();
        assert_eq!(ts, EXCEPTIONAL);
        assert_eq!(order2_count(15), 5);
        assert_eq!(order2_count(30), 9);
        assert_eq!(order2_count(36), 6);
    }

    #[test]
    fn small_rows_validate() {
        for t in [3, 6, 8, 12, 16] {
            let row = genus_row(manifest_row(t).unwrap(), 96).unwrap();
            assert!(row.ok(), "{row:?}");
        }
    }
}
