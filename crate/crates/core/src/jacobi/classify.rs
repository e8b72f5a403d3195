use num_rational::BigRational;
use serde::Serialize;

use crate::arith::rat;
use crate::blocks::JacobiForm;
use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormClass {
    Cusp,
    Holomorphic,
    Weak,
    None,
}

/// (n24, l2, normScaled) for every nonzero coefficient, with
/// normScaled = 2 index2 n24 - 6 l2^2 = 24 (4 R n - l^2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormProfile {
    pub entries: Vec<(i64, i64, i64)>,
}

/// A classification holds only below the precision it was computed at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub class: FormClass,
    pub prec24: i64,
    #[serde(skip)]
    pub profile: NormProfile,
}

pub fn norm_profile(phi: &JacobiForm) -> NormProfile {
    NormProfile {
        entries: phi
            .series
            .terms()
            .map(|(n, l, _)| (n, l, 2 * phi.index2 * n - 6 * l * l))
            .collect(),
    }
}

pub fn classify(phi: &JacobiForm) -> Classification {
    let profile = norm_profile(phi);
    let min_norm = profile.entries.iter().map(|e| e.2).min();
    let min_n = profile.entries.iter().map(|e| e.0).min();
    let class = match (min_norm, min_n) {
        (None, _) => FormClass::Cusp,
        (Some(v), _) if v > 0 => FormClass::Cusp,
        (Some(0), _) => FormClass::Holomorphic,
        (_, Some(n)) if n >= 0 => FormClass::Weak,
        _ => FormClass::None,
    };
    Classification {
        class,
        prec24: phi.prec24(),
        profile,
    }
}

/// Least q-exponent of a nonzero term.
pub fn q_order(phi: &JacobiForm) -> Result<BigRational> {
    phi.series
        .ord()
        .map(|n| rat(n, 24))
        .ok_or_else(|| invalid("q-order of the zero series"))
}

/// min((3k - 3 + m)/9, (k + m)/6) for a cusp form of weight 2k and index m.
pub fn qorder_bound(k: i64, m: i64) -> BigRational {
    rat(3 * k - 3 + m, 9).min(rat(k + m, 6))
}
