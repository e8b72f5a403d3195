use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde_json::{json, Value};

use super::linalg::solve_unique;
use super::{classify, FormClass};
use crate::arith::Cyc12;
use crate::blocks::{build_e4, build_e6, build_phi01, build_phim21, JacobiForm};
use crate::error::{Error, Result};
use crate::qseries::{QSeries, RLaurent};

/// Polynomial in E4, E6: exponents (alpha, beta) to coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModularPoly {
    pub terms: BTreeMap<(u32, u32), Cyc12>,
}

impl ModularPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let t: Vec<Value> = self
            .terms
            .iter()
            .map(|((a, b), c)| json!({"E4": a, "E6": b, "c": c.to_strings()}))
            .collect();
        Value::Array(t)
    }
}

/// phi = sum_i f_i(E4, E6) phi_{-2,1}^i phi_{0,1}^(t - i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakDecomposition {
    pub weight2: i64,
    pub index: i64,
    pub parts: BTreeMap<i64, ModularPoly>,
}

impl WeakDecomposition {
    /// Rebuilds the series to the given precision.
    pub fn recombine(&self, prec24: i64) -> QSeries {
        let gens = Generators::new(prec24);
        let mut acc = QSeries::zero(prec24);
        for (i, poly) in &self.parts {
            for ((a, b), c) in &poly.terms {
                let f = gens.monomial(*a, *b, *i, self.index - i);
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        let parts: Vec<Value> = self
            .parts
            .iter()
            .map(|(i, p)| json!({"i": i, "f": p.to_json()}))
            .collect();
        json!({"weight2": self.weight2, "index": self.index, "parts": parts})
    }
}

struct Generators {
    prec: i64,
    e4: QSeries,
    e6: QSeries,
    m21: QSeries,
    p01: QSeries,
}

impl Generators {
    fn new(prec: i64) -> Self {
        Generators {
            prec,
            e4: build_e4(prec).series,
            e6: build_e6(prec).series,
            m21: build_phim21(prec).series,
            p01: build_phi01(prec).series,
        }
    }

    fn monomial(&self, a: u32, b: u32, i: i64, j: i64) -> QSeries {
        let p = |s: &QSeries, e: i64| s.pow(e).expect("nonnegative power");
        p(&self.e4, a.into())
            .mul(&p(&self.e6, b.into()))
            .mul(&p(&self.m21, i))
            .mul(&p(&self.p01, j))
            .truncate(self.prec)
    }
}

/// (i, alpha, beta) with 4 alpha + 6 beta = weight + 2i.
fn basis(weight: i64, index: i64) -> Vec<(i64, u32, u32)> {
    let mut out = Vec::new();
    for i in 0..=index {
        let w = weight + 2 * i;
        if w < 0 {
            continue;
        }
        for b in 0..=(w / 6) {
            let rest = w - 6 * b;
            if rest % 4 == 0 {
                out.push((i, (rest / 4) as u32, b as u32));
            }
        }
    }
    out
}

fn check_trivial_character(phi: &JacobiForm) -> Result<(i64, i64)> {
    if phi.weight2 % 4 != 0 || phi.index2 % 2 != 0 || phi.eta_exp != 0 || phi.h_exp != 0 {
        return Err(Error::InvalidArgument(format!(
            "not a weak Jacobi form of even weight and integral index with trivial character: {}",
            phi.label
        )));
    }
    Ok((phi.weight2 / 2, phi.index2 / 2))
}

fn positions(series: &[&QSeries]) -> Vec<(i64, i64)> {
    let mut set = BTreeSet::new();
    for s in series {
        for (n, l, _) in s.terms() {
            set.insert((n, l));
        }
    }
    set.into_iter().collect()
}

/// Expresses a weak form in the E4, E6, phi_{-2,1}, phi_{0,1} basis by an
/// exact linear solve over every coefficient below the input precision.
pub fn decompose_weak(phi: &JacobiForm) -> Result<WeakDecomposition> {
    let (weight, index) = check_trivial_character(phi)?;
    if !matches!(
        classify(phi).class,
        FormClass::Weak | FormClass::Holomorphic | FormClass::Cusp
    ) {
        return Err(Error::InvalidArgument(format!("{} has negative q-order", phi.label)));
    }
    let basis = basis(weight, index);
    let need = 24 * (basis.len() as i64 + 8);
    if phi.prec24() < need {
        return Err(Error::InsufficientPrecision(format!(
            "decomposition with {} unknowns needs prec24 >= {need}, got {}",
            basis.len(),
            phi.prec24()
        )));
    }
    let prec = phi.prec24();
    let gens = Generators::new(prec);
    let cols: Vec<QSeries> = basis
        .iter()
        .map(|&(i, a, b)| gens.monomial(a, b, i, index - i))
        .collect();
    let mut all: Vec<&QSeries> = cols.iter().collect();
    all.push(&phi.series);
    let pos = positions(&all);
    let rows: Vec<Vec<Cyc12>> = pos
        .iter()
        .map(|&(n, l)| cols.iter().map(|c| c.coeff(n, l).unwrap()).collect())
        .collect();
    let rhs: Vec<Cyc12> = pos.iter().map(|&(n, l)| phi.series.coeff(n, l).unwrap()).collect();
    let x = solve_unique(rows, rhs, basis.len()).map_err(|e| {
        Error::InvalidArgument(format!(
            "not a weak Jacobi form of weight {weight} and index {index}: {e}"
        ))
    })?;
    let mut parts: BTreeMap<i64, ModularPoly> = BTreeMap::new();
    for ((i, a, b), c) in basis.into_iter().zip(x) {
        if !c.is_zero() {
            parts.entry(i).or_default().terms.insert((a, b), c);
        }
    }
    let dec = WeakDecomposition {
        weight2: phi.weight2,
        index,
        parts,
    };
    if !dec.recombine(prec).agrees_to_precision(&phi.series) {
        return Err(Error::InvalidArgument("decomposition residual is nonzero".into()));
    }
    Ok(dec)
}

/// The unique weak form of weight `weight` (even) and index t whose q^0
/// layer is supported on |l| <= `max_r`, with coefficient 1 at r^max_r.
pub fn weak_form_with_q0_support(weight: i64, index: i64, max_r: i64, prec24: i64) -> Result<JacobiForm> {
    if weight.is_odd() || index < 1 || max_r < 0 || max_r > index {
        return Err(Error::InvalidArgument("bad weak-form request".into()));
    }
    let basis = basis(weight, index);
    let gens = Generators::new(prec24);
    let cols: Vec<QSeries> = basis
        .iter()
        .map(|&(i, a, b)| gens.monomial(a, b, i, index - i))
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for l in max_r..=index {
        rows.push(cols.iter().map(|c| c.coeff(0, 2 * l).unwrap()).collect::<Vec<_>>());
        rhs.push(Cyc12::from_int(i64::from(l == max_r)));
    }
    let x = solve_unique(rows, rhs, basis.len())?;
    let mut acc = QSeries::zero(prec24);
    for (c, s) in x.iter().zip(&cols) {
        acc = acc.add(&s.scale(c));
    }
    Ok(JacobiForm::new(
        acc,
        2 * weight,
        2 * index,
        0,
        0,
        format!("phi({weight},{index})"),
    ))
}

/// The weak form phi_{0,5} with q^0 layer proportional to r + c + 1/r.
pub fn build_phi05(prec24: i64) -> Result<JacobiForm> {
    weak_form_with_q0_support(0, 5, 1, prec24)
}

/// Returns whether the q^0 layer of a weight-0 weak form of nonzero index
/// is nonconstant, together with that layer.
pub fn q0_nonconstant(phi: &JacobiForm) -> Result<(bool, RLaurent)> {
    if phi.weight2 != 0 {
        return Err(Error::InvalidArgument("weight must be 0".into()));
    }
    if phi.index2 == 0 {
        return Err(Error::InvalidArgument("index must be nonzero".into()));
    }
    if phi.series.ord() != Some(0) {
        return Err(Error::InvalidArgument(format!(
            "q-order is {:?}/24, expected 0",
            phi.series.ord()
        )));
    }
    let layer = phi.series.layer(0)?;
    let nonconstant = layer.iter().any(|(l, _)| *l != 0);
    Ok((nonconstant, layer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::blocks::{build_delta, build_eta};

    #[test]
    fn phi01_decomposes_trivially() {
        let d = decompose_weak(&build_phi01(24 * 10)).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert!(d.parts[&0].terms[&(0, 0)].is_one());
    }

    #[test]
    fn product_decomposition() {
        let f = build_phim21(24 * 12).mul(&build_phi01(24 * 12));
        let d = decompose_weak(&f).unwrap();
        assert_eq!(d.parts.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert!(d.parts[&1].terms[&(0, 0)].is_one());
    }

    #[test]
    fn phi05_expansion() {
        let p = build_phi05(24 * 14).unwrap();
        let five = Cyc12::from_int(5);
        let q0 = p.series.layer(0).unwrap().scale(&five);
        assert_eq!(q0, RLaurent::from_ints(&[(2, 5), (0, 2), (-2, 5)]));
        assert_eq!(p.series.coeff(24, 10).unwrap().scale(&rat(5, 1)), Cyc12::from_int(-1));
        let (nc, _) = q0_nonconstant(&p).unwrap();
        assert!(nc);
        let d = decompose_weak(&p).unwrap();
        assert_eq!(d.recombine(24 * 14), p.series);
    }

    #[test]
    fn precondition_errors() {
        assert!(decompose_weak(&build_eta(480)).is_err());
        assert!(q0_nonconstant(&JacobiForm::one()).is_err());
        assert!(q0_nonconstant(&build_delta(48)).is_err());
    }
}
