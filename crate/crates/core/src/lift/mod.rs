//! The arithmetic lift from Jacobi cusp forms to paramodular forms, stored
//! as Fourier-Jacobi layers.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{eta_char, rat, rat_pow, Cyc12, Sl2Matrix};
use crate::blocks::JacobiForm;
use crate::error::{invalid, Error, Result};
use crate::jacobi::{classify, hecke_minus, FormClass, LIFT_LEVELS};
use crate::paramod::v_h;
use crate::qseries::{series_to_json, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CharSign {
    Plus,
    Minus,
    Unknown,
}

impl CharSign {
    fn times(self, o: CharSign) -> CharSign {
        match (self, o) {
            (CharSign::Unknown, _) | (_, CharSign::Unknown) => CharSign::Unknown,
            (a, b) if a == b => CharSign::Plus,
            _ => CharSign::Minus,
        }
    }
}

/// Paramodular form of level t known through its Fourier-Jacobi layers
/// fj(m) for m <= m_max, m = class_residue mod Q, each to q-precision prec24.
/// Layer m has Jacobi index m t / Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamodularForm {
    pub t: i64,
    pub weight2: i64,
    pub q: i64,
    pub class_residue: i64,
    pub fj: BTreeMap<i64, QSeries>,
    pub m_max: i64,
    pub prec24: i64,
    pub char_sign: CharSign,
}

/// Lifts a cusp form phi with multiplier v_eta^(24/Q) x v_H^(2t/Q).
/// Layer m is m^(2-k) phi|T_-^(Q)(m) for m = class_residue mod Q.
pub fn lift(phi: &JacobiForm, q: i64, class_residue: i64, m_max: i64, prec24: i64) -> Result<ParamodularForm> {
    if !LIFT_LEVELS.contains(&q) {
        return Err(invalid(format!("Q = {q} must divide 12")));
    }
    if m_max < 1 || prec24 < 1 {
        return Err(invalid("m_max and prec24 must be positive"));
    }
    let class = class_residue.rem_euclid(q);
    if num_integer::gcd(class, q) != 1 {
        return Err(invalid(format!("class {class_residue} is not a unit mod {q}")));
    }
    if phi.weight2 % 2 != 0 {
        return Err(invalid(format!("weight {}/2 is not integral", phi.weight2)));
    }
    if i64::from(phi.eta_exp) != (24 / q) % 24 {
        return Err(Error::IncompatibleMultiplier(format!(
            "seed has v_eta^{}, Q = {q} needs v_eta^{}",
            phi.eta_exp,
            (24 / q) % 24
        )));
    }
    if (q * phi.index2) % 2 != 0 {
        return Err(Error::IncompatibleMultiplier(format!(
            "t = Q R = {q} * {}/2 is not integral",
            phi.index2
        )));
    }
    if i64::from(phi.h_exp) != phi.index2.rem_euclid(2) {
        return Err(Error::IncompatibleMultiplier(format!(
            "seed has v_H^{}, expected v_H^{}",
            phi.h_exp,
            phi.index2.rem_euclid(2)
        )));
    }
    let c = classify(phi);
    if c.class != FormClass::Cusp {
        return Err(Error::NotCusp(format!(
            "{} is {:?} to precision {}",
            phi.label, c.class, c.prec24
        )));
    }
    let k = phi.weight2 / 2;
    let mut fj = BTreeMap::new();
    for m in (1..=m_max).filter(|m| m.rem_euclid(q) == class) {
        let layer = hecke_minus(phi, m, q)?;
        if layer.prec24() < prec24 {
            return Err(Error::InsufficientPrecision(format!(
                "layer {m} known to {}/24, need {prec24}/24; raise the seed precision",
                layer.prec24()
            )));
        }
        let s = Cyc12::from(rat_pow(&rat(m, 1), 2 - k));
        fj.insert(m, layer.series.scale(&s).truncate(prec24));
    }
    Ok(ParamodularForm {
        t: q * phi.index2 / 2,
        weight2: phi.weight2,
        q,
        class_residue: class,
        fj,
        m_max,
        prec24,
        char_sign: if k % 2 == 0 { CharSign::Plus } else { CharSign::Minus },
    })
}

/// Outcome of comparing A(n, l, m) with A(m/Q, l, nQ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub pairs_checked: usize,
    pub nonzero_pairs: usize,
    /// (n24, l2, m) of every mismatch
    pub violations: Vec<(i64, i64, i64)>,
    /// pairs equal up to sign -1 (reported for odd weight)
    pub antisymmetric_pairs: usize,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl ParamodularForm {
    /// Jacobi index (doubled) of layer m.
    pub fn layer_index2(&self, m: i64) -> i64 {
        2 * m * self.t / self.q
    }

    /// Layer m as a Jacobi form with its grading.
    pub fn layer_form(&self, m: i64) -> Result<JacobiForm> {
        let s = self.layer(m)?;
        let index2 = self.layer_index2(m);
        Ok(JacobiForm::new(
            s,
            self.weight2,
            index2,
            (24 / self.q) * m,
            index2,
            format!("fj({m})"),
        ))
    }

    pub fn layer(&self, m: i64) -> Result<QSeries> {
        if m < 1 || m > self.m_max {
            return Err(invalid(format!("layer {m} outside 1..={}", self.m_max)));
        }
        Ok(self.fj.get(&m).cloned().unwrap_or_else(|| QSeries::zero(self.prec24)))
    }

    /// A(n24/24, l2/2, m); zero for m outside the class, an error beyond precision.
    pub fn fourier_coeff(&self, n24: i64, l2: i64, m: i64) -> Result<Cyc12> {
        if m < 1 || m > self.m_max {
            return Err(invalid(format!("layer {m} outside 1..={}", self.m_max)));
        }
        if n24 >= self.prec24 {
            return Err(Error::BeyondPrecision {
                n24,
                prec24: self.prec24,
            });
        }
        match self.fj.get(&m) {
            Some(s) => s.coeff(n24, l2),
            None => Ok(Cyc12::zero()),
        }
    }

    /// Compares A(n, l, m) with A(m/Q, l, nQ) on every pair inside the
    /// stored range. V_t maps (tau, z, omega) to (t omega, z, tau/t).
    pub fn maass_symmetry_check(&self) -> Result<SymmetryReport> {
        let mut rep = SymmetryReport {
            pairs_checked: 0,
            nonzero_pairs: 0,
            violations: Vec::new(),
            antisymmetric_pairs: 0,
        };
        for m in 1..=self.m_max {
            let n24_partner = 24 * m / self.q;
            if n24_partner >= self.prec24 {
                continue;
            }
            for mp in m..=self.m_max {
                let n24 = 24 * mp / self.q;
                if n24 >= self.prec24 {
                    continue;
                }
                // A(n24, ., m) against A(n24_partner, ., mp)
                let a = self.layer(m)?.layer(n24)?;
                let b = self.layer(mp)?.layer(n24_partner)?;
                let ls: BTreeSet<i64> = a.iter().chain(b.iter()).map(|(l, _)| *l).collect();
                for l in ls {
                    let (x, y) = (a.coeff(l), b.coeff(l));
                    rep.pairs_checked += 1;
                    if !x.is_zero() {
                        rep.nonzero_pairs += 1;
                    }
                    if x != y {
                        rep.violations.push((n24, l, m));
                        if x == -&y {
                            rep.antisymmetric_pairs += 1;
                        }
                    }
                }
            }
        }
        if rep.pairs_checked == 0 {
            return Err(Error::InsufficientPrecision(
                "insufficient precision for symmetry check".into(),
            ));
        }
        Ok(rep)
    }

    pub fn scale(&self, c: &Cyc12) -> ParamodularForm {
        ParamodularForm {
            fj: self.fj.iter().map(|(m, s)| (*m, s.scale(c))).collect(),
            ..self.clone()
        }
    }

    fn compatible(&self, o: &ParamodularForm) -> Result<()> {
        if self.t != o.t || self.q != o.q {
            return Err(invalid("forms live on different groups"));
        }
        Ok(())
    }

    pub fn add(&self, o: &ParamodularForm) -> Result<ParamodularForm> {
        self.compatible(o)?;
        if self.weight2 != o.weight2 || self.class_residue != o.class_residue {
            return Err(invalid("cannot add forms of different weight or class"));
        }
        let m_max = self.m_max.min(o.m_max);
        let prec24 = self.prec24.min(o.prec24);
        let mut fj = BTreeMap::new();
        for m in (1..=m_max).filter(|m| m.rem_euclid(self.q) == self.class_residue) {
            fj.insert(m, self.layer(m)?.add(&o.layer(m)?).truncate(prec24));
        }
        Ok(ParamodularForm {
            fj,
            m_max,
            prec24,
            ..self.clone()
        })
    }

    /// Product of two forms on the same group: layers convolve.
    pub fn mul(&self, o: &ParamodularForm) -> Result<ParamodularForm> {
        self.compatible(o)?;
        let m_max = self.m_max.min(o.m_max) + 1;
        let prec24 = self.prec24.min(o.prec24);
        let mut fj: BTreeMap<i64, QSeries> = BTreeMap::new();
        for (m1, a) in &self.fj {
            for (m2, b) in &o.fj {
                if m1 + m2 > m_max {
                    continue;
                }
                let p = a.mul(b).truncate(prec24);
                let slot = fj.entry(m1 + m2).or_insert_with(|| QSeries::zero(prec24));
                *slot = slot.add(&p);
            }
        }
        fj.retain(|_, s| !s.is_zero());
        Ok(ParamodularForm {
            t: self.t,
            weight2: self.weight2 + o.weight2,
            q: self.q,
            class_residue: (self.class_residue + o.class_residue).rem_euclid(self.q),
            fj,
            m_max,
            prec24,
            char_sign: self.char_sign.times(o.char_sign),
        })
    }

    pub fn to_json(&self) -> Value {
        let fj: Vec<Value> = self
            .fj
            .iter()
            .map(|(m, s)| json!({"m": m, "series": series_to_json(s)}))
            .collect();
        json!({
            "t": self.t,
            "weight2": self.weight2,
            "Q": self.q,
            "class": self.class_residue,
            "fj": fj,
        })
    }
}

/// chi_Q or chi_{Q,+-} on the extended paramodular group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterQ {
    pub t: i64,
    pub q: i64,
    pub sign: CharSign,
}

/// Elements on which chi_Q has a closed-form value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftGroupElement {
    /// i_inf(g) for g in SL2(Z)
    IInf(Sl2Matrix),
    /// [lambda, mu; kappa]
    Heisenberg(i64, i64, i64),
    /// [0, 0; kappa/t]
    Center(i64),
    Vt,
}

pub fn character_values(c: &CharacterQ, el: &LiftGroupElement) -> Result<Cyc12> {
    if !LIFT_LEVELS.contains(&c.q) || (2 * c.t) % c.q != 0 {
        return Err(invalid(format!("no character chi_{} at level {}", c.q, c.t)));
    }
    match el {
        LiftGroupElement::IInf(g) => eta_char(g, (24 / c.q) % 24),
        LiftGroupElement::Heisenberg(l, m, k) => {
            let e = 2 * c.t / c.q;
            Ok(Cyc12::from_int(if e % 2 == 0 { 1 } else { v_h(*l, *m, *k) }))
        }
        LiftGroupElement::Center(k) => Cyc12::root_of_unity(*k, c.q),
        LiftGroupElement::Vt => match c.sign {
            CharSign::Plus => Ok(Cyc12::one()),
            CharSign::Minus => Ok(Cyc12::from_int(-1)),
            CharSign::Unknown => Err(invalid("sign of the character on V_t is unknown")),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::parse_block;

    #[test]
    fn first_layer_is_seed() {
        let phi = parse_block("eta*theta(1)", 24 * 4).unwrap();
        let f = lift(&phi, 6, 1, 1, 24 * 4).unwrap();
        assert_eq!(f.t, 3);
        assert_eq!(f.fj[&1], phi.series);
        assert_eq!(f.fourier_coeff(4, 1, 1).unwrap(), Cyc12::one());
        assert!(f.fourier_coeff(24 * 4, 1, 1).is_err());
        assert_eq!(f.char_sign, CharSign::Minus);
    }

    #[test]
    fn multiplier_mismatch() {
        let phi = parse_block("eta*theta(1)", 96).unwrap();
        assert!(matches!(lift(&phi, 2, 1, 3, 24), Err(Error::IncompatibleMultiplier(_))));
        let th = parse_block("eta^3*theta(1)^3", 96).unwrap();
        assert!(lift(&th, 2, 1, 3, 24).is_ok());
    }

    #[test]
    fn character_examples() {
        let c = CharacterQ {
            t: 3,
            q: 6,
            sign: CharSign::Minus,
        };
        assert_eq!(
            character_values(&c, &LiftGroupElement::Center(1)).unwrap(),
            Cyc12::root_of_unity(1, 6).unwrap()
        );
        assert_eq!(
            character_values(&c, &LiftGroupElement::Heisenberg(1, 0, 0)).unwrap(),
            Cyc12::from_int(-1)
        );
        assert_eq!(
            character_values(&c, &LiftGroupElement::Vt).unwrap(),
            Cyc12::from_int(-1)
        );
        let t = Sl2Matrix::from_i64(1, 1, 0, 1);
        assert_eq!(
            character_values(&c, &LiftGroupElement::IInf(t)).unwrap(),
            Cyc12::root_of_unity(1, 6).unwrap()
        );
    }

    #[test]
    fn maass_symmetry_small_cases() {
        let cases = [
            ("eta^18*theta(1)^2", 1, 3, 24 * 10),
            ("eta*theta(1)", 6, 3, 24 * 4),
            ("eta*theta(1)", 6, 7, 7 * 30),
            ("e(4,1)*eta^6*theta(1)^2", 2, 3, 3 * 40),
        ];
        for (src, q, m_max, prec) in cases {
            let phi = parse_block(src, prec).unwrap();
            let f = lift(&phi, q, 1, m_max, prec / m_max).unwrap();
            let rep = f.maass_symmetry_check().unwrap();
            assert!(rep.holds(), "{src}: {rep:?}");
            assert!(rep.nonzero_pairs > 0, "{src}: {rep:?}");
        }
    }
}
