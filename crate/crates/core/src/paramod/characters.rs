use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::generators::{generators, v_t};
use super::matrix::SpMatrix;
use super::{abelianization, membership, GroupKind};
use crate::arith::{eta_char, sl2_lift_mod, Cyc12};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AbLetter {
    A,
    B,
}

/// chi_{a,b}: A -> e(a/t2), B -> e(b/t2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharacterAB {
    pub t: i64,
    pub a: i64,
    pub b: i64,
}

impl CharacterAB {
    pub fn new(t: i64, a: i64, b: i64) -> Result<Self> {
        if t < 1 {
            return Err(invalid(format!("level {t} must be positive")));
        }
        let (t1, t2) = abelianization(t);
        if !(1..=t2).contains(&a) || !(1..=t2).contains(&b) {
            return Err(invalid(format!("chi_{{{a},{b}}} needs 1 <= a, b <= {t2}")));
        }
        if (a - b) % (t2 / t1) != 0 {
            return Err(invalid(format!(
                "chi_{{{a},{b}}} is not a character of Gamma_{t}: {} does not divide a - b",
                t2 / t1
            )));
        }
        Ok(CharacterAB { t, a, b })
    }

    pub fn order(&self) -> i64 {
        let t2 = abelianization(self.t).1;
        t2 / self.a.gcd(&self.b).gcd(&t2)
    }

    /// Value on the class (u1, u2) of Z/t1 x Z/t2, where A^x B^y has class
    /// (x mod t1, (x + y) mod t2).
    pub fn exponent_on_class(&self, u1: i64, u2: i64) -> i64 {
        let t2 = abelianization(self.t).1;
        ((self.a - self.b) * u1 + self.b * u2).rem_euclid(t2)
    }
}

impl fmt::Display for CharacterAB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi_{{{},{}}}", self.a, self.b)
    }
}

/// All t1 * t2 characters of Gamma_t, ordered by (a, b).
pub fn characters(t: i64) -> Vec<CharacterAB> {
    let t2 = abelianization(t).1;
    (1..=t2)
        .flat_map(|a| (1..=t2).map(move |b| (a, b)))
        .filter_map(|(a, b)| CharacterAB::new(t, a, b).ok())
        .collect()
}

/// chi_Q as a lattice character: chi_{a,a} with a Q = t2.
pub fn chi_q(t: i64, q: i64) -> Result<CharacterAB> {
    let t2 = abelianization(t).1;
    if q < 1 || t2 % q != 0 {
        return Err(invalid(format!("no character chi_{q} on Gamma_{t}")));
    }
    CharacterAB::new(t, t2 / q, t2 / q)
}

fn exponent_sums(word: &[(AbLetter, i64)]) -> (i64, i64) {
    word.iter().fold((0, 0), |(x, y), &(l, e)| match l {
        AbLetter::A => (x + e, y),
        AbLetter::B => (x, y + e),
    })
}

/// Evaluates chi_{a,b} on a word in A and B by exponent counting.
pub fn char_eval(chi: &CharacterAB, word: &[(AbLetter, i64)]) -> Result<Cyc12> {
    let (x, y) = exponent_sums(word);
    let t2 = abelianization(chi.t).1;
    Cyc12::root_of_unity((chi.a * x + chi.b * y).rem_euclid(t2), t2)
}

/// The matrix of a word in A and B.
pub fn word_matrix(t: i64, word: &[(AbLetter, i64)]) -> Result<SpMatrix> {
    let g = generators(t);
    word.iter().try_fold(SpMatrix::identity(t), |acc, &(l, e)| {
        let base = match l {
            AbLetter::A => &g.a,
            AbLetter::B => &g.b,
        };
        acc.mul(&base.pow(e)?)
    })
}

fn mod_t(x: &num_rational::BigRational, t: i64) -> i64 {
    x.numer().mod_floor(&BigInt::from(t)).to_i64().expect("residue fits")
}

/// chi_{t1}(g) = v_eta^{24/t1} of the corner (g11 g13; g31 g33) mod t of the
/// integral realization.
pub fn chi_t1_matrix(g: &SpMatrix, t: i64) -> Result<Cyc12> {
    if !membership(g, t, GroupKind::Tilde) {
        return Err(Error::NotInGroup(format!(
            "matrix is not in the paramodular group of level {t}"
        )));
    }
    let h = g.to_tilde()?;
    let e = &h.entries;
    let lift = sl2_lift_mod(
        mod_t(&e[0][0], t),
        mod_t(&e[0][2], t),
        mod_t(&e[2][0], t),
        mod_t(&e[2][2], t),
        t,
    )?;
    let t1 = abelianization(t).0;
    eta_char(&lift, (24 / t1) % 24)
}

/// chi'_{t1}(g) = chi_{t1}(V_t g V_t^-1).
pub fn chi_t1_prime(g: &SpMatrix, t: i64) -> Result<Cyc12> {
    let v = v_t(t);
    let conj = SpMatrix::product(&[&v, &g.to_rational(), &v.inverse()?])?;
    chi_t1_matrix(&conj, t)
}
