use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Cyc12;
use crate::error::{invalid, Error, Result};

/// Integer 2x2 matrix (a b; c d) of determinant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl2Matrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

/// Letters of words in the generators T = (1 1; 0 1) and S = (0 -1; 1 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    T,
    TInv,
    S,
    SInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
            Letter::S => Letter::SInv,
            Letter::SInv => Letter::S,
        }
    }

    pub fn matrix(self) -> Sl2Matrix {
        match self {
            Letter::T => Sl2Matrix::from_i64(1, 1, 0, 1),
            Letter::TInv => Sl2Matrix::from_i64(1, -1, 0, 1),
            Letter::S => Sl2Matrix::from_i64(0, -1, 1, 0),
            Letter::SInv => Sl2Matrix::from_i64(0, 1, -1, 0),
        }
    }

    /// Additive eta weight modulo 12.
    fn weight(self) -> i64 {
        match self {
            Letter::T => 1,
            Letter::TInv => 11,
            Letter::S => 9,
            Letter::SInv => 3,
        }
    }
}

impl Sl2Matrix {
    /// Builds a matrix, rejecting determinants other than 1.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let m = Sl2Matrix { a, b, c, d };
        if m.det() != BigInt::one() {
            return Err(Error::NotInGroup(m.det().to_string()));
        }
        Ok(m)
    }

    /// Panics unless ad - bc = 1; intended for literals.
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Sl2Matrix::new(a.into(), b.into(), c.into(), d.into())
            .unwrap_or_else(|_| panic!("({a} {b}; {c} {d}) is not in SL2(Z)"))
    }

    pub fn identity() -> Self {
        Sl2Matrix::from_i64(1, 0, 0, 1)
    }

    pub fn t_pow(n: &BigInt) -> Self {
        Sl2Matrix {
            a: BigInt::one(),
            b: n.clone(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, o: &Sl2Matrix) -> Sl2Matrix {
        Sl2Matrix {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> Sl2Matrix {
        Sl2Matrix {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> Sl2Matrix {
        Sl2Matrix {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Sl2Matrix::identity()
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl fmt::Display for Sl2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

/// Run-length word: each entry is a letter with a positive repeat count.
fn decompose_runs(g: &Sl2Matrix) -> Vec<(Letter, BigInt)> {
    let mut m = g.clone();
    // operations applied on the left, in order
    let mut ops: Vec<(Letter, BigInt)> = Vec::new();
    while !m.c.is_zero() {
        let n = -m.a.div_floor(&m.c);
        if !n.is_zero() {
            m = Sl2Matrix::t_pow(&n).mul(&m);
            ops.push(if n.is_positive() {
                (Letter::T, n)
            } else {
                (Letter::TInv, -n)
            });
        }
        m = Letter::S.matrix().mul(&m);
        ops.push((Letter::S, BigInt::one()));
    }
    // g = op_1^-1 ... op_k^-1 * m with m = +-T^b
    let mut word: Vec<(Letter, BigInt)> = ops.into_iter().map(|(l, n)| (l.inverse(), n)).collect();
    let b = if m.a.is_one() {
        m.b.clone()
    } else {
        debug_assert!(m.a == BigInt::from(-1));
        word.push((Letter::S, BigInt::from(2)));
        -m.b.clone()
    };
    if b.is_positive() {
        word.push((Letter::T, b));
    } else if b.is_negative() {
        word.push((Letter::TInv, -b));
    }
    word
}

/// Writes g as a word in T, T^-1, S, S^-1 by Euclidean reduction.
/// The product of the returned letters, left to right, equals g.
pub fn sl2_decompose(g: &Sl2Matrix) -> Vec<Letter> {
    let mut out = Vec::new();
    for (l, n) in decompose_runs(g) {
        let n = n.to_usize().expect("word too long to expand");
        out.extend(std::iter::repeat_n(l, n));
    }
    out
}

/// Product of a word, left to right.
pub fn evaluate_word(word: &[Letter]) -> Sl2Matrix {
    word.iter().fold(Sl2Matrix::identity(), |acc, l| acc.mul(&l.matrix()))
}

/// w(g) in Z/12 with v_eta(g)^2 = e^{2 pi i w(g)/12}; w(T) = 1, w(S) = 9.
pub fn eta_weight(g: &Sl2Matrix) -> i64 {
    let twelve = BigInt::from(12);
    let mut w = BigInt::zero();
    for (l, n) in decompose_runs(g) {
        w += n * l.weight();
    }
    w.mod_floor(&twelve).to_i64().unwrap()
}

/// v_eta(g)^d for even d in [0, 24).
pub fn eta_char(g: &Sl2Matrix, d: i64) -> Result<Cyc12> {
    if !(0..24).contains(&d) {
        return Err(invalid(format!("eta character exponent {d} outside [0, 24)")));
    }
    if d % 2 != 0 {
        return Err(invalid(format!("odd eta exponent {d} is not a character of SL2(Z)")));
    }
    Ok(Cyc12::zeta_pow(d / 2 * eta_weight(g)))
}

/// Dedekind sum s(d, c) for c > 0 and gcd(d, c) = 1.
pub fn dedekind_sum(d: &BigInt, c: &BigInt) -> Result<BigRational> {
    if !c.is_positive() {
        return Err(invalid("dedekind sum needs c > 0"));
    }
    if !d.gcd(c).is_one() {
        return Err(invalid("dedekind sum needs gcd(d, c) = 1"));
    }
    let saw = |num: &BigInt| -> BigRational {
        let r = num.mod_floor(c);
        if r.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(r, c.clone()) - BigRational::new(BigInt::one(), BigInt::from(2))
        }
    };
    let mut s = BigRational::zero();
    let mut k = BigInt::one();
    while &k < c {
        s += saw(&k) * saw(&(&k * d));
        k += 1;
    }
    Ok(s)
}

/// Lifts a residue matrix of determinant 1 mod N to SL2(Z).
/// Deterministic: c' is c mod N (N when zero), d' the least d + kN coprime to c'.
pub fn sl2_lift_mod(a: i64, b: i64, c: i64, d: i64, n: i64) -> Result<Sl2Matrix> {
    if n <= 0 {
        return Err(invalid(format!("modulus {n} must be positive")));
    }
    if n == 1 {
        return Ok(Sl2Matrix::identity());
    }
    let (a, b, c, d) = (a.rem_euclid(n), b.rem_euclid(n), c.rem_euclid(n), d.rem_euclid(n));
    let det = (a as i128 * d as i128 - b as i128 * c as i128).rem_euclid(n as i128);
    if det != 1 {
        return Err(Error::NotInGroup(format!("{det} mod {n}")));
    }
    let cp = if c == 0 { n } else { c };
    let mut dp = d;
    while dp.gcd(&cp) != 1 {
        dp += n;
    }
    let eg = BigInt::from(dp).extended_gcd(&BigInt::from(cp));
    debug_assert!(eg.gcd.is_one());
    // x d' - y c' = 1
    let (x, y) = (eg.x, -eg.y);
    let nn = BigInt::from(n);
    let j = (BigInt::from(b) * &x - BigInt::from(a) * &y).mod_floor(&nn);
    let (cp, dp) = (BigInt::from(cp), BigInt::from(dp));
    let m = Sl2Matrix {
        a: &x + &j * &cp,
        b: &y + &j * &dp,
        c: cp,
        d: dp,
    };
    debug_assert!(m.det().is_one());
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn random_sl2(c: i64, d: i64) -> Option<Sl2Matrix> {
        if num_integer::gcd(c, d) != 1 {
            return None;
        }
        let eg = BigInt::from(d).extended_gcd(&BigInt::from(c));
        Some(Sl2Matrix {
            a: eg.x,
            b: -eg.y,
            c: c.into(),
            d: d.into(),
        })
    }

    #[test]
    fn generator_weights() {
        assert_eq!(eta_weight(&Letter::T.matrix()), 1);
        assert_eq!(eta_weight(&Letter::S.matrix()), 9);
        assert_eq!(eta_weight(&Sl2Matrix::from_i64(-1, 0, 0, -1)), 6);
        assert_eq!(eta_weight(&Sl2Matrix::identity()), 0);
        assert_eq!(sl2_decompose(&Sl2Matrix::identity()), vec![]);
    }

    #[test]
    fn eta_char_examples() {
        let s = Letter::S.matrix();
        assert_eq!(eta_char(&s, 2).unwrap(), Cyc12::root_of_unity(-1, 4).unwrap());
        assert_eq!(eta_char(&Letter::T.matrix(), 12).unwrap(), Cyc12::from_int(-1));
        assert!(eta_char(&s, 3).is_err());
        assert!(eta_char(&s, 24).is_err());
    }

    #[test]
    fn lift_examples() {
        let m = sl2_lift_mod(2, 0, 0, 2, 3).unwrap();
        assert!(m.det().is_one());
        assert_eq!(sl2_lift_mod(5, 3, 1, 4, 1).unwrap(), Sl2Matrix::identity());
        assert!(sl2_lift_mod(1, 0, 0, 2, 3).is_err());
    }

    proptest! {
        #[test]
        fn decomposition_round_trips(c in -60i64..60, d in -60i64..60, k in -5i64..5) {
            if let Some(g) = random_sl2(c, d) {
                let g = g.mul(&Sl2Matrix::t_pow(&BigInt::from(k)));
                prop_assert_eq!(evaluate_word(&sl2_decompose(&g)), g);
            }
        }

        #[test]
        fn eta_weight_is_homomorphism(c1 in -30i64..30, d1 in -30i64..30, c2 in -30i64..30, d2 in -30i64..30) {
            if let (Some(g), Some(h)) = (random_sl2(c1, d1), random_sl2(c2, d2)) {
                let lhs = eta_weight(&g.mul(&h));
                prop_assert_eq!(lhs, (eta_weight(&g) + eta_weight(&h)) % 12);
            }
        }

        // Rademacher: for c > 0, 12 w(g)/12 = (a + d)/(12c) - s(d, c) - 1/4 in units of 1/12... i.e.
        // w = 12((a+d)/(12c) - s(d,c)) - 3 mod 12.
        #[test]
        fn eta_weight_matches_dedekind_sum(c in 1i64..80, d in -80i64..80) {
            if let Some(g) = random_sl2(c, d) {
                let s = dedekind_sum(&g.d, &g.c).unwrap();
                let val = (BigRational::new(&g.a + &g.d, BigInt::from(12) * &g.c) - s)
                    * BigRational::from_integer(12.into())
                    - BigRational::from_integer(3.into());
                prop_assert!(val.is_integer());
                let w = val.to_integer().mod_floor(&BigInt::from(12));
                prop_assert_eq!(w.to_i64().unwrap(), eta_weight(&g));
            }
        }

        #[test]
        fn lift_reduces_correctly(n in 1i64..40, c in 0i64..40, d in 0i64..40, j in 0i64..40) {
            if let Some(g) = random_sl2(c, d) {
                let g = Sl2Matrix::t_pow(&BigInt::from(j)).mul(&g);
                let r = |x: &BigInt| x.mod_floor(&BigInt::from(n)).to_i64().unwrap();
                let m = sl2_lift_mod(r(&g.a), r(&g.b), r(&g.c), r(&g.d), n).unwrap();
                prop_assert!(m.det().is_one());
                for (x, y) in m.entries().into_iter().zip(g.entries()) {
                    prop_assert_eq!(r(x), r(y));
                }
            }
        }
    }
}
