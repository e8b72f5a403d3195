use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Element of Q(zeta_12), stored in the power basis 1, z, z^2, z^3 with
/// z = e^{2 pi i/12} and minimal polynomial z^4 - z^2 + 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyc12 {
    c: [BigRational; 4],
}

// z^k in the power basis, k = 0..12, as small integers.
const POWERS: [[i8; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

impl Cyc12 {
    pub fn new(c: [BigRational; 4]) -> Self {
        Cyc12 { c }
    }

    pub fn zero() -> Self {
        Cyc12::new([
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ])
    }

    pub fn one() -> Self {
        Cyc12::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut x = Cyc12::zero();
        x.c[0] = r;
        x
    }

    pub fn from_int(n: i64) -> Self {
        Cyc12::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// z^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let row = POWERS[k.rem_euclid(12) as usize];
        Cyc12::new(row.map(|v| BigRational::from_integer(BigInt::from(v))))
    }

    /// e^{2 pi i num/den}. Fails unless the value lies in Q(zeta_12).
    pub fn root_of_unity(num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::InvalidArgument(format!("root of unity with denominator {den}")));
        }
        let g = num_integer::gcd(num.rem_euclid(den), den);
        let reduced = den / g;
        if 12 % reduced != 0 {
            return Err(Error::InvalidArgument(format!(
                "e^(2 pi i {num}/{den}) is not in Q(zeta_12)"
            )));
        }
        Ok(Cyc12::zeta_pow(num.rem_euclid(den) / g * (12 / reduced)))
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.c[0])
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_one() {
            return self.clone();
        }
        let f = |x: &BigRational| if x.is_zero() { BigRational::zero() } else { x * r };
        Cyc12::new([f(&self.c[0]), f(&self.c[1]), f(&self.c[2]), f(&self.c[3])])
    }

    /// Image under the automorphism z -> z^k, gcd(k, 12) = 1.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert_eq!(num_integer::gcd(k.rem_euclid(12), 12), 1);
        let mut out = Cyc12::zero();
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            out += &Cyc12::zeta_pow(k * i as i64).scale(ci);
        }
        out
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(11)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> BigRational {
        let p = self * &self.galois(5) * self.galois(7) * self.galois(11);
        debug_assert!(p.is_rational());
        p.c[0].clone()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyc12::from_rational(r.recip()));
        }
        let others = self.galois(5) * self.galois(7) * self.galois(11);
        let n = (self * &others).c[0].clone();
        Ok(others.scale(&n.recip()))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Cyc12::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Renders each basis coefficient as `p/q`.
    pub fn to_strings(&self) -> [String; 4] {
        self.c.clone().map(|x| crate::arith::rat_to_string(&x))
    }
}

impl Default for Cyc12 {
    fn default() -> Self {
        Cyc12::zero()
    }
}

impl From<BigRational> for Cyc12 {
    fn from(r: BigRational) -> Self {
        Cyc12::from_rational(r)
    }
}

impl From<i64> for Cyc12 {
    fn from(n: i64) -> Self {
        Cyc12::from_int(n)
    }
}

impl<'a> Add<&'a Cyc12> for &'a Cyc12 {
    type Output = Cyc12;
    fn add(self, o: &Cyc12) -> Cyc12 {
        Cyc12::new([
            &self.c[0] + &o.c[0],
            &self.c[1] + &o.c[1],
            &self.c[2] + &o.c[2],
            &self.c[3] + &o.c[3],
        ])
    }
}

impl<'a> Sub<&'a Cyc12> for &'a Cyc12 {
    type Output = Cyc12;
    fn sub(self, o: &Cyc12) -> Cyc12 {
        Cyc12::new([
            &self.c[0] - &o.c[0],
            &self.c[1] - &o.c[1],
            &self.c[2] - &o.c[2],
            &self.c[3] - &o.c[3],
        ])
    }
}

impl AddAssign<&Cyc12> for Cyc12 {
    fn add_assign(&mut self, o: &Cyc12) {
        for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyc12> for Cyc12 {
    fn sub_assign(&mut self, o: &Cyc12) {
        for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Neg for Cyc12 {
    type Output = Cyc12;
    fn neg(self) -> Cyc12 {
        Cyc12::new(self.c.map(|x| -x))
    }
}

impl Neg for &Cyc12 {
    type Output = Cyc12;
    fn neg(self) -> Cyc12 {
        -(self.clone())
    }
}

impl<'a> Mul<&'a Cyc12> for &'a Cyc12 {
    type Output = Cyc12;
    fn mul(self, o: &Cyc12) -> Cyc12 {
        if let Some(r) = o.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return o.scale(r);
        }
        let mut p: [BigRational; 7] = Default::default();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if o.c[j].is_zero() {
                    continue;
                }
                p[i + j] += &self.c[i] * &o.c[j];
            }
        }
        // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        let [p0, p1, p2, p3, p4, p5, p6] = p;
        Cyc12::new([p0 - &p4 - p6, p1 - &p5, p2 + p4, p3 + p5])
    }
}

impl Mul for Cyc12 {
    type Output = Cyc12;
    fn mul(self, o: Cyc12) -> Cyc12 {
        &self * &o
    }
}

impl Mul<Cyc12> for &Cyc12 {
    type Output = Cyc12;
    fn mul(self, o: Cyc12) -> Cyc12 {
        self * &o
    }
}

impl Add for Cyc12 {
    type Output = Cyc12;
    fn add(mut self, o: Cyc12) -> Cyc12 {
        self += &o;
        self
    }
}

impl Sub for Cyc12 {
    type Output = Cyc12;
    fn sub(mut self, o: Cyc12) -> Cyc12 {
        self -= &o;
        self
    }
}

impl fmt::Display for Cyc12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let names = ["", "z", "z^2", "z^3"];
        let mut first = true;
        for (c, name) in self.c.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (name, mag.is_one()) {
                ("", _) => write!(f, "{mag}")?,
                (n, true) => write!(f, "{n}")?,
                (n, false) => write!(f, "{mag}*{n}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn zeta_order_twelve() {
        let z = Cyc12::zeta_pow(1);
        assert!(z.pow(12).unwrap().is_one());
        assert!(!z.pow(6).unwrap().is_one());
        assert!(!z.pow(4).unwrap().is_one());
        for k in 0..24 {
            assert_eq!(z.pow(k).unwrap(), Cyc12::zeta_pow(k));
        }
    }

    #[test]
    fn inverse_and_norm() {
        let x = Cyc12::new([rat(1, 2), rat(-3, 1), rat(0, 1), rat(5, 7)]);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(x.norm() > rat(0, 1));
        assert_eq!(Cyc12::zeta_pow(1).norm(), rat(1, 1));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(Cyc12::root_of_unity(1, 4).unwrap(), Cyc12::zeta_pow(3));
        assert_eq!(Cyc12::root_of_unity(2, 24).unwrap(), Cyc12::zeta_pow(1));
        assert!(Cyc12::root_of_unity(1, 24).is_err());
        assert!(Cyc12::root_of_unity(1, 5).is_err());
        let i = Cyc12::root_of_unity(1, 4).unwrap();
        assert_eq!(&i * &i, Cyc12::from_int(-1));
        assert_eq!(i.conj(), -&i);
    }
}
