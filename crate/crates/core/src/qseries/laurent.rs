use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{rat, Cyc12};
use crate::error::{Error, Result};

/// Laurent polynomial in r^(1/2): the key is the exponent of r in halves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RLaurent {
    terms: BTreeMap<i64, Cyc12>,
}

impl RLaurent {
    pub fn zero() -> Self {
        RLaurent::default()
    }

    pub fn constant(c: Cyc12) -> Self {
        RLaurent::monomial(0, c)
    }

    pub fn monomial(l2: i64, c: Cyc12) -> Self {
        let mut p = RLaurent::zero();
        p.add_term(l2, &c);
        p
    }

    /// Builds from `(l2, coefficient)` pairs with integer coefficients.
    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        let mut p = RLaurent::zero();
        for &(l2, c) in pairs {
            p.add_term(l2, &Cyc12::from_int(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Cyc12)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, l2: i64) -> Cyc12 {
        self.terms.get(&l2).cloned().unwrap_or_default()
    }

    pub fn min_l2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_l2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, l2: i64, c: &Cyc12) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(l2).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&l2);
        }
    }

    pub fn add_scaled(&mut self, other: &RLaurent, s: &Cyc12) {
        if s.is_zero() {
            return;
        }
        for (l2, c) in &other.terms {
            self.add_term(*l2, &(c * s));
        }
    }

    pub fn add(&self, other: &RLaurent) -> RLaurent {
        let mut out = self.clone();
        out.add_scaled(other, &Cyc12::one());
        out
    }

    pub fn sub(&self, other: &RLaurent) -> RLaurent {
        let mut out = self.clone();
        out.add_scaled(other, &Cyc12::from_int(-1));
        out
    }

    pub fn scale(&self, s: &Cyc12) -> RLaurent {
        let mut out = RLaurent::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn mul(&self, other: &RLaurent) -> RLaurent {
        let mut out = RLaurent::zero();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                out.add_term(l1 + l2, &(c1 * c2));
            }
        }
        out
    }

    /// Exact division; fails unless `other` divides `self` as Laurent polynomials.
    pub fn exact_div(&self, other: &RLaurent) -> Result<RLaurent> {
        let (lo, hi) = match (other.min_l2(), other.max_l2()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::DivisionByZero),
        };
        let lead_inv = other.terms[&lo].inv()?;
        let mut rem = self.clone();
        let mut quot = RLaurent::zero();
        while let (Some(m), Some(top)) = (rem.min_l2(), rem.max_l2()) {
            // every nonzero multiple of `other` spans at least hi - lo
            if top - m < hi - lo {
                return Err(Error::InexactDivision);
            }
            let c = &rem.terms[&m] * &lead_inv;
            let shift = m - lo;
            for (l, d) in &other.terms {
                rem.add_term(l + shift, &-(d * &c));
            }
            quot.add_term(shift, &c);
        }
        Ok(quot)
    }

    /// Substitutes r -> r^s.
    pub fn z_scale(&self, s: i64) -> RLaurent {
        let mut out = RLaurent::zero();
        for (l2, c) in &self.terms {
            out.add_term(l2 * s, c);
        }
        out
    }

    /// Applies r d/dr, i.e. multiplies the r^(l2/2) term by l2/2.
    pub fn z_derivative(&self) -> RLaurent {
        let mut out = RLaurent::zero();
        for (l2, c) in &self.terms {
            out.add_term(*l2, &c.scale(&rat(*l2, 2)));
        }
        out
    }

    /// Value at r = 1.
    pub fn at_one(&self) -> Cyc12 {
        let mut s = Cyc12::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// Rational coefficients, if all coefficients are rational.
    pub fn rational_coeffs(&self) -> Option<BTreeMap<i64, BigRational>> {
        self.terms
            .iter()
            .map(|(l, c)| c.as_rational().map(|r| (*l, r.clone())))
            .collect()
    }

    /// True when invariant under r -> 1/r.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(l, c)| self.coeff(-l) == *c)
    }
}

impl fmt::Display for RLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l2, c)| {
                let r = match (l2 % 2 == 0, *l2) {
                    (_, 0) => String::new(),
                    (true, 2) => "r".to_string(),
                    (true, l) => format!("r^{}", l / 2),
                    (false, l) => format!("r^({l}/2)"),
                };
                match (r.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => r,
                    (false, false) => format!("({c})*{r}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Zero for RLaurent {
    fn zero() -> Self {
        RLaurent::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::ops::Add for RLaurent {
    type Output = RLaurent;
    fn add(self, o: RLaurent) -> RLaurent {
        RLaurent::add(&self, &o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        // (r - 1)(r + 1) / (r - 1)
        let a = RLaurent::from_ints(&[(4, 1), (0, -1)]);
        let b = RLaurent::from_ints(&[(2, 1), (0, -1)]);
        assert_eq!(a.exact_div(&b).unwrap(), RLaurent::from_ints(&[(2, 1), (0, 1)]));
        let c = RLaurent::from_ints(&[(4, 1), (0, 1)]);
        assert_eq!(c.exact_div(&b), Err(Error::InexactDivision));
        assert_eq!(a.exact_div(&RLaurent::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivative_and_scale() {
        let a = RLaurent::from_ints(&[(1, 1), (-1, -1)]);
        assert_eq!(
            a.z_derivative(),
            RLaurent::monomial(1, rat(1, 2).into()).add(&RLaurent::monomial(-1, rat(1, 2).into()))
        );
        assert_eq!(a.z_scale(2), RLaurent::from_ints(&[(2, 1), (-2, -1)]));
        assert!(!a.is_symmetric());
        assert!(a
            .mul(&a)
            .sub(&RLaurent::from_ints(&[(2, 1), (0, -2), (-2, 1)]))
            .is_zero());
    }
}
