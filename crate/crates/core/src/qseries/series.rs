use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::RLaurent;
use crate::arith::Cyc12;
use crate::error::{Error, Result};

/// Precision sentinel for series that are known exactly (finite sums).
pub const EXACT: i64 = i64::MAX / 4;

fn clamp(p: i64) -> i64 {
    p.min(EXACT)
}

/// Truncated series in q^(1/24) with coefficients in `RLaurent`.
///
/// Terms are stored for exponents `n24 < prec24`; every coefficient below
/// `prec24` is known, everything at or above it is unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    layers: BTreeMap<i64, RLaurent>,
    prec24: i64,
}

impl QSeries {
    pub fn zero(prec24: i64) -> Self {
        QSeries {
            layers: BTreeMap::new(),
            prec24: clamp(prec24),
        }
    }

    /// The exact constant 1.
    pub fn one() -> Self {
        QSeries::monomial(0, 0, Cyc12::one())
    }

    /// Exact monomial c q^(n24/24) r^(l2/2).
    pub fn monomial(n24: i64, l2: i64, c: Cyc12) -> Self {
        let mut s = QSeries::zero(EXACT);
        s.add_term(n24, l2, &c);
        s
    }

    pub fn constant(c: Cyc12) -> Self {
        QSeries::monomial(0, 0, c)
    }

    pub fn prec24(&self) -> i64 {
        self.prec24
    }

    pub fn is_exact(&self) -> bool {
        self.prec24 >= EXACT
    }

    pub fn is_zero(&self) -> bool {
        self.layers.is_empty()
    }

    /// Smallest exponent with a nonzero layer.
    pub fn ord(&self) -> Option<i64> {
        self.layers.keys().next().copied()
    }

    // order used for precision bookkeeping: a zero series is zero up to its precision
    fn ord_or_prec(&self) -> i64 {
        self.ord().unwrap_or(self.prec24)
    }

    pub fn layers(&self) -> impl Iterator<Item = (&i64, &RLaurent)> {
        self.layers.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.layers.values().map(RLaurent::len).sum()
    }

    /// Iterates `(n24, l2, coefficient)` in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &Cyc12)> {
        self.layers
            .iter()
            .flat_map(|(n, lay)| lay.iter().map(move |(l, c)| (*n, *l, c)))
    }

    fn check(&self, n24: i64) -> Result<()> {
        if n24 >= self.prec24 {
            return Err(Error::BeyondPrecision {
                n24,
                prec24: self.prec24,
            });
        }
        Ok(())
    }

    pub fn coeff(&self, n24: i64, l2: i64) -> Result<Cyc12> {
        self.check(n24)?;
        Ok(self.layers.get(&n24).map(|l| l.coeff(l2)).unwrap_or_default())
    }

    pub fn layer(&self, n24: i64) -> Result<RLaurent> {
        self.check(n24)?;
        Ok(self.layers.get(&n24).cloned().unwrap_or_default())
    }

    /// Adds a term; terms at or beyond the precision are dropped.
    pub fn add_term(&mut self, n24: i64, l2: i64, c: &Cyc12) {
        if n24 >= self.prec24 || c.is_zero() {
            return;
        }
        let lay = self.layers.entry(n24).or_default();
        lay.add_term(l2, c);
        if lay.is_zero() {
            self.layers.remove(&n24);
        }
    }

    pub fn add_layer(&mut self, n24: i64, layer: &RLaurent, s: &Cyc12) {
        if n24 >= self.prec24 || layer.is_zero() {
            return;
        }
        let lay = self.layers.entry(n24).or_default();
        lay.add_scaled(layer, s);
        if lay.is_zero() {
            self.layers.remove(&n24);
        }
    }

    pub fn truncate(&self, prec24: i64) -> QSeries {
        let prec24 = prec24.min(self.prec24);
        QSeries {
            layers: self.layers.range(..prec24).map(|(k, v)| (*k, v.clone())).collect(),
            prec24,
        }
    }

    fn combine(&self, other: &QSeries, s: &Cyc12) -> QSeries {
        let mut out = self.truncate(other.prec24);
        for (n, lay) in other.layers.range(..out.prec24) {
            out.add_layer(*n, lay, s);
        }
        out
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        self.combine(other, &Cyc12::one())
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.combine(other, &Cyc12::from_int(-1))
    }

    pub fn neg(&self) -> QSeries {
        self.scale(&Cyc12::from_int(-1))
    }

    pub fn scale(&self, s: &Cyc12) -> QSeries {
        if s.is_zero() {
            return QSeries::zero(self.prec24);
        }
        QSeries {
            layers: self.layers.iter().map(|(n, l)| (*n, l.scale(s))).collect(),
            prec24: self.prec24,
        }
    }

    /// Multiplies by q^(n24/24).
    pub fn shift(&self, n24: i64) -> QSeries {
        QSeries {
            layers: self.layers.iter().map(|(n, l)| (n + n24, l.clone())).collect(),
            prec24: if self.is_exact() {
                EXACT
            } else {
                clamp(self.prec24 + n24)
            },
        }
    }

    /// Product; precision is min(prec_a + ord_b, prec_b + ord_a).
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let prec = clamp(
            self.prec24
                .saturating_add(other.ord_or_prec())
                .min(other.prec24.saturating_add(self.ord_or_prec())),
        );
        let mut out = QSeries::zero(prec);
        for (n1, l1) in &self.layers {
            for (n2, l2) in &other.layers {
                if n1 + n2 >= prec {
                    break;
                }
                out.add_layer(n1 + n2, &l1.mul(l2), &Cyc12::one());
            }
        }
        out
    }

    /// Integer power; negative exponents go through `div`.
    pub fn pow(&self, e: i64) -> Result<QSeries> {
        let mut base = self.clone();
        let mut k = e.unsigned_abs();
        let mut acc = QSeries::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        if e < 0 {
            QSeries::one().div(&acc)
        } else {
            Ok(acc)
        }
    }

    /// Long division. Each step divides by the leading layer of `other` as a
    /// Laurent polynomial in r and fails if that is not exact.
    pub fn div(&self, other: &QSeries) -> Result<QSeries> {
        let (ob, lead) = match other.layers.iter().next() {
            Some((n, l)) => (*n, l.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let oa = self.ord_or_prec();
        let prec = clamp(
            self.prec24
                .saturating_sub(ob)
                .min(other.prec24.saturating_add(oa).saturating_sub(2 * ob)),
        );
        // only remainder terms below `bound` influence quotient terms below `prec`
        let bound = prec.saturating_add(ob);
        let mut rem: BTreeMap<i64, RLaurent> = self.layers.range(..bound).map(|(k, v)| (*k, v.clone())).collect();
        let mut quot = QSeries::zero(prec);
        let mut steps = 0usize;
        while let Some((&n, _)) = rem.iter().next() {
            if n - ob >= prec {
                break;
            }
            steps += 1;
            if prec >= EXACT && steps > 100_000 {
                return Err(Error::InsufficientPrecision(
                    "quotient of exact series does not terminate; truncate first".into(),
                ));
            }
            let layer = rem.remove(&n).unwrap();
            let c = layer.exact_div(&lead)?;
            let shift = n - ob;
            for (m, lay) in other.layers.iter().skip(1) {
                let e = m + shift;
                if e >= bound {
                    break;
                }
                let slot = rem.entry(e).or_default();
                slot.add_scaled(&lay.mul(&c), &Cyc12::from_int(-1));
                if slot.is_zero() {
                    rem.remove(&e);
                }
            }
            quot.add_layer(shift, &c, &Cyc12::one());
        }
        Ok(quot)
    }

    /// Substitutes r -> r^s.
    pub fn z_scale(&self, s: i64) -> QSeries {
        QSeries {
            layers: self.layers.iter().map(|(n, l)| (*n, l.z_scale(s))).collect(),
            prec24: self.prec24,
        }
    }

    /// Applies (1/2 pi i) d/dz, i.e. r d/dr.
    pub fn z_derivative(&self) -> QSeries {
        let mut out = QSeries::zero(self.prec24);
        for (n, l) in &self.layers {
            out.add_layer(*n, &l.z_derivative(), &Cyc12::one());
        }
        out
    }

    /// Substitutes q -> q^s for a positive integer s.
    pub fn q_scale(&self, s: i64) -> QSeries {
        assert!(s > 0);
        QSeries {
            layers: self.layers.iter().map(|(n, l)| (n * s, l.clone())).collect(),
            prec24: if self.is_exact() { EXACT } else { clamp(self.prec24 * s) },
        }
    }

    /// Sets r = 1.
    pub fn at_r_one(&self) -> QSeries {
        let mut out = QSeries::zero(self.prec24);
        for (n, l) in &self.layers {
            out.add_term(*n, 0, &l.at_one());
        }
        out
    }

    /// Compares two series on the common range below min(prec24).
    pub fn agrees_to_precision(&self, other: &QSeries) -> bool {
        let p = self.prec24.min(other.prec24);
        self.truncate(p).layers == other.truncate(p).layers
    }

    /// True if all coefficients lie in Q.
    pub fn is_rational(&self) -> bool {
        self.terms().all(|(_, _, c)| c.is_rational())
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in &self.layers {
            let q = if n % 24 == 0 {
                format!("q^{}", n / 24)
            } else {
                format!("q^({n}/24)")
            };
            write!(f, "[{q}] {l}; ")?;
        }
        if self.is_exact() {
            write!(f, "(exact)")
        } else {
            write!(f, "O(q^({}/24))", self.prec24)
        }
    }
}

impl Zero for QSeries {
    fn zero() -> Self {
        QSeries::zero(EXACT)
    }
    fn is_zero(&self) -> bool {
        self.layers.is_empty()
    }
}

impl std::ops::Add for QSeries {
    type Output = QSeries;
    fn add(self, o: QSeries) -> QSeries {
        QSeries::add(&self, &o)
    }
}
