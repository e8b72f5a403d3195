use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{rat_to_string, rint};
use crate::error::{invalid, Error, Result};

pub type Mat4 = [[BigRational; 4]; 4];

/// Which symplectic form the matrix is written against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Realization {
    /// integral, preserving the form I_t J I_t
    Tilde,
    /// inside Sp4(Q) for the standard form J
    Rational,
}

/// 4x4 rational matrix at level t. With `sqrt_t` set the matrix stands for
/// `entries / sqrt(t)`, which is how V_t and its cosets are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpMatrix {
    pub t: i64,
    pub entries: Mat4,
    pub sqrt_t: bool,
    pub realization: Realization,
}

pub(crate) fn zero4() -> Mat4 {
    std::array::from_fn(|_| std::array::from_fn(|_| BigRational::zero()))
}

pub(crate) fn ident4() -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    })
}

pub(crate) fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut c = zero4();
    for i in 0..4 {
        for k in 0..4 {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..4 {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

pub(crate) fn transpose(a: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

fn scale(a: &Mat4, s: &BigRational) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] * s))
}

/// Gauss-Jordan inverse over Q.
pub(crate) fn mat_inverse(a: &Mat4) -> Option<Mat4> {
    let mut m = a.clone();
    let mut inv = ident4();
    for col in 0..4 {
        let p = (col..4).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        inv.swap(col, p);
        let f = m[col][col].recip();
        for j in 0..4 {
            m[col][j] = &m[col][j] * &f;
            inv[col][j] = &inv[col][j] * &f;
        }
        for r in 0..4 {
            if r != col && !m[r][col].is_zero() {
                let g = m[r][col].clone();
                for j in 0..4 {
                    let (x, y) = (&m[col][j] * &g, &inv[col][j] * &g);
                    m[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

/// Standard symplectic form J.
pub fn standard_form() -> Mat4 {
    let mut j = zero4();
    j[0][2] = rint(1);
    j[1][3] = rint(1);
    j[2][0] = rint(-1);
    j[3][1] = rint(-1);
    j
}

/// The form preserved by the integral realization: I_t J I_t.
pub fn paramodular_form(t: i64) -> Mat4 {
    let mut j = standard_form();
    j[1][3] = rint(t);
    j[3][1] = rint(-t);
    j
}

fn i_t(t: i64) -> Mat4 {
    let mut m = ident4();
    m[3][3] = rint(t);
    m
}

fn i_t_inv(t: i64) -> Mat4 {
    let mut m = ident4();
    m[3][3] = BigRational::new(BigInt::one(), BigInt::from(t));
    m
}

impl SpMatrix {
    pub fn rational(t: i64, entries: Mat4) -> Self {
        SpMatrix {
            t,
            entries,
            sqrt_t: false,
            realization: Realization::Rational,
        }
    }

    /// Rational matrix from integer numerators over a common denominator.
    pub fn from_ints(t: i64, rows: [[i64; 4]; 4], denom: i64) -> Self {
        let e = std::array::from_fn(|i| {
            std::array::from_fn(|j| BigRational::new(BigInt::from(rows[i][j]), BigInt::from(denom)))
        });
        SpMatrix::rational(t, e)
    }

    pub fn identity(t: i64) -> Self {
        SpMatrix::rational(t, ident4())
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    fn check_compatible(&self, o: &SpMatrix) -> Result<()> {
        if self.t != o.t || self.realization != o.realization {
            return Err(invalid("matrices belong to different levels or realizations"));
        }
        Ok(())
    }

    pub fn mul(&self, o: &SpMatrix) -> Result<SpMatrix> {
        self.check_compatible(o)?;
        let mut e = mat_mul(&self.entries, &o.entries);
        let both = self.sqrt_t && o.sqrt_t;
        if both {
            e = scale(&e, &BigRational::new(BigInt::one(), BigInt::from(self.t)));
        }
        Ok(SpMatrix {
            t: self.t,
            entries: e,
            sqrt_t: self.sqrt_t ^ o.sqrt_t,
            realization: self.realization,
        })
    }

    /// Product of a nonempty sequence.
    pub fn product(ms: &[&SpMatrix]) -> Result<SpMatrix> {
        let (first, rest) = ms.split_first().ok_or_else(|| invalid("empty product"))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    pub fn inverse(&self) -> Result<SpMatrix> {
        let inv = mat_inverse(&self.entries).ok_or(Error::DivisionByZero)?;
        let e = if self.sqrt_t { scale(&inv, &rint(self.t)) } else { inv };
        Ok(SpMatrix {
            entries: e,
            ..self.clone()
        })
    }

    pub fn pow(&self, e: i64) -> Result<SpMatrix> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = SpMatrix {
            realization: self.realization,
            ..SpMatrix::identity(self.t)
        };
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        !self.sqrt_t && self.entries == ident4()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(|x| x.is_integer())
    }

    /// Preserves the form of its realization (up to t for flagged matrices).
    pub fn is_symplectic(&self) -> bool {
        let form = match self.realization {
            Realization::Tilde => paramodular_form(self.t),
            Realization::Rational => standard_form(),
        };
        let lhs = mat_mul(&mat_mul(&transpose(&self.entries), &form), &self.entries);
        let rhs = if self.sqrt_t { scale(&form, &rint(self.t)) } else { form };
        lhs == rhs
    }

    /// I_t^-1 g I_t.
    pub fn to_tilde(&self) -> Result<SpMatrix> {
        if self.realization == Realization::Tilde {
            return Ok(self.clone());
        }
        if self.sqrt_t {
            return Err(invalid("V_t cosets have no integral realization"));
        }
        let e = mat_mul(&mat_mul(&i_t_inv(self.t), &self.entries), &i_t(self.t));
        Ok(SpMatrix {
            t: self.t,
            entries: e,
            sqrt_t: false,
            realization: Realization::Tilde,
        })
    }

    /// I_t g I_t^-1.
    pub fn to_rational(&self) -> SpMatrix {
        if self.realization == Realization::Rational {
            return self.clone();
        }
        let e = mat_mul(&mat_mul(&i_t(self.t), &self.entries), &i_t_inv(self.t));
        SpMatrix {
            t: self.t,
            entries: e,
            sqrt_t: self.sqrt_t,
            realization: Realization::Rational,
        }
    }

    pub fn realization_tag(&self) -> &'static str {
        match (self.realization, self.sqrt_t) {
            (Realization::Tilde, _) => "tilde",
            (Realization::Rational, false) => "rational",
            (Realization::Rational, true) => "plus",
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(rat_to_string).collect())
            .collect();
        json!({"t": self.t, "entries": rows, "realization": self.realization_tag(), "sqrtT": self.sqrt_t})
    }
}

impl fmt::Display for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt_t {
            write!(f, "(1/sqrt({})) ", self.t)?;
        }
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "({})", rows.join("; "))
    }
}
