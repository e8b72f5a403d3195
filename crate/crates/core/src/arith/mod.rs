//! Exact scalars, Kronecker symbols and the eta multiplier on SL2(Z).

mod cyclo;
mod kronecker;
mod sl2;

pub use cyclo::Cyc12;
pub use kronecker::{kronecker_12, kronecker_minus4};
pub use sl2::{dedekind_sum, eta_char, eta_weight, evaluate_word, sl2_decompose, sl2_lift_mod, Letter, Sl2Matrix};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Zero};

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rint(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `x^e` for an arbitrary signed exponent. Panics on `0^e` with `e < 0`.
pub fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    assert!(!(x.is_zero() && e < 0), "zero to a negative power");
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn rat_to_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer.
pub fn rat_from_str(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
