use std::str::FromStr;

use num_integer::Integer;

use crate::error::{invalid, Error, Result};

/// Products of theta series whose cuspidality is decided arithmetically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspFamily {
    ThetaPair,
    Theta32Pair,
    ThetaTriple,
    Theta32Triple,
    ThetaQuad,
    Theta32Quad,
    /// theta_a times theta32_b
    ThetaTheta32,
}

impl CuspFamily {
    pub const ALL: [CuspFamily; 7] = [
        CuspFamily::ThetaPair,
        CuspFamily::Theta32Pair,
        CuspFamily::ThetaTriple,
        CuspFamily::Theta32Triple,
        CuspFamily::ThetaQuad,
        CuspFamily::Theta32Quad,
        CuspFamily::ThetaTheta32,
    ];

    pub fn arity(self) -> usize {
        match self {
            CuspFamily::ThetaPair | CuspFamily::Theta32Pair | CuspFamily::ThetaTheta32 => 2,
            CuspFamily::ThetaTriple | CuspFamily::Theta32Triple => 3,
            CuspFamily::ThetaQuad | CuspFamily::Theta32Quad => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CuspFamily::ThetaPair => "theta-pair",
            CuspFamily::Theta32Pair => "theta32-pair",
            CuspFamily::ThetaTriple => "theta-triple",
            CuspFamily::Theta32Triple => "theta32-triple",
            CuspFamily::ThetaQuad => "theta-quad",
            CuspFamily::Theta32Quad => "theta32-quad",
            CuspFamily::ThetaTheta32 => "theta-theta32",
        }
    }

    /// Theta-block expression of the product.
    pub fn expression(self, params: &[i64]) -> Result<String> {
        self.check(params)?;
        let parts: Vec<String> = match self {
            CuspFamily::ThetaTheta32 => {
                vec![format!("theta({})", params[0]), format!("theta32({})", params[1])]
            }
            CuspFamily::Theta32Pair | CuspFamily::Theta32Triple | CuspFamily::Theta32Quad => {
                params.iter().map(|a| format!("theta32({a})")).collect()
            }
            _ => params.iter().map(|a| format!("theta({a})")).collect(),
        };
        Ok(parts.join("*"))
    }

    fn check(self, params: &[i64]) -> Result<()> {
        if params.len() != self.arity() {
            return Err(invalid(format!(
                "{} takes {} parameters, got {}",
                self.name(),
                self.arity(),
                params.len()
            )));
        }
        if params.iter().any(|&a| a <= 0) {
            return Err(invalid("parameters must be positive"));
        }
        Ok(())
    }
}

impl FromStr for CuspFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CuspFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| invalid(format!("unknown family `{s}`")))
    }
}

// prod(a_i) / gcd(a_i)^k
fn reduced_product(params: &[i64]) -> i64 {
    let g = params.iter().fold(0, |g, a| g.gcd(a));
    params.iter().map(|a| a / g).product()
}

/// Sufficient condition for the product to be a cusp form.
pub fn lemma12_cusp_predicate(family: CuspFamily, params: &[i64]) -> Result<bool> {
    family.check(params)?;
    Ok(match family {
        CuspFamily::ThetaPair | CuspFamily::ThetaTriple | CuspFamily::ThetaQuad => reduced_product(params).is_even(),
        CuspFamily::Theta32Pair | CuspFamily::Theta32Triple | CuspFamily::Theta32Quad => {
            reduced_product(params).gcd(&6) != 1
        }
        CuspFamily::ThetaTheta32 => {
            let g = params[0].gcd(&params[1]);
            let (a, b) = (params[0] / g, params[1] / g);
            a.gcd(&3) == 1 || a.gcd(&2) == 2 || b.gcd(&6) != 1
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(lemma12_cusp_predicate(CuspFamily::ThetaPair, &[1, 2]).unwrap());
        assert!(!lemma12_cusp_predicate(CuspFamily::ThetaPair, &[1, 1]).unwrap());
        assert!(lemma12_cusp_predicate(CuspFamily::ThetaTriple, &[1, 1, 2]).unwrap());
        assert!(lemma12_cusp_predicate(CuspFamily::ThetaPair, &[1]).is_err());
        assert!("nope".parse::<CuspFamily>().is_err());
        assert_eq!(
            CuspFamily::ThetaTheta32.expression(&[1, 2]).unwrap(),
            "theta(1)*theta32(2)"
        );
    }
}
