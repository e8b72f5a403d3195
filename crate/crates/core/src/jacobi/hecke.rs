use num_integer::Integer;

use crate::arith::{eta_char, rat, rat_pow, sl2_lift_mod, Cyc12, Sl2Matrix};
use crate::blocks::JacobiForm;
use crate::error::{invalid, Result};
use crate::qseries::QSeries;

pub(crate) const LIFT_LEVELS: [i64; 6] = [1, 2, 3, 4, 6, 12];

/// sigma_a in SL2(Z) with sigma_a = diag(1/a, a) mod Q.
pub fn sigma_a(a: i64, q: i64) -> Result<Sl2Matrix> {
    if q == 1 {
        return Ok(Sl2Matrix::identity());
    }
    let eg = a.extended_gcd(&q);
    if eg.gcd != 1 {
        return Err(invalid(format!("a = {a} is not invertible modulo Q = {q}")));
    }
    sl2_lift_mod(eg.x, 0, 0, a, q)
}

/// v_eta^(24/Q)(sigma_a).
pub fn sigma_character(a: i64, q: i64) -> Result<Cyc12> {
    eta_char(&sigma_a(a, q)?, (24 / q) % 24)
}

/// The index-raising operator T_-^(Q)(m) on coefficients:
/// f(n, l) contributes m^(2k-3) d^(1-k) v(sigma_a) f(n, l) at q^(na/d) r^(la)
/// for each factorization m = a d with d | nQ.
pub fn hecke_minus(phi: &JacobiForm, m: i64, q: i64) -> Result<JacobiForm> {
    if m < 1 {
        return Err(invalid(format!("Hecke index m = {m} must be positive")));
    }
    if !LIFT_LEVELS.contains(&q) {
        return Err(invalid(format!("Q = {q} must divide 12")));
    }
    if phi.weight2 % 2 != 0 {
        return Err(invalid(format!("weight {}/2 is not integral", phi.weight2)));
    }
    if m.gcd(&q) != 1 {
        return Err(invalid(format!("m = {m} must be coprime to Q = {q}")));
    }
    let k = phi.weight2 / 2;
    let src = &phi.series;
    for (n24, _, _) in src.terms() {
        if (n24 * q) % 24 != 0 {
            return Err(invalid(format!("q-exponent {n24}/24 times Q = {q} is not integral")));
        }
    }
    let prec = if src.is_exact() {
        src.prec24()
    } else {
        Integer::div_ceil(&src.prec24(), &m)
    };
    let mut out = QSeries::zero(prec);
    let mm = rat_pow(&rat(m, 1), 2 * k - 3);
    for a in (1..=m).filter(|a| m % a == 0) {
        let d = m / a;
        let factor = Cyc12::from(&mm * rat_pow(&rat(d, 1), 1 - k)) * sigma_character(a, q)?;
        for (n24, layer) in src.layers() {
            if (n24 * q / 24) % d != 0 {
                continue;
            }
            let n_out = n24 * a / d;
            if n_out >= prec {
                break;
            }
            out.add_layer(n_out, &layer.z_scale(a), &factor);
        }
    }
    Ok(JacobiForm::new(
        out,
        phi.weight2,
        phi.index2 * m,
        i64::from(phi.eta_exp) * m,
        i64::from(phi.h_exp) * m,
        format!("{}|T({m})", phi.label),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{build_e41, parse_block};

    #[test]
    fn identity_for_m_one() {
        let f = parse_block("eta*theta(1)", 96).unwrap();
        let g = hecke_minus(&f, 1, 6).unwrap();
        assert_eq!(g.series, f.series);
        assert_eq!(g.grading(), f.grading());
    }

    #[test]
    fn e41_t2_constant_term() {
        let e = build_e41(96);
        let g = hecke_minus(&e, 2, 1).unwrap();
        assert_eq!(g.series.coeff(0, 0).unwrap(), Cyc12::from_int(36));
        assert_eq!(hecke_minus(&e, 3, 1).unwrap().index2, 6);
    }

    #[test]
    fn preconditions() {
        let f = parse_block("eta*theta(1)", 48).unwrap();
        assert!(hecke_minus(&f, 2, 6).is_err());
        assert!(hecke_minus(&f, 5, 2).is_err());
        let g = parse_block("theta(1)", 48).unwrap();
        assert!(hecke_minus(&g, 1, 1).is_err());
    }

    #[test]
    fn sigma_reduces_to_diagonal() {
        for q in [2i64, 3, 4, 6, 12] {
            for a in (1..30).filter(|a| a.gcd(&q) == 1) {
                let s = sigma_a(a, q).unwrap();
                let r = |x: &num_bigint::BigInt| x.mod_floor(&q.into());
                assert_eq!(r(&s.b), 0.into());
                assert_eq!(r(&s.c), 0.into());
                assert_eq!(r(&(&s.d - a)), 0.into());
            }
        }
    }
}
