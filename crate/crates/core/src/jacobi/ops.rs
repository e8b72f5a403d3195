use crate::arith::{rat, Cyc12};
use crate::blocks::JacobiForm;

/// Product of two forms; gradings add.
pub fn jf_mul(a: &JacobiForm, b: &JacobiForm) -> JacobiForm {
    a.mul(b)
}

/// The bracket m2 (d phi1) phi2 - m1 phi1 (d phi2) with d = r d/dr and
/// m1, m2 the true (possibly half-integral) indices.
pub fn bracket(a: &JacobiForm, b: &JacobiForm) -> JacobiForm {
    let m1 = Cyc12::from(rat(a.index2, 2));
    let m2 = Cyc12::from(rat(b.index2, 2));
    let lhs = a.series.z_derivative().mul(&b.series).scale(&m2);
    let rhs = a.series.mul(&b.series.z_derivative()).scale(&m1);
    JacobiForm::new(
        lhs.sub(&rhs),
        a.weight2 + b.weight2 + 2,
        a.index2 + b.index2,
        i64::from(a.eta_exp) + i64::from(b.eta_exp),
        i64::from(a.h_exp) + i64::from(b.h_exp),
        format!("bracket({},{})", a.label, b.label),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::kronecker_minus4;
    use crate::blocks::{build_theta, build_theta_scaled};
    use crate::qseries::QSeries;

    #[test]
    fn bracket_antisymmetric() {
        let t = build_theta(96);
        assert!(bracket(&t, &t).is_zero());
        let t2 = build_theta_scaled(2, 96);
        let ab = bracket(&t, &t2).series;
        let ba = bracket(&t2, &t).series;
        assert_eq!(ab, ba.neg());
    }

    #[test]
    fn bracket_double_sum() {
        // (4/ab)[theta_a, theta_b] = sum (bm - an)(-4/m)(-4/n) q^((m^2+n^2)/8) r^((am+bn)/2)
        let prec = 96;
        for (a, b) in [(1i64, 2i64), (1, 3), (2, 3)] {
            let br = bracket(&build_theta_scaled(a, prec), &build_theta_scaled(b, prec));
            let lhs = br.series.scale(&Cyc12::from(rat(4, a * b)));
            let mut rhs = QSeries::zero(lhs.prec24());
            for m in -15i64..=15 {
                for n in -15i64..=15 {
                    let c = (b * m - a * n) * kronecker_minus4(m) * kronecker_minus4(n);
                    rhs.add_term(3 * (m * m + n * n), a * m + b * n, &Cyc12::from_int(c));
                }
            }
            assert_eq!(lhs, rhs, "(a, b) = ({a}, {b})");
        }
    }
}
