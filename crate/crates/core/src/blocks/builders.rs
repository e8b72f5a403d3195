//! Constructors for the named forms. Every builder returns a series with
//! precision exactly `prec24`.

use num_integer::Integer;

use super::JacobiForm;
use crate::arith::{kronecker_12, kronecker_minus4, rat, Cyc12};
use crate::qseries::QSeries;

/// Evaluates `f` with growing padding until its precision reaches `prec24`.
pub(crate) fn with_margin(prec24: i64, f: impl Fn(i64) -> JacobiForm) -> JacobiForm {
    let mut margin = 0;
    loop {
        let g = f(prec24 + margin);
        if g.prec24() >= prec24 {
            return g.truncate(prec24);
        }
        margin += (prec24 - g.prec24()).max(1);
    }
}

fn term(s: &mut QSeries, n24: i64, l2: i64, c: i64) {
    s.add_term(n24, l2, &Cyc12::from_int(c));
}

/// Dedekind eta as the pentagonal sum of (12/n) q^(n^2/24).
pub fn build_eta(prec24: i64) -> JacobiForm {
    let mut s = QSeries::zero(prec24);
    let mut n = 1i64;
    while n * n < prec24 {
        term(&mut s, n * n, 0, kronecker_12(n));
        n += 1;
    }
    JacobiForm::new(s, 1, 0, 1, 0, "eta")
}

/// Odd Jacobi theta: sum over m of (-4/m) q^(m^2/8) r^(m/2).
pub fn build_theta(prec24: i64) -> JacobiForm {
    let mut s = QSeries::zero(prec24);
    let mut m = 1i64;
    while 3 * m * m < prec24 {
        term(&mut s, 3 * m * m, m, kronecker_minus4(m));
        term(&mut s, 3 * m * m, -m, kronecker_minus4(-m));
        m += 2;
    }
    JacobiForm::new(s, 1, 1, 3, 1, "theta")
}

/// theta(tau, a z).
pub fn build_theta_scaled(a: i64, prec24: i64) -> JacobiForm {
    let t = build_theta(prec24);
    JacobiForm::new(t.series.z_scale(a), 1, a * a, 3, a, format!("theta({a})"))
}

/// theta from the triple product -q^(1/8) r^(-1/2) prod (1 - q^(n-1) r)(1 - q^n r^-1)(1 - q^n).
pub fn theta_product_series(prec24: i64) -> QSeries {
    let mono = |n24: i64, l2: i64, c: i64| QSeries::monomial(n24, l2, Cyc12::from_int(c));
    let mut acc = mono(3, -1, -1);
    let mut n = 1i64;
    while 3 + 24 * (n - 1) < prec24 {
        let f1 = mono(0, 0, 1).add(&mono(24 * (n - 1), 2, -1));
        let f2 = mono(0, 0, 1).add(&mono(24 * n, -2, -1));
        let f3 = mono(0, 0, 1).add(&mono(24 * n, 0, -1));
        acc = acc.mul(&f1).truncate(prec24 + 24);
        acc = acc.mul(&f2).truncate(prec24 + 24);
        acc = acc.mul(&f3).truncate(prec24 + 24);
        n += 1;
    }
    acc.truncate(prec24)
}

/// theta_{3/2}: sum over n of (12/n) q^(n^2/24) r^(n/2).
pub fn build_theta32(prec24: i64) -> JacobiForm {
    let mut s = QSeries::zero(prec24);
    let mut n = 1i64;
    while n * n < prec24 {
        term(&mut s, n * n, n, kronecker_12(n));
        term(&mut s, n * n, -n, kronecker_12(-n));
        n += 1;
    }
    JacobiForm::new(s, 1, 3, 1, 1, "theta32")
}

pub fn build_theta32_scaled(a: i64, prec24: i64) -> JacobiForm {
    let t = build_theta32(prec24);
    JacobiForm::new(t.series.z_scale(a), 1, 3 * a * a, 1, a, format!("theta32({a})"))
}

fn sigma(n: i64, k: u32) -> i64 {
    (1..=n).filter(|d| n.is_multiple_of(d)).map(|d| d.pow(k)).sum()
}

fn eisenstein(prec24: i64, k: u32, c: i64, label: &str) -> JacobiForm {
    let mut s = QSeries::zero(prec24);
    term(&mut s, 0, 0, 1);
    let mut n = 1i64;
    while 24 * n < prec24 {
        term(&mut s, 24 * n, 0, c * sigma(n, k - 1));
        n += 1;
    }
    JacobiForm::new(s, 2 * k as i64, 0, 0, 0, label)
}

pub fn build_e4(prec24: i64) -> JacobiForm {
    eisenstein(prec24, 4, 240, "E4")
}

pub fn build_e6(prec24: i64) -> JacobiForm {
    eisenstein(prec24, 6, -504, "E6")
}

/// Delta = eta^24.
pub fn build_delta(prec24: i64) -> JacobiForm {
    let e = build_eta(prec24);
    e.pow(24).truncate(prec24).with_label("Delta")
}

/// phi_{-2,1} = (theta/eta^3)^2.
pub fn build_phim21(prec24: i64) -> JacobiForm {
    with_margin(prec24, |p| {
        let q = build_theta(p).div(&build_eta(p).pow(3)).expect("theta/eta^3 is exact");
        q.pow(2)
    })
    .with_label("phi(-2,1)")
}

/// Classical theta_i(tau, z) for i = 2, 3, 4 in the (q, r) lattice.
pub fn classical_theta(i: u8, prec24: i64) -> QSeries {
    let mut s = QSeries::zero(prec24);
    match i {
        2 => {
            let mut m = 1i64;
            while 3 * m * m < prec24 {
                term(&mut s, 3 * m * m, m, 1);
                term(&mut s, 3 * m * m, -m, 1);
                m += 2;
            }
        }
        3 | 4 => {
            term(&mut s, 0, 0, 1);
            let mut n = 1i64;
            while 12 * n * n < prec24 {
                let c = if i == 4 && n.is_odd() { -1 } else { 1 };
                term(&mut s, 12 * n * n, 2 * n, c);
                term(&mut s, 12 * n * n, -2 * n, c);
                n += 1;
            }
        }
        _ => panic!("classical theta index must be 2, 3 or 4"),
    }
    s
}

/// phi_{0,1} = 4 sum_{i=2,3,4} (theta_i(tau,z)/theta_i(tau,0))^2.
pub fn build_phi01(prec24: i64) -> JacobiForm {
    with_margin(prec24, |p| {
        let mut acc = QSeries::zero(p);
        for i in [2u8, 3, 4] {
            let th = classical_theta(i, p);
            let q = th.div(&th.at_r_one()).expect("theta quotient is exact");
            acc = acc.add(&q.mul(&q));
        }
        JacobiForm::new(acc.scale(&Cyc12::from_int(4)), 0, 2, 0, 0, "phi(0,1)")
    })
}

/// phi_{12,1} = Delta phi_{0,1}.
pub fn build_phi121(prec24: i64) -> JacobiForm {
    build_delta(prec24)
        .mul(&build_phi01(prec24))
        .truncate(prec24)
        .with_label("phi(12,1)")
}

/// phi_{10,1} = eta^18 theta^2.
pub fn build_phi101(prec24: i64) -> JacobiForm {
    with_margin(prec24, |p| build_eta(p).pow(18).mul(&build_theta(p).pow(2))).with_label("phi(10,1)")
}

/// e_{4,1} = (E4 phi_{0,1} - E6 phi_{-2,1}) / 12.
pub fn build_e41(prec24: i64) -> JacobiForm {
    let a = build_e4(prec24).mul(&build_phi01(prec24));
    let b = build_e6(prec24).mul(&build_phim21(prec24));
    let s = a.series.sub(&b.series).scale(&Cyc12::from(rat(1, 12)));
    JacobiForm::new(s, 8, 2, 0, 0, "e(4,1)").truncate(prec24)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::RLaurent;

    // Euler product q^(1/24) prod (1 - q^n), an independent expansion of eta
    fn eta_product(prec24: i64) -> QSeries {
        let mut acc = QSeries::monomial(1, 0, Cyc12::one());
        let mut n = 1;
        while 24 * n < prec24 {
            let f = QSeries::one().sub(&QSeries::monomial(24 * n, 0, Cyc12::one()));
            acc = acc.mul(&f).truncate(prec24);
            n += 1;
        }
        acc.truncate(prec24)
    }

    #[test]
    fn eta_matches_euler_product() {
        assert_eq!(build_eta(600).series, eta_product(600));
    }

    #[test]
    fn delta_coefficients() {
        let d = build_delta(24 * 6);
        let tau = [1, -24, 252, -1472, 4830];
        for (i, t) in tau.iter().enumerate() {
            assert_eq!(d.series.coeff(24 * (i as i64 + 1), 0).unwrap(), Cyc12::from_int(*t));
        }
        let e4 = build_e4(24 * 6).series;
        let e6 = build_e6(24 * 6).series;
        let alt = e4
            .pow(3)
            .unwrap()
            .sub(&e6.pow(2).unwrap())
            .scale(&Cyc12::from(rat(1, 1728)));
        assert_eq!(alt.truncate(24 * 6), d.series);
    }

    #[test]
    fn theta_forms() {
        let t = build_theta(96);
        assert_eq!(t.series, theta_product_series(96));
        assert_eq!(t.series.coeff(27, 3).unwrap(), Cyc12::from_int(-1));
        let t2 = build_theta_scaled(2, 96);
        assert_eq!(t2.series.layer(3).unwrap(), RLaurent::from_ints(&[(2, 1), (-2, -1)]));
        let t32 = build_theta32(96);
        assert_eq!(t32.series.coeff(25, 5).unwrap(), Cyc12::from_int(-1));
        let quint = build_eta(200)
            .mul(&build_theta_scaled(2, 200))
            .div(&build_theta(200))
            .unwrap();
        assert!(quint.series.agrees_to_precision(&t32.series));
        assert!(quint.prec24() >= 96);
    }

    #[test]
    fn generator_expansions() {
        let m21 = build_phim21(48);
        assert_eq!(
            m21.series.layer(0).unwrap(),
            RLaurent::from_ints(&[(2, 1), (0, -2), (-2, 1)])
        );
        assert_eq!(
            m21.series.layer(24).unwrap(),
            RLaurent::from_ints(&[(4, -2), (2, 8), (0, -12), (-2, 8), (-4, -2)])
        );
        let p01 = build_phi01(48);
        assert_eq!(
            p01.series.layer(0).unwrap(),
            RLaurent::from_ints(&[(2, 1), (0, 10), (-2, 1)])
        );
        assert_eq!(
            p01.series.layer(24).unwrap(),
            RLaurent::from_ints(&[(4, 10), (2, -64), (0, 108), (-2, -64), (-4, 10)])
        );
        let e41 = build_e41(48);
        assert_eq!(e41.series.layer(0).unwrap(), RLaurent::from_ints(&[(0, 1)]));
        assert_eq!(
            e41.series.layer(24).unwrap(),
            RLaurent::from_ints(&[(4, 1), (2, 56), (0, 126), (-2, 56), (-4, 1)])
        );
        // phi_{12,1}(tau, 0) = 12 Delta with phi_{12,1} = Delta phi_{0,1}
        let p121 = build_phi121(120);
        assert_eq!(
            p121.series.at_r_one(),
            build_delta(120).series.scale(&Cyc12::from_int(12))
        );
        assert_eq!(build_phi101(96).series.ord(), Some(24));
    }
}
