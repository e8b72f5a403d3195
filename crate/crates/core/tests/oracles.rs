mod common;

use std::collections::BTreeSet;

use num_integer::Integer;

use jpl_core::blocks::build_e41;
use jpl_core::jacobi::hecke_minus;
use jpl_core::paramod::subgroup_lattice;
use jpl_core::parse_block;

use common::{brute_force_subgroups, cyclotomic_poly, hecke_oracle, root_sum};

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
    assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
    assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
    assert_eq!(root_sum(&[1, 1, 1, 1, 1]), Some(0));
    assert_eq!(root_sum(&[3, 0, 0]), Some(3));
    assert_eq!(root_sum(&[1, 1, 0, 0]), None);
}

fn check_hecke(src: &str, q: i64, m_max: i64) {
    let prec = 24 * 4 * m_max;
    let phi = parse_block(src, prec).unwrap();
    for m in (1..=m_max).filter(|m| m.gcd(&q) == 1) {
        let fast = hecke_minus(&phi, m, q).unwrap();
        let slow = hecke_oracle(&phi, m, q, fast.prec24());
        assert_eq!(fast.series, slow, "{src}, Q = {q}, m = {m}");
    }
}

#[test]
fn hecke_matches_substitution_on_e41() {
    let e = build_e41(24 * 24);
    for q in [1, 2, 3] {
        for m in (1..=6).filter(|m: &i64| m.gcd(&q) == 1) {
            let fast = hecke_minus(&e, m, q).unwrap();
            assert_eq!(fast.series, hecke_oracle(&e, m, q, fast.prec24()), "Q = {q}, m = {m}");
        }
    }
}

#[test]
fn hecke_matches_substitution_on_theta_blocks() {
    check_hecke("eta*theta(1)", 6, 6);
    check_hecke("eta^3*theta(1)^3", 2, 6);
    check_hecke("eta^5*theta(2)", 3, 5);
    check_hecke("eta^18*theta(1)^2", 1, 6);
}

#[test]
fn subgroup_lattice_matches_brute_force() {
    for u in 1..=6 {
        for v in (u..=6).filter(|v| v % u == 0) {
            let lat = subgroup_lattice(u, v);
            let ours: BTreeSet<BTreeSet<(i64, i64)>> = lat.subgroups.iter().map(|s| s.elements()).collect();
            assert_eq!(ours.len(), lat.subgroups.len(), "duplicate normal forms for {u} x {v}");
            assert_eq!(ours, brute_force_subgroups(u, v), "Z/{u} x Z/{v}");
        }
    }
}
