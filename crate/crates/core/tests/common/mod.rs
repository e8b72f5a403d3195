//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use jpl_core::arith::{rat, rat_pow};
use jpl_core::{Cyc12, JacobiForm, QSeries};

/// Coefficients of the cyclotomic polynomial Phi_d, constant term first.
pub fn cyclotomic_poly(d: usize) -> Vec<i64> {
    // x^d - 1 divided by Phi_e for every proper divisor e
    let mut p = vec![0i64; d + 1];
    p[0] = -1;
    p[d] = 1;
    for e in (1..d).filter(|&e| d.is_multiple_of(e)) {
        p = poly_div_exact(&p, &cyclotomic_poly(e));
    }
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, x) in den.iter().enumerate() {
            rem[i + j] -= c * x;
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    quot
}

/// Reduces sum c_r zeta_d^r in Z[x]/(Phi_d) and returns the value if it is
/// an integer.
pub fn root_sum(counts: &[i64]) -> Option<i64> {
    let d = counts.len();
    let phi = cyclotomic_poly(d);
    let deg = phi.len() - 1;
    let mut p = counts.to_vec();
    for i in (deg..p.len()).rev() {
        let c = p[i];
        if c != 0 {
            for (j, x) in phi.iter().enumerate() {
                p[i - deg + j] -= c * x;
            }
        }
    }
    if p[1..deg.max(1)].iter().all(|&x| x == 0) {
        Some(p[0])
    } else {
        None
    }
}

/// T_-^(Q)(m) by substituting (a tau + b Q)/d, a z into every term and
/// summing the roots of unity over b mod d.
///
/// For Q | 6 and a coprime to Q, sigma_a is +-1 modulo each prime factor of
/// Q, so v_eta^(24/Q)(sigma_a) = 1 and no multiplier is applied.
pub fn hecke_oracle(phi: &JacobiForm, m: i64, q: i64, prec24: i64) -> QSeries {
    assert!(6 % q == 0, "the oracle covers Q | 6 only");
    let k = phi.weight2 / 2;
    let mut out = QSeries::zero(prec24);
    for a in (1..=m).filter(|a| m % a == 0) {
        let d = m / a;
        let scale = rat_pow(&rat(m, 1), 2 * k - 3) * rat_pow(&rat(d, 1), -k);
        for (n24, l2, c) in phi.series.terms() {
            assert_eq!((n24 * q) % 24, 0, "nQ must be integral");
            let j = n24 * q / 24;
            let mut counts = vec![0i64; d as usize];
            for b in 0..d {
                counts[(j * b).rem_euclid(d) as usize] += 1;
            }
            let s = root_sum(&counts).expect("a full orbit sums to an integer");
            if s == 0 {
                continue;
            }
            assert_eq!((n24 * a) % d, 0);
            let n_out = n24 * a / d;
            if n_out < prec24 {
                let coeff = c * &Cyc12::from(&scale * rat(s, 1));
                out.add_term(n_out, l2 * a, &coeff);
            }
        }
    }
    out
}

/// Every subgroup of Z/u x Z/v as the span of a pair of elements.
pub fn brute_force_subgroups(u: i64, v: i64) -> BTreeSet<BTreeSet<(i64, i64)>> {
    let elems: Vec<(i64, i64)> = (0..u).flat_map(|x| (0..v).map(move |y| (x, y))).collect();
    let mut out = BTreeSet::new();
    for &g in &elems {
        for &h in &elems {
            let mut span = BTreeSet::new();
            for i in 0..u * v {
                for j in 0..u * v {
                    span.insert(((i * g.0 + j * h.0).rem_euclid(u), (i * g.1 + j * h.1).rem_euclid(v)));
                }
            }
            out.insert(span);
        }
    }
    out
}

/// Number of sublattices of each order in the brute-force enumeration.
pub fn order_histogram(subs: &BTreeSet<BTreeSet<(i64, i64)>>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for s in subs {
        *h.entry(s.len()).or_insert(0) += 1;
    }
    h
}
