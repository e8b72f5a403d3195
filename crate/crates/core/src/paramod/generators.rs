use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{ident4, SpMatrix};
use crate::arith::{rint, Sl2Matrix};

/// The named elements used in the abelianization argument, all in the
/// rational realization except V_t.
#[derive(Clone, Debug)]
pub struct Generators {
    pub t: i64,
    pub a: SpMatrix,
    pub b: SpMatrix,
    pub c: SpMatrix,
    pub l: SpMatrix,
    pub m: SpMatrix,
    pub x: SpMatrix,
    pub j_t: SpMatrix,
    pub v_t: SpMatrix,
}

impl Generators {
    pub fn named(&self) -> Vec<(&'static str, &SpMatrix)> {
        vec![
            ("A", &self.a),
            ("B", &self.b),
            ("C", &self.c),
            ("L", &self.l),
            ("M", &self.m),
            ("X", &self.x),
            ("J_t", &self.j_t),
            ("V_t", &self.v_t),
        ]
    }
}

pub fn generators(t: i64) -> Generators {
    let int = |rows| SpMatrix::from_ints(t, rows, 1);
    let mut j_t = int([[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, -t, 0, 0]]);
    j_t.entries[1][3] = BigRational::new(BigInt::one(), BigInt::from(t));
    Generators {
        t,
        a: i_inf(t, &Sl2Matrix::from_i64(1, 1, 0, 1)),
        b: j_inf(t, &Sl2Matrix::from_i64(1, 1, 0, 1)),
        c: int([[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 1]]),
        l: int([[1, 0, -1, 0], [0, 1, 0, 1], [0, 0, 1, 0], [0, 0, 0, 1]]),
        m: int([[1, 0, 0, 0], [0, 1, 0, 0], [-1, 0, 1, 0], [0, 0, 0, 1]]),
        x: int([[0, 0, 1, 1], [-1, 1, 1, 1], [-1, 0, 2, 1], [0, 0, 0, 1]]),
        j_t,
        v_t: v_t(t),
    }
}

/// V_t, stored as its integer numerator with the 1/sqrt(t) flag.
pub fn v_t(t: i64) -> SpMatrix {
    let mut v = SpMatrix::from_ints(t, [[0, t, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, t, 0]], 1);
    // at t = 1 the flag is a no-op; leaving it off keeps V_1 inside Sp4(Z)
    v.sqrt_t = t != 1;
    v
}

fn big(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

pub fn i_inf(t: i64, g: &Sl2Matrix) -> SpMatrix {
    let mut e = ident4();
    e[0][0] = big(&g.a);
    e[0][2] = big(&g.b);
    e[2][0] = big(&g.c);
    e[2][2] = big(&g.d);
    SpMatrix::rational(t, e)
}

pub fn j_inf(t: i64, g: &Sl2Matrix) -> SpMatrix {
    let mut e = ident4();
    e[1][1] = big(&g.a);
    e[1][3] = big(&g.b) / rint(t);
    e[3][1] = big(&g.c) * rint(t);
    e[3][3] = big(&g.d);
    SpMatrix::rational(t, e)
}

/// [lambda, mu; kappa]; kappa is rational so that the centre [0, 0; k/t] is
/// reachable.
pub fn heisenberg(t: i64, l: i64, m: i64, kappa: BigRational) -> SpMatrix {
    let mut e = ident4();
    e[0][3] = rint(m);
    e[1][0] = rint(l);
    e[1][2] = rint(m);
    e[1][3] = kappa;
    e[2][3] = rint(-l);
    SpMatrix::rational(t, e)
}

/// Reads (lambda, mu, kappa) back from a Heisenberg matrix.
pub fn heisenberg_params(g: &SpMatrix) -> Option<(BigRational, BigRational, BigRational)> {
    let e = &g.entries;
    let (l, m, k) = (e[1][0].clone(), e[0][3].clone(), e[1][3].clone());
    let back = heisenberg(g.t, 0, 0, BigRational::zero());
    let mut expect = back.entries;
    expect[0][3] = m.clone();
    expect[1][0] = l.clone();
    expect[1][2] = m.clone();
    expect[1][3] = k.clone();
    expect[2][3] = -l.clone();
    (!g.sqrt_t && *e == expect).then_some((l, m, k))
}

/// Sign character of the integral Heisenberg group.
pub fn v_h(l: i64, m: i64, k: i64) -> i64 {
    if (l + m + l * m + k).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
