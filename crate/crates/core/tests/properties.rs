use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;

use jpl_core::arith::{dedekind_sum, eta_char, eta_weight, evaluate_word, rat, sl2_decompose, Letter};
use jpl_core::paramod::{char_eval, characters, chi_t1_matrix, generators, membership, AbLetter, GroupKind, SpMatrix};
use jpl_core::{Cyc12, QSeries};

fn cyc() -> impl Strategy<Value = Cyc12> {
    prop::array::uniform4((-20i64..20, 1i64..6)).prop_map(|c| Cyc12::new(c.map(|(n, d)| rat(n, d))))
}

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec((0i64..5, -3i64..=3, -4i64..=4), 0..8).prop_map(|terms| {
        let mut s = QSeries::zero(24 * 6);
        for (n, l, c) in terms {
            s.add_term(24 * n, 2 * l, &Cyc12::from_int(c));
        }
        s
    })
}

// 1 + q * (anything), invertible in the power series ring
fn unit_series() -> impl Strategy<Value = QSeries> {
    series().prop_map(|s| QSeries::one().add(&s.shift(24)).truncate(24 * 6))
}

fn word() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        prop::sample::select(vec![Letter::T, Letter::TInv, Letter::S, Letter::SInv]),
        0..24,
    )
}

fn group_word() -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..7, any::<bool>()), 0..6)
}

fn eval_group_word(t: i64, w: &[(usize, bool)]) -> SpMatrix {
    let g = generators(t);
    let gens = [&g.a, &g.b, &g.c, &g.l, &g.m, &g.x, &g.j_t];
    w.iter().fold(SpMatrix::identity(t), |acc, &(i, inv)| {
        let x = if inv {
            gens[i].inverse().unwrap()
        } else {
            gens[i].clone()
        };
        acc.mul(&x).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cyc12_field_laws(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        for k in [1, 5, 7, 11] {
            prop_assert_eq!((&x * &y).galois(k), &x.galois(k) * &y.galois(k));
        }
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) * &y.inv().unwrap(), x);
        }
    }

    #[test]
    fn series_ring_laws(a in series(), b in series(), c in series()) {
        // cancellation can raise the q-order and with it the tracked
        // precision, so the laws hold up to the common precision
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.mul(&b).mul(&c).agrees_to_precision(&a.mul(&b.mul(&c))));
        prop_assert!(a.add(&b).mul(&c).agrees_to_precision(&a.mul(&c).add(&b.mul(&c))));
        prop_assert!(a.mul(&b).z_scale(3).agrees_to_precision(&a.z_scale(3).mul(&b.z_scale(3))));
        prop_assert!(a.mul(&b).at_r_one().agrees_to_precision(&a.at_r_one().mul(&b.at_r_one())));
    }

    #[test]
    fn series_division_inverts_multiplication(a in series(), u in unit_series()) {
        let q = a.mul(&u).div(&u).unwrap();
        prop_assert!(q.agrees_to_precision(&a));
        prop_assert!(q.prec24() <= a.prec24());
    }

    #[test]
    fn series_powers(a in unit_series(), e in 0i64..5) {
        let direct = (0..e).fold(QSeries::one(), |acc, _| acc.mul(&a));
        prop_assert!(a.pow(e).unwrap().agrees_to_precision(&direct));
        prop_assert!(a.pow(-e).unwrap().mul(&a.pow(e).unwrap()).agrees_to_precision(&QSeries::one()));
    }

    #[test]
    fn sl2_words_round_trip(w in word()) {
        let g = evaluate_word(&w);
        prop_assert_eq!(evaluate_word(&sl2_decompose(&g)), g.clone());
        prop_assert_eq!(eta_weight(&g), eta_weight(&evaluate_word(&sl2_decompose(&g))));
    }

    #[test]
    fn eta_square_is_a_character(w1 in word(), w2 in word()) {
        let (g, h) = (evaluate_word(&w1), evaluate_word(&w2));
        let gh = g.mul(&h);
        prop_assert_eq!(eta_char(&gh, 2).unwrap(), &eta_char(&g, 2).unwrap() * &eta_char(&h, 2).unwrap());
    }

    #[test]
    fn eta_weight_matches_rademacher(w in word()) {
        // v_eta(g)^2 = e((a + d)/(12 c) - s(d, c) - 1/4) for c > 0
        let g = evaluate_word(&w);
        let (g, c) = if g.c > BigInt::from(0) { (g.clone(), g.c.clone()) } else { (g.neg(), -g.c.clone()) };
        prop_assume!(c > BigInt::from(0));
        let s = dedekind_sum(&g.d, &c).unwrap();
        let phase = BigRational::new(&g.a + &g.d, BigInt::from(12) * &c) - s - rat(1, 4);
        let diff = phase * rat(12, 1) - rat(eta_weight(&g), 1);
        prop_assert!(diff.is_integer());
        prop_assert!(diff.to_integer().is_multiple_of(&BigInt::from(12)));
    }

    #[test]
    fn paramodular_words_stay_in_gamma_t(t in 1i64..=12, w in group_word()) {
        let g = eval_group_word(t, &w);
        prop_assert!(g.is_symplectic());
        prop_assert!(membership(&g, t, GroupKind::GammaT));
        prop_assert!(g.mul(&g.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn chi_t1_is_a_character(t in 1i64..=12, w1 in group_word(), w2 in group_word()) {
        let (g, h) = (eval_group_word(t, &w1), eval_group_word(t, &w2));
        let gh = g.mul(&h).unwrap();
        prop_assert_eq!(chi_t1_matrix(&gh, t).unwrap(), &chi_t1_matrix(&g, t).unwrap() * &chi_t1_matrix(&h, t).unwrap());
        let comm = SpMatrix::product(&[&g, &h, &g.inverse().unwrap(), &h.inverse().unwrap()]).unwrap();
        prop_assert!(chi_t1_matrix(&comm, t).unwrap().is_one());
    }

    #[test]
    fn ab_characters_are_homomorphisms(t in 1i64..=36, x1 in -20i64..20, y1 in -20i64..20, x2 in -20i64..20, y2 in -20i64..20) {
        for ch in characters(t) {
            let v1 = char_eval(&ch, &[(AbLetter::A, x1), (AbLetter::B, y1)]).unwrap();
            let v2 = char_eval(&ch, &[(AbLetter::A, x2), (AbLetter::B, y2)]).unwrap();
            let both = char_eval(&ch, &[(AbLetter::A, x1), (AbLetter::B, y1), (AbLetter::A, x2), (AbLetter::B, y2)]).unwrap();
            prop_assert_eq!(both, &v1 * &v2);
            prop_assert!(char_eval(&ch, &[(AbLetter::A, t), (AbLetter::B, -t)]).unwrap().is_one());
        }
    }
}
