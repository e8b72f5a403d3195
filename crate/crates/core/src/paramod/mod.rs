//! The paramodular group of level t: exact matrices, the commutator
//! identities behind its abelianization, the character lattice and the
//! subgroup lattice of the abelianization.

mod characters;
mod generators;
mod identities;
mod matrix;
mod subgroups;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use characters::{char_eval, characters, chi_q, chi_t1_matrix, chi_t1_prime, word_matrix, AbLetter, CharacterAB};
pub use generators::{generators, heisenberg, heisenberg_params, i_inf, j_inf, v_h, v_t, Generators};
pub use identities::{identity_suite, IdentityItem, IdentityReport, IdentityStatus};
pub use matrix::{paramodular_form, standard_form, Mat4, Realization, SpMatrix};
pub use subgroups::{kernel_table, subgroup_lattice, AbelianSubgroup, KernelRow, SubgroupLattice};

use crate::arith::rint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    /// Sp(W_t, Z), integral realization
    Tilde,
    GammaT,
    GammaTPlus,
}

impl std::str::FromStr for GroupKind {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "tilde" => Ok(GroupKind::Tilde),
            "gamma_t" => Ok(GroupKind::GammaT),
            "gamma_t_plus" => Ok(GroupKind::GammaTPlus),
            _ => Err(crate::error::invalid(format!("unknown group {s:?}"))),
        }
    }
}

/// Multiplier of entry (i, j) in the integrality pattern of Gamma_t: the
/// entry divided by it must be integral.
fn gamma_t_pattern(t: i64, i: usize, j: usize) -> num_rational::BigRational {
    let tt = rint(t);
    match (i, j) {
        (0, 1) | (2, 1) | (3, 0) | (3, 1) | (3, 2) => tt,
        (1, 3) => tt.recip(),
        _ => rint(1),
    }
}

fn in_gamma_t(g: &SpMatrix, t: i64) -> bool {
    if g.t != t || g.sqrt_t || g.realization != Realization::Rational || !g.is_symplectic() {
        return false;
    }
    (0..4).all(|i| (0..4).all(|j| (&g.entries[i][j] / gamma_t_pattern(t, i, j)).is_integer()))
}

fn in_tilde(g: &SpMatrix, t: i64) -> bool {
    if g.t != t || g.sqrt_t || g.realization != Realization::Tilde || !g.is_integral() || !g.is_symplectic() {
        return false;
    }
    let tt = num_bigint::BigInt::from(t);
    [(0, 1), (0, 3), (2, 1), (2, 3)]
        .iter()
        .all(|&(i, j)| (g.entries[i][j].numer() % &tt).is_zero())
}

/// Membership in Sp(W_t, Z), Gamma_t or Gamma_t^+ = Gamma_t u Gamma_t V_t.
/// Matrices in the wrong realization are converted first.
pub fn membership(g: &SpMatrix, t: i64, group: GroupKind) -> bool {
    match group {
        GroupKind::Tilde => match g.to_tilde() {
            Ok(h) => in_tilde(&h, t),
            Err(_) => false,
        },
        GroupKind::GammaT => in_gamma_t(&g.to_rational(), t),
        GroupKind::GammaTPlus => {
            let r = g.to_rational();
            if !r.sqrt_t {
                return in_gamma_t(&r, t);
            }
            r.t == t && r.mul(&v_t(t)).is_ok_and(|h| in_gamma_t(&h, t))
        }
    }
}

/// (t1, t2) with Gamma_t / Gamma_t' = Z/t1 x Z/t2.
pub fn abelianization(t: i64) -> (i64, i64) {
    (t.gcd(&12), (2 * t).gcd(&12))
}

/// Abelianization of Gamma_t^+, Z/2 x Z/t2.
pub fn plus_abelianization(t: i64) -> (i64, i64) {
    (2, abelianization(t).1)
}
