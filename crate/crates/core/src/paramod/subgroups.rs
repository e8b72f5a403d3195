use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::abelianization;
use super::characters::{characters, CharacterAB};

/// Subgroup of Z/u x Z/v in Hermite normal form: generated by (a, b) and
/// (0, d) with a | u, d | v, 0 <= b < d and d | (u/a) b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AbelianSubgroup {
    pub u: i64,
    pub v: i64,
    pub a: i64,
    pub b: i64,
    pub d: i64,
}

impl AbelianSubgroup {
    pub fn contains(&self, x: i64, y: i64) -> bool {
        let (x, y) = (x.rem_euclid(self.u), y.rem_euclid(self.v));
        x % self.a == 0 && (y - (x / self.a) * self.b).rem_euclid(self.d) == 0
    }

    pub fn order(&self) -> i64 {
        (self.u / self.a) * (self.v / self.d)
    }

    pub fn elements(&self) -> BTreeSet<(i64, i64)> {
        let mut out = BTreeSet::new();
        for i in 0..self.u / self.a {
            for j in 0..self.v / self.d {
                out.insert((i * self.a, (i * self.b + j * self.d).rem_euclid(self.v)));
            }
        }
        out
    }

    pub fn is_subgroup_of(&self, o: &AbelianSubgroup) -> bool {
        o.contains(self.a, self.b) && o.contains(0, self.d)
    }

    /// Canonical form of the subgroup generated by `gens`.
    pub fn generated_by(u: i64, v: i64, gens: &[(i64, i64)]) -> AbelianSubgroup {
        let mut elems = BTreeSet::from([(0, 0)]);
        let mut frontier = vec![(0, 0)];
        while let Some((x, y)) = frontier.pop() {
            for &(gx, gy) in gens {
                let n = ((x + gx).rem_euclid(u), (y + gy).rem_euclid(v));
                if elems.insert(n) {
                    frontier.push(n);
                }
            }
        }
        Self::from_closed_set(u, v, &elems)
    }

    /// Reads the normal form off a set already closed under addition.
    pub fn from_closed_set(u: i64, v: i64, elems: &BTreeSet<(i64, i64)>) -> AbelianSubgroup {
        let a = elems.iter().fold(u, |g, &(x, _)| g.gcd(&x));
        let d = elems.iter().filter(|e| e.0 == 0).fold(v, |g, &(_, y)| g.gcd(&y));
        let b = if a == u {
            0
        } else {
            elems.iter().find(|e| e.0 == a).map_or(0, |e| e.1.rem_euclid(d))
        };
        AbelianSubgroup { u, v, a, b, d }
    }

    /// Generators written as words A^x B^y under the identification
    /// A^x B^y -> (x mod u, (x + y) mod v).
    pub fn generator_words(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.a != self.u {
            out.push(word(self.a, self.b - self.a));
        }
        if self.d != self.v {
            out.push(word(0, self.d));
        }
        out
    }
}

fn word(x: i64, y: i64) -> String {
    let part = |s: &str, e: i64| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{e}"),
    };
    let w = part("A", x) + &part("B", y);
    if w.is_empty() {
        "1".into()
    } else {
        w
    }
}

impl fmt::Display for AbelianSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.generator_words();
        if g.is_empty() {
            write!(f, "<1>")
        } else {
            write!(f, "<{}>", g.join(", "))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupLattice {
    pub u: i64,
    pub v: i64,
    pub subgroups: Vec<AbelianSubgroup>,
    /// (i, j) with subgroups[i] a proper subgroup of subgroups[j]
    pub inclusions: Vec<(usize, usize)>,
}

/// Every subgroup of Z/u x Z/v, in normal form.
pub fn subgroup_lattice(u: i64, v: i64) -> SubgroupLattice {
    let mut subgroups = Vec::new();
    for a in (1..=u).filter(|a| u % a == 0) {
        for d in (1..=v).filter(|d| v % d == 0) {
            for b in 0..d {
                if ((u / a) * b) % d == 0 {
                    subgroups.push(AbelianSubgroup { u, v, a, b, d });
                }
            }
        }
    }
    subgroups.sort_by_key(|s| (s.order(), *s));
    let mut inclusions = Vec::new();
    for (i, h) in subgroups.iter().enumerate() {
        for (j, k) in subgroups.iter().enumerate() {
            if i != j && h.is_subgroup_of(k) {
                inclusions.push((i, j));
            }
        }
    }
    SubgroupLattice {
        u,
        v,
        subgroups,
        inclusions,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelRow {
    pub subgroup: AbelianSubgroup,
    pub generators: Vec<String>,
    pub characters: Vec<CharacterAB>,
    pub char_order: i64,
}

/// Groups the characters of Gamma_t by their kernels in Z/t1 x Z/t2.
pub fn kernel_table(t: i64) -> Vec<KernelRow> {
    let (t1, t2) = abelianization(t);
    let mut by_kernel: BTreeMap<AbelianSubgroup, Vec<CharacterAB>> = BTreeMap::new();
    for chi in characters(t) {
        let mut elems = BTreeSet::new();
        for u1 in 0..t1 {
            for u2 in 0..t2 {
                if chi.exponent_on_class(u1, u2) == 0 {
                    elems.insert((u1, u2));
                }
            }
        }
        by_kernel
            .entry(AbelianSubgroup::from_closed_set(t1, t2, &elems))
            .or_default()
            .push(chi);
    }
    let mut rows: Vec<KernelRow> = by_kernel
        .into_iter()
        .map(|(subgroup, characters)| KernelRow {
            subgroup,
            generators: subgroup.generator_words(),
            char_order: characters[0].order(),
            characters,
        })
        .collect();
    rows.sort_by_key(|r| (-r.char_order, r.subgroup.order(), r.subgroup));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z3_z6() {
        let lat = subgroup_lattice(3, 6);
        assert_eq!(lat.subgroups.len(), 12);
        let ker = AbelianSubgroup::generated_by(3, 6, &[(2, 2), (0, 2)]);
        assert_eq!(ker.order(), 9);
        assert_eq!(lat.subgroups.iter().filter(|s| s.is_subgroup_of(&ker)).count(), 6);
    }

    #[test]
    fn normal_form_round_trip() {
        for (u, v) in [(2, 4), (3, 6), (4, 4), (6, 12)] {
            for s in subgroup_lattice(u, v).subgroups {
                let e = s.elements();
                assert_eq!(e.len() as i64, s.order());
                assert_eq!(AbelianSubgroup::from_closed_set(u, v, &e), s);
                assert!(e.iter().all(|&(x, y)| s.contains(x, y)));
            }
        }
    }

    #[test]
    fn kernel_rows_level_three() {
        let rows = kernel_table(3);
        assert_eq!(rows.len(), 10);
        let a = AbelianSubgroup::generated_by(3, 6, &[(1, 1)]);
        let row = rows.iter().find(|r| r.subgroup == a).unwrap();
        assert_eq!(row.char_order, 3);
        let names: Vec<_> = row.characters.iter().map(|c| (c.a, c.b)).collect();
        assert_eq!(names, [(6, 2), (6, 4)]);
    }
}
