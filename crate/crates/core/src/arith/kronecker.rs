/// The character (-4/m): 1 for m = 1 mod 4, -1 for m = 3 mod 4, 0 for even m.
pub fn kronecker_minus4(m: i64) -> i64 {
    match m.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// The character (12/n): 1 for n = +-1 mod 12, -1 for n = +-5 mod 12, else 0.
pub fn kronecker_12(n: i64) -> i64 {
    match n.rem_euclid(12) {
        1 | 11 => 1,
        5 | 7 => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Jacobi-symbol based reference: (-4/m) = (-1)^((m-1)/2) on odd m and
    // (12/n) = (3/n)(4/n)-style evaluation via quadratic reciprocity tables.
    fn jacobi_symbol(mut a: i64, mut n: i64) -> i64 {
        assert!(n > 0 && n % 2 == 1);
        a = a.rem_euclid(n);
        let mut t = 1;
        while a != 0 {
            while a % 2 == 0 {
                a /= 2;
                if matches!(n % 8, 3 | 5) {
                    t = -t;
                }
            }
            std::mem::swap(&mut a, &mut n);
            if a % 4 == 3 && n % 4 == 3 {
                t = -t;
            }
            a %= n;
        }
        if n == 1 {
            t
        } else {
            0
        }
    }

    #[test]
    fn minus4_matches_parity_formula() {
        for m in -50..50 {
            let expect = if m % 2 == 0 {
                0
            } else if (m - 1i64).rem_euclid(4) == 0 {
                1
            } else {
                -1
            };
            assert_eq!(kronecker_minus4(m), expect, "m = {m}");
        }
    }

    #[test]
    fn twelve_matches_jacobi_symbol() {
        // for n > 0 coprime to 6, (12/n) = (3/n) since (4/n) = 1
        for n in 1..500i64 {
            let expect = if n % 2 == 0 || n % 3 == 0 {
                0
            } else {
                jacobi_symbol(3, n)
            };
            assert_eq!(kronecker_12(n), expect, "n = {n}");
        }
        assert_eq!(kronecker_12(-5), -1);
        assert_eq!(kronecker_12(-1), 1);
    }
}
