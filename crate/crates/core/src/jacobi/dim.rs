/// {m}_12: floor(m/12), minus one when m = 2 mod 12.
fn brace12(m: i64) -> i64 {
    m.div_euclid(12) - i64::from(m.rem_euclid(12) == 2)
}

/// Dimension of the space of Jacobi cusp forms of weight k and index m:
/// sum_{j=0}^{m} {k+2j}_12 - floor(j^2/4m) for even k,
/// sum_{j=1}^{m-1} {k+2j-1}_12 - floor(j^2/4m) for odd k.
/// Terms are summed as written, without clamping.
pub fn dim_cusp(k: i64, m: i64) -> i64 {
    assert!(k >= 1 && m >= 1, "dim_cusp needs positive weight and index");
    if k % 2 == 0 {
        (0..=m).map(|j| brace12(k + 2 * j) - (j * j).div_euclid(4 * m)).sum()
    } else {
        (1..m).map(|j| brace12(k + 2 * j - 1) - (j * j).div_euclid(4 * m)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        for (k, m, d) in [
            (6, 5, 1),
            (6, 3, 1),
            (6, 6, 1),
            (8, 3, 1),
            (12, 1, 1),
            (3, 13, 1),
            (3, 8, 0),
            (3, 16, 0),
            (6, 2, 0),
            (4, 1, 0),
            (7, 3, 0),
            (10, 1, 1),
        ] {
            assert_eq!(dim_cusp(k, m), d, "({k}, {m})");
        }
        for m in 1..=12 {
            assert_eq!(dim_cusp(3, m), 0, "(3, {m})");
        }
    }
}
