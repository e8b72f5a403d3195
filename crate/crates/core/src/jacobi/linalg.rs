use crate::arith::Cyc12;
use crate::error::{Error, Result};

/// Solves `rows * x = rhs` exactly. Requires a unique solution; surplus
/// equations must be consistent.
pub fn solve_unique(mut rows: Vec<Vec<Cyc12>>, mut rhs: Vec<Cyc12>, n: usize) -> Result<Vec<Cyc12>> {
    let mut pivots = Vec::with_capacity(n);
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            return Err(Error::Singular(format!("no pivot in column {col}")));
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][col].inv()?;
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        rhs[r] = &rhs[r] * &inv;
        let pivot = rows[r].clone();
        let pivot_rhs = rhs[r].clone();
        for (i, (row, b)) in rows.iter_mut().zip(rhs.iter_mut()).enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..n].iter_mut().zip(&pivot[col..n]) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
            *b -= &(&f * &pivot_rhs);
        }
        pivots.push(r);
        r += 1;
    }
    if rhs[r..].iter().any(|x| !x.is_zero()) {
        return Err(Error::Singular("inconsistent system".into()));
    }
    Ok(pivots.into_iter().map(|i| rhs[i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyc12 {
        Cyc12::from_int(n)
    }

    #[test]
    fn overdetermined_consistent() {
        let rows = vec![vec![c(1), c(1)], vec![c(1), c(-1)], vec![c(2), c(0)]];
        let x = solve_unique(rows, vec![c(3), c(1), c(4)], 2).unwrap();
        assert_eq!(x, vec![c(2), c(1)]);
        let rows = vec![vec![c(1), c(1)], vec![c(1), c(-1)], vec![c(2), c(0)]];
        assert!(solve_unique(rows, vec![c(3), c(1), c(5)], 2).is_err());
        assert!(solve_unique(vec![vec![c(1), c(1)]], vec![c(1)], 2).is_err());
    }
}
