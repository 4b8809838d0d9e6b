//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::weight::Q;

/// Solves `a x = b` where `a` is `m x n` with independent columns.
/// Returns `None` when the system is inconsistent or underdetermined.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..n {
        let p = (pivot_row..m).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, p);
        let inv = Q::from_integer(1.into()) / &rows[pivot_row][col];
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=n {
                    let d = &rows[pivot_row][c] * &f;
                    rows[r][c] -= d;
                }
            }
        }
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    Some(rows[..n].iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{q, qi};

    #[test]
    fn square_and_overdetermined() {
        let a = vec![vec![qi(2), qi(-1)], vec![qi(-1), qi(2)]];
        assert_eq!(solve(&a, &[qi(1), qi(1)]).unwrap(), vec![qi(1), qi(1)]);
        let a = vec![vec![qi(1), qi(0)], vec![qi(-1), qi(1)], vec![qi(0), qi(-1)]];
        assert_eq!(solve(&a, &[q(1, 2), q(1, 2), qi(-1)]).unwrap(), vec![q(1, 2), qi(1)]);
        assert!(solve(&a, &[qi(1), qi(1), qi(1)]).is_none());
    }
}
