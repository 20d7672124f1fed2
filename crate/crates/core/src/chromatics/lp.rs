//! Dense tableau simplex over exact rationals with Bland's anti-cycling rule.
//!
//! Solves `max c·x` subject to `A x <= b`, `x >= 0`, with `b >= 0` so the slack basis is
//! feasible from the start.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: BigRational,
    /// Optimal primal point.
    pub primal: Vec<BigRational>,
    /// Optimal dual multipliers, one per constraint row.
    pub dual: Vec<BigRational>,
    pub pivots: usize,
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn maximize(
    c: &[BigRational],
    a: &[Vec<BigRational>],
    b: &[BigRational],
) -> Result<LpSolution> {
    let rows = a.len();
    let vars = c.len();
    if b.len() != rows || a.iter().any(|r| r.len() != vars) {
        return Err(Error::param("inconsistent LP dimensions"));
    }
    if b.iter().any(|x| x.is_negative()) {
        return Err(Error::param("right-hand side must be nonnegative"));
    }
    let cols = vars + rows;
    // tableau rows: [A | I | b]
    let mut t: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut row = Vec::with_capacity(cols + 1);
            row.extend(a[i].iter().cloned());
            row.extend((0..rows).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row.push(b[i].clone());
            row
        })
        .collect();
    // reduced costs, objective value in the last slot
    let mut obj: Vec<BigRational> = c
        .iter()
        .cloned()
        .chain((0..=rows).map(|_| BigRational::zero()))
        .collect();
    let mut basis: Vec<usize> = (vars..cols).collect();
    let mut pivots = 0;

    while let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][cols] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((r, _)) = leave else {
            return Err(Error::Invariant("LP is unbounded".into()));
        };
        pivot(&mut t, &mut obj, r, enter);
        basis[r] = enter;
        pivots += 1;
    }

    let mut primal = vec![BigRational::zero(); vars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < vars {
            primal[bv] = t[i][cols].clone();
        }
    }
    let dual = (0..rows).map(|i| -obj[vars + i].clone()).collect();
    Ok(LpSolution {
        value: -obj[cols].clone(),
        primal,
        dual,
        pivots,
    })
}

fn pivot(t: &mut [Vec<BigRational>], obj: &mut [BigRational], r: usize, col: usize) {
    let p = t[r][col].clone();
    for x in t[r].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[col].is_zero() {
            continue;
        }
        let f = row[col].clone();
        for (x, y) in row.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for (x, y) in obj.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_problem() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let c = vec![big(3), big(5)];
        let a = vec![
            vec![big(1), big(0)],
            vec![big(0), big(2)],
            vec![big(3), big(2)],
        ];
        let b = vec![big(4), big(12), big(18)];
        let s = maximize(&c, &a, &b).unwrap();
        assert_eq!(s.value, big(36));
        assert_eq!(s.primal, vec![big(2), big(6)]);
        // strong duality
        let dual_obj: BigRational = s.dual.iter().zip(&b).map(|(y, bi)| y * bi).sum();
        assert_eq!(dual_obj, s.value);
    }

    #[test]
    fn unbounded_detected() {
        let c = vec![big(1)];
        let a = vec![vec![big(-1)]];
        assert!(maximize(&c, &a, &[big(1)]).is_err());
    }
}
