//! Exact rational linear feasibility: find `x ≥ 0` with `A x = b`.
//!
//! Two stages. Gauss–Jordan elimination first brings the equality system to
//! reduced row echelon form, dropping redundant rows and detecting outright
//! inconsistency. A phase-1 simplex with artificial variables and Bland's
//! rule (lowest eligible index enters; ratio ties resolved towards the
//! lowest-index basic variable) then decides feasibility and produces a
//! vertex. Bland's rule never cycles, so termination is unconditional; all
//! arithmetic is exact.

use crate::rational::Rational;
use num_traits::{Signed, Zero};

/// Row-reduced equality system: independent rows only.
pub(crate) struct ReducedSystem {
    pub rows: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
    /// Rank of the coefficient matrix (not counting the right-hand side).
    pub rank: usize,
}

/// Gauss–Jordan to reduced row echelon form. `None` when some row reduces
/// to `0 = c` with `c ≠ 0`.
pub(crate) fn reduce(
    mut rows: Vec<Vec<Rational>>,
    mut rhs: Vec<Rational>,
) -> Option<ReducedSystem> {
    assert_eq!(rows.len(), rhs.len());
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(p) = (pivot_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        rhs.swap(pivot_row, p);
        let inv = rows[pivot_row][col].clone();
        for v in rows[pivot_row].iter_mut() {
            *v = &*v / &inv;
        }
        rhs[pivot_row] = &rhs[pivot_row] / &inv;
        for r in 0..m {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..n {
                    let delta = &rows[pivot_row][c] * &f;
                    rows[r][c] = &rows[r][c] - &delta;
                }
                let delta = &rhs[pivot_row] * &f;
                rhs[r] = &rhs[r] - &delta;
            }
        }
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    // rows past the rank must have zero right-hand side
    for r in pivot_row..m {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    rows.truncate(pivot_row);
    rhs.truncate(pivot_row);
    Some(ReducedSystem {
        rank: pivot_row,
        rows,
        rhs,
    })
}

/// Feasibility of `{x ≥ 0 : A x = b}`. Returns a feasible vertex if any.
pub(crate) fn feasible_point(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.first().map_or(0, Vec::len);
    let reduced = reduce(a, b)?;
    let mut rows = reduced.rows;
    let mut rhs = reduced.rhs;
    let r = rows.len();
    if r == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    for i in 0..r {
        if rhs[i].is_negative() {
            for v in rows[i].iter_mut() {
                *v = -v.clone();
            }
            rhs[i] = -rhs[i].clone();
        }
    }
    phase_one(rows, rhs, n)
}

/// Phase-1 simplex: minimise the sum of artificial variables over
/// `A x + I y = b`, `x, y ≥ 0`, `b ≥ 0`. Feasible iff the optimum is zero.
fn phase_one(a: Vec<Vec<Rational>>, b: Vec<Rational>, n: usize) -> Option<Vec<Rational>> {
    let r = a.len();
    let width = n + r + 1; // structural + artificial + rhs
    let mut tab: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            row.extend(a[i].iter().cloned());
            for k in 0..r {
                row.push(if k == i {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                });
            }
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + r).collect();
    // reduced-cost row for min Σy with the artificial basis: subtract every
    // constraint row from the cost row (c_x = 0, c_y = 1)
    let mut cost = vec![Rational::zero(); width];
    for j in n..n + r {
        cost[j] = Rational::from_integer(1.into());
    }
    for row in &tab {
        for j in 0..width {
            cost[j] = &cost[j] - &row[j];
        }
    }
    loop {
        // Bland: lowest-index column with negative reduced cost
        let Some(enter) = (0..n + r).find(|&j| cost[j].is_negative()) else {
            break;
        };
        // ratio test; ties go to the lowest-index basic variable
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(p) = leave else {
            // unbounded phase-1 objective cannot happen (it is bounded below
            // by zero); treat defensively as infeasible
            return None;
        };
        // pivot
        let piv = tab[p][enter].clone();
        for v in tab[p].iter_mut() {
            *v = &*v / &piv;
        }
        for i in 0..r {
            if i != p && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..width {
                    let delta = &tab[p][j] * &f;
                    tab[i][j] = &tab[i][j] - &delta;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..width {
                let delta = &tab[p][j] * &f;
                cost[j] = &cost[j] - &delta;
            }
        }
        basis[p] = enter;
    }
    // objective value is -cost[rhs]
    let objective = -cost[width - 1].clone();
    if !objective.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = tab[i][width - 1].clone();
        }
    }
    debug_assert!(x.iter().all(|v| !v.is_negative()));
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn rvec(vals: &[(i64, i64)]) -> Vec<Rational> {
        vals.iter().map(|&(p, q)| rat(p, q)).collect()
    }

    #[test]
    fn reduce_detects_inconsistency_and_rank() {
        // x + y = 1, x + y = 2: inconsistent
        let a = vec![rvec(&[(1, 1), (1, 1)]), rvec(&[(1, 1), (1, 1)])];
        assert!(reduce(a, vec![rat_int(1), rat_int(2)]).is_none());
        // duplicated row: rank 1
        let a = vec![rvec(&[(1, 1), (1, 1)]), rvec(&[(2, 1), (2, 1)])];
        let r = reduce(a, vec![rat_int(1), rat_int(2)]).unwrap();
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn simple_feasible_system() {
        // x + y = 1 has the vertex solutions (1,0) and (0,1)
        let x = feasible_point(vec![rvec(&[(1, 1), (1, 1)])], vec![rat_int(1)]).unwrap();
        assert_eq!(x.iter().fold(Rational::zero(), |a, b| a + b), rat_int(1));
        assert!(x.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn negativity_forced_means_infeasible() {
        // x + y = 1 and x - y = 3 force y = -1
        let a = vec![rvec(&[(1, 1), (1, 1)]), rvec(&[(1, 1), (-1, 1)])];
        assert!(feasible_point(a, vec![rat_int(1), rat_int(3)]).is_none());
    }

    #[test]
    fn redundant_rows_are_harmless() {
        let a = vec![
            rvec(&[(1, 1), (1, 1), (1, 1)]),
            rvec(&[(2, 1), (2, 1), (2, 1)]),
            rvec(&[(1, 1), (-1, 1), (0, 1)]),
        ];
        let x = feasible_point(a, vec![rat_int(1), rat_int(2), rat_int(0)]).unwrap();
        assert_eq!(x[0], x[1]);
        assert_eq!(
            x.iter().fold(Rational::zero(), |a, b| a + b),
            rat_int(1)
        );
    }

    #[test]
    fn fractional_solution() {
        // x + 2y = 1, x - y = 0 → x = y = 1/3
        let a = vec![rvec(&[(1, 1), (2, 1)]), rvec(&[(1, 1), (-1, 1)])];
        let x = feasible_point(a, vec![rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(x, vec![rat(1, 3), rat(1, 3)]);
    }

    #[test]
    fn zero_system_is_feasible_at_origin() {
        let x = feasible_point(vec![rvec(&[(0, 1), (0, 1)])], vec![rat_int(0)]).unwrap();
        assert_eq!(x, vec![rat_int(0), rat_int(0)]);
    }
}
