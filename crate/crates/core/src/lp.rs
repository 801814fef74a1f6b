// Exact phase-1 revised simplex: find x >= 0 with A x = b, b >= 0, where the
// columns of A are 0/1 vectors given by their row supports.

use num_traits::{One, Signed, Zero};

use crate::numeric::Rational;

// Consecutive degenerate pivots tolerated under Dantzig pricing before
// switching to Bland's rule for the rest of the solve.
const DEGENERATE_STREAK: usize = 50;

pub(crate) enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

pub(crate) fn solve(rows: usize, columns: &[Vec<usize>], rhs: &[Rational]) -> Feasibility {
    debug_assert_eq!(rhs.len(), rows);
    let ncols = columns.len();
    // Variables 0..ncols are structural, ncols..ncols+rows artificial.
    let mut basis: Vec<usize> = (ncols..ncols + rows).collect();
    let mut binv: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut xb: Vec<Rational> = rhs.to_vec();
    let mut in_basis = vec![false; ncols];
    let mut bland = false;
    let mut streak = 0usize;

    loop {
        // Dual prices y = c_B^T B^-1 with c = 1 on artificials only.
        let mut y = vec![Rational::zero(); rows];
        for (i, &var) in basis.iter().enumerate() {
            if var >= ncols {
                for (yj, bij) in y.iter_mut().zip(&binv[i]) {
                    *yj += bij;
                }
            }
        }
        let mut entering: Option<(usize, Rational)> = None;
        for (j, col) in columns.iter().enumerate() {
            if in_basis[j] {
                continue;
            }
            let reduced = -col.iter().fold(Rational::zero(), |acc, &r| acc + &y[r]);
            if !reduced.is_negative() {
                continue;
            }
            if bland {
                entering = Some((j, reduced));
                break;
            }
            if entering.as_ref().is_none_or(|(_, best)| reduced < *best) {
                entering = Some((j, reduced));
            }
        }
        let Some((j, _)) = entering else {
            break;
        };

        let direction: Vec<Rational> = binv
            .iter()
            .map(|row| {
                columns[j]
                    .iter()
                    .fold(Rational::zero(), |acc, &r| acc + &row[r])
            })
            .collect();
        let mut leave: Option<(usize, Rational)> = None;
        for (i, d) in direction.iter().enumerate() {
            if !d.is_positive() {
                continue;
            }
            let ratio = &xb[i] / d;
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase-1 objective is bounded below by zero, so a ray cannot occur.
        let (pivot_row, step) = leave.expect("bounded phase-1 problem");

        if step.is_zero() {
            streak += 1;
            if streak > DEGENERATE_STREAK {
                bland = true;
            }
        } else {
            streak = 0;
        }

        let pivot = direction[pivot_row].clone();
        for v in binv[pivot_row].iter_mut() {
            *v /= &pivot;
        }
        xb[pivot_row] /= &pivot;
        let prow = binv[pivot_row].clone();
        let px = xb[pivot_row].clone();
        for (i, d) in direction.iter().enumerate() {
            if i == pivot_row || d.is_zero() {
                continue;
            }
            for (v, p) in binv[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= d * p;
                }
            }
            xb[i] -= d * &px;
        }
        let old = basis[pivot_row];
        if old < ncols {
            in_basis[old] = false;
        }
        basis[pivot_row] = j;
        in_basis[j] = true;
    }

    let infeasibility = basis
        .iter()
        .zip(&xb)
        .filter(|(&var, _)| var >= ncols)
        .fold(Rational::zero(), |acc, (_, x)| acc + x);
    if infeasibility.is_positive() {
        return Feasibility::Infeasible;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (&var, value) in basis.iter().zip(xb) {
        if var < ncols {
            x[var] = value;
        }
    }
    Feasibility::Feasible(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, ratio};

    #[test]
    fn simple_feasible() {
        // x0 + x1 = 1, x1 = 1/3
        let cols = vec![vec![0], vec![0, 1]];
        match solve(2, &cols, &[int(1), ratio(1, 3)]) {
            Feasibility::Feasible(x) => assert_eq!(x, vec![ratio(2, 3), ratio(1, 3)]),
            Feasibility::Infeasible => panic!("feasible"),
        }
    }

    #[test]
    fn simple_infeasible() {
        // x0 = 1 and x0 = 2
        let cols = vec![vec![0, 1]];
        assert!(matches!(
            solve(2, &cols, &[int(1), int(2)]),
            Feasibility::Infeasible
        ));
    }
}
