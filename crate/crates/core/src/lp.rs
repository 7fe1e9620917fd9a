//! Exact feasibility of `{λ >= 0 : A λ = b}` over the rationals.
//!
//! A phase-one revised simplex with an explicit rational basis inverse and
//! Bland's smallest-index rule for both the entering and the leaving
//! variable, so it terminates on degenerate instances. Columns are integer
//! and small in practice; only the `m x m` inverse carries rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Outcome of a feasibility query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A nonnegative solution `λ` with `A λ = b`.
    Feasible(Vec<BigRational>),
    /// A Farkas certificate `y` with `y · A_j <= 0` for every column and `y · b > 0`.
    Infeasible(Vec<BigRational>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

struct Tableau<'a> {
    columns: &'a [Vec<i64>],
    /// Row sign flips applied so the right-hand side is nonnegative.
    sign: Vec<i64>,
    rows: usize,
    binv: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    x_basic: Vec<BigRational>,
    is_basic: Vec<bool>,
}

impl Tableau<'_> {
    fn structural(&self) -> usize {
        self.columns.len()
    }

    /// Entry `(row, var)` of the sign-adjusted constraint matrix `[D A | I]`.
    fn entry(&self, row: usize, var: usize) -> i64 {
        if var < self.structural() {
            self.sign[row] * self.columns[var][row]
        } else if var - self.structural() == row {
            1
        } else {
            0
        }
    }

    fn cost(&self, var: usize) -> i64 {
        i64::from(var >= self.structural())
    }

    /// Simplex multipliers `y = c_B B^{-1}` as integers over a common positive denominator.
    fn multipliers(&self) -> (Vec<BigRational>, Vec<BigInt>, BigInt) {
        let mut y = vec![BigRational::zero(); self.rows];
        for (r, &var) in self.basis.iter().enumerate() {
            if self.cost(var) != 0 {
                for (yk, b) in y.iter_mut().zip(&self.binv[r]) {
                    *yk += b;
                }
            }
        }
        let denom = y.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scaled = y.iter().map(|q| q.numer() * (&denom / q.denom())).collect();
        (y, scaled, denom)
    }

    /// Sign of the reduced cost `c_j - y · A_j`, scaled by the common denominator.
    fn reduced_cost_negative(&self, var: usize, scaled: &[BigInt], denom: &BigInt) -> bool {
        let mut acc = BigInt::zero();
        for (row, y) in scaled.iter().enumerate() {
            let a = self.entry(row, var);
            if a != 0 {
                acc += y * a;
            }
        }
        BigInt::from(self.cost(var)) * denom < acc
    }

    fn column(&self, var: usize) -> Vec<BigRational> {
        (0..self.rows)
            .map(|r| {
                let mut acc = BigRational::zero();
                for (k, b) in self.binv[r].iter().enumerate() {
                    let a = self.entry(k, var);
                    if a != 0 && !b.is_zero() {
                        acc += b * BigRational::from_integer(a.into());
                    }
                }
                acc
            })
            .collect()
    }

    fn pivot(&mut self, leave_row: usize, enter: usize, col: &[BigRational]) {
        let p = col[leave_row].clone();
        let pivot_row: Vec<BigRational> = self.binv[leave_row].iter().map(|b| b / &p).collect();
        let pivot_x = &self.x_basic[leave_row] / &p;
        for (r, factor) in col.iter().enumerate() {
            if r == leave_row || factor.is_zero() {
                continue;
            }
            for (b, pr) in self.binv[r].iter_mut().zip(&pivot_row) {
                if !pr.is_zero() {
                    *b -= factor * pr;
                }
            }
            self.x_basic[r] -= factor * &pivot_x;
        }
        self.binv[leave_row] = pivot_row;
        self.x_basic[leave_row] = pivot_x;
        self.is_basic[self.basis[leave_row]] = false;
        self.is_basic[enter] = true;
        self.basis[leave_row] = enter;
    }
}

/// Decides whether `b` lies in the cone generated by `columns`, i.e. whether
/// some `λ >= 0` has `Σ λ_j columns[j] = b`. Every column must have length `b.len()`.
pub fn feasibility(columns: &[Vec<i64>], rhs: &[i64]) -> Feasibility {
    let rows = rhs.len();
    assert!(
        columns.iter().all(|c| c.len() == rows),
        "column length must match the right-hand side"
    );
    let sign: Vec<i64> = rhs.iter().map(|&b| if b < 0 { -1 } else { 1 }).collect();
    let nvars = columns.len() + rows;
    let mut t = Tableau {
        columns,
        rows,
        binv: (0..rows)
            .map(|r| {
                (0..rows)
                    .map(|c| {
                        if r == c {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect(),
        basis: (columns.len()..nvars).collect(),
        x_basic: rhs
            .iter()
            .map(|&b| BigRational::from_integer(b.abs().into()))
            .collect(),
        is_basic: (0..nvars).map(|v| v >= columns.len()).collect(),
        sign,
    };

    loop {
        let (y, scaled, denom) = t.multipliers();
        let entering =
            (0..nvars).find(|&v| !t.is_basic[v] && t.reduced_cost_negative(v, &scaled, &denom));
        let Some(enter) = entering else {
            let infeasibility: BigRational = t
                .basis
                .iter()
                .zip(&t.x_basic)
                .filter(|(&v, _)| t.cost(v) != 0)
                .map(|(_, x)| x.clone())
                .sum();
            if infeasibility.is_zero() {
                let mut lambda = vec![BigRational::zero(); columns.len()];
                for (&v, x) in t.basis.iter().zip(&t.x_basic) {
                    if v < columns.len() {
                        lambda[v] = x.clone();
                    }
                }
                return Feasibility::Feasible(lambda);
            }
            let farkas = y
                .into_iter()
                .zip(&t.sign)
                .map(|(q, &s)| if s < 0 { -q } else { q })
                .collect();
            return Feasibility::Infeasible(farkas);
        };

        let col = t.column(enter);
        let mut leave: Option<(usize, BigRational)> = None;
        for (r, c) in col.iter().enumerate() {
            if !c.is_positive() {
                continue;
            }
            let ratio = &t.x_basic[r] / c;
            let better = match &leave {
                None => true,
                Some((best_r, best)) => {
                    ratio < *best || (ratio == *best && t.basis[r] < t.basis[*best_r])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let (leave_row, _) = leave.expect("phase-one objective is bounded below");
        t.pivot(leave_row, enter, &col);
    }
}
