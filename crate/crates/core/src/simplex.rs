//! Exact rational phase-1 simplex with Bland's rule.
//!
//! Solves feasibility of `{x >= 0 : a_k . x (<=, >=, =) b_k}`. A feasible
//! answer carries the point; an infeasible one carries Farkas multipliers
//! `y` with `y_k >= 0` on `<=` rows, `y_k <= 0` on `>=` rows,
//! `sum_k y_k a_k >= 0` componentwise and `sum_k y_k b_k < 0`.
//! Both can be re-checked by substitution without trusting the solver.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    /// Sparse row: `(variable index, coefficient)`.
    pub coeffs: Vec<(usize, ExactScalar)>,
    pub relation: Relation,
    pub rhs: ExactScalar,
}

impl Constraint {
    pub fn new(coeffs: Vec<(usize, ExactScalar)>, relation: Relation, rhs: ExactScalar) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn lhs(&self, x: &[ExactScalar]) -> ExactScalar {
        self.coeffs.iter().map(|(j, c)| c * &x[*j]).sum()
    }

    pub fn is_satisfied(&self, x: &[ExactScalar]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// Outcome of a feasibility solve.
#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<ExactScalar>),
    Infeasible(Vec<ExactScalar>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// A system of linear constraints over non-negative variables.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinearSystem {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Constraint) {
        debug_assert!(c.coeffs.iter().all(|(j, _)| *j < self.num_vars));
        self.constraints.push(c);
    }

    /// True iff `x` has the right length, is non-negative and satisfies
    /// every constraint exactly.
    pub fn check_point(&self, x: &[ExactScalar]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| c.is_satisfied(x))
    }

    /// True iff `y` is a valid Farkas certificate of infeasibility.
    pub fn check_farkas(&self, y: &[ExactScalar]) -> bool {
        if y.len() != self.constraints.len() {
            return false;
        }
        let mut combo = vec![ExactScalar::zero(); self.num_vars];
        let mut rhs = ExactScalar::zero();
        for (c, yk) in self.constraints.iter().zip(y) {
            let sign_ok = match c.relation {
                Relation::Le => !yk.is_negative(),
                Relation::Ge => !yk.is_positive(),
                Relation::Eq => true,
            };
            if !sign_ok {
                return false;
            }
            if yk.is_zero() {
                continue;
            }
            for (j, a) in &c.coeffs {
                combo[*j] += yk * a;
            }
            rhs += yk * &c.rhs;
        }
        combo.iter().all(|v| !v.is_negative()) && rhs.is_negative()
    }

    /// Phase-1 simplex. Deterministic: Bland's rule picks the lowest-index
    /// entering column and breaks ratio ties by the lowest basic index.
    pub fn solve(&self) -> Feasibility {
        let m = self.constraints.len();
        let n = self.num_vars;
        let slack_cols: Vec<Option<usize>> = {
            let mut next = n;
            self.constraints
                .iter()
                .map(|c| match c.relation {
                    Relation::Eq => None,
                    _ => {
                        next += 1;
                        Some(next - 1)
                    }
                })
                .collect()
        };
        let n_struct = n + slack_cols.iter().flatten().count();
        let art0 = n_struct;
        let cols = n_struct + m;

        // Row k: flip * (a_k, slack) | flip * b_k, flipped so the rhs is >= 0.
        let mut tab: Vec<Vec<ExactScalar>> = Vec::with_capacity(m);
        let mut rhs: Vec<ExactScalar> = Vec::with_capacity(m);
        let mut flips: Vec<bool> = Vec::with_capacity(m);
        for (k, c) in self.constraints.iter().enumerate() {
            let mut row = vec![ExactScalar::zero(); cols];
            for (j, a) in &c.coeffs {
                row[*j] += a;
            }
            if let Some(s) = slack_cols[k] {
                row[s] = match c.relation {
                    Relation::Le => ExactScalar::one(),
                    _ => -ExactScalar::one(),
                };
            }
            let flip = c.rhs.is_negative();
            let mut b = c.rhs.clone();
            if flip {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
                b = -b;
            }
            row[art0 + k] = ExactScalar::one();
            tab.push(row);
            rhs.push(b);
            flips.push(flip);
        }
        let mut basis: Vec<usize> = (0..m).map(|k| art0 + k).collect();

        // Reduced costs for min sum(artificials): r_j = c_j - sum_k tab[k][j].
        let mut reduced = vec![ExactScalar::zero(); cols];
        for (j, r) in reduced.iter_mut().enumerate() {
            let cj = if j >= art0 {
                ExactScalar::one()
            } else {
                ExactScalar::zero()
            };
            let col_sum: ExactScalar = tab.iter().map(|row| &row[j]).sum();
            *r = cj - col_sum;
        }

        while let Some(enter) = reduced.iter().position(|r| r.is_negative()) {
            let mut leave: Option<(usize, ExactScalar)> = None;
            for k in 0..m {
                if !tab[k][enter].is_positive() {
                    continue;
                }
                let ratio = &rhs[k] / &tab[k][enter];
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio || (ratio == *best_ratio && basis[k] < basis[*best])
                    }
                };
                if better {
                    leave = Some((k, ratio));
                }
            }
            // The phase-1 objective is bounded below by zero, so a
            // negative reduced cost always has a blocking row.
            let (pr, _) = leave.expect("phase-1 objective is bounded");
            pivot(&mut tab, &mut rhs, &mut reduced, pr, enter);
            basis[pr] = enter;
        }

        let objective: ExactScalar = basis
            .iter()
            .zip(&rhs)
            .filter(|(b, _)| **b >= art0)
            .map(|(_, v)| v.clone())
            .sum();

        if objective.is_zero() {
            let mut x = vec![ExactScalar::zero(); n];
            for (k, &b) in basis.iter().enumerate() {
                if b < n {
                    x[b] = rhs[k].clone();
                }
            }
            Feasibility::Feasible(x)
        } else {
            // Phase-1 duals: y_k = 1 - reduced cost of artificial k. Map them
            // back to the unflipped rows and negate into the `<= 0` form.
            let y = (0..m)
                .map(|k| {
                    let ystd = ExactScalar::one() - &reduced[art0 + k];
                    if flips[k] {
                        ystd
                    } else {
                        -ystd
                    }
                })
                .collect();
            Feasibility::Infeasible(y)
        }
    }
}

fn pivot(
    tab: &mut [Vec<ExactScalar>],
    rhs: &mut [ExactScalar],
    reduced: &mut [ExactScalar],
    pr: usize,
    pc: usize,
) {
    let inv = tab[pr][pc].recip();
    for v in tab[pr].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    rhs[pr] *= &inv;
    let pivot_row = tab[pr].clone();
    let pivot_rhs = rhs[pr].clone();
    let nz: Vec<usize> = (0..pivot_row.len())
        .filter(|&j| !pivot_row[j].is_zero())
        .collect();
    for k in 0..tab.len() {
        if k == pr || tab[k][pc].is_zero() {
            continue;
        }
        let factor = tab[k][pc].clone();
        for &j in &nz {
            let delta = &factor * &pivot_row[j];
            tab[k][j] -= delta;
        }
        rhs[k] -= &factor * &pivot_rhs;
    }
    if !reduced[pc].is_zero() {
        let factor = reduced[pc].clone();
        for &j in &nz {
            let delta = &factor * &pivot_row[j];
            reduced[j] -= delta;
        }
    }
}
