//! Dense bounded-variable primal simplex over exact rationals.
//!
//! Upper bounds are handled implicitly (nonbasic variables rest at either
//! bound), so a box-constrained model keeps only its real rows in the
//! tableau. Entering and leaving variables follow Bland's rule.

use super::lp::Sense;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `min c x` subject to `rows` and `0 <= x <= upper`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub objective: Vec<BigRational>,
    pub rows: Vec<(Vec<(usize, BigRational)>, Sense, BigRational)>,
    /// `None` is an unbounded variable.
    pub upper: Vec<Option<BigRational>>,
}

/// Optimal vertex with row duals.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplexSolution {
    pub x: Vec<BigRational>,
    pub value: BigRational,
    /// One multiplier per row: `>= 0` on `>=` rows, `<= 0` on `<=` rows.
    pub duals: Vec<BigRational>,
    pub pivots: usize,
}

struct Tableau {
    /// `rows x cols` coefficients, then the reduced-cost row.
    t: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    beta: Vec<BigRational>,
    upper: Vec<Option<BigRational>>,
    at_upper: Vec<bool>,
    pivots: usize,
}

impl Tableau {
    fn rows(&self) -> usize {
        self.basis.len()
    }

    fn cols(&self) -> usize {
        self.upper.len()
    }

    fn set_costs(&mut self, cost: &[BigRational]) {
        let m = self.rows();
        let mut d: Vec<BigRational> = cost.to_vec();
        for i in 0..m {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (j, dj) in d.iter_mut().enumerate() {
                if !self.t[i][j].is_zero() {
                    *dj -= cb * &self.t[i][j];
                }
            }
        }
        self.t[m] = d;
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.t[r][c].recip();
        let nz: Vec<usize> = (0..self.cols()).filter(|&j| !self.t[r][j].is_zero()).collect();
        for &j in &nz {
            self.t[r][j] *= &inv;
        }
        let pivot_row: Vec<(usize, BigRational)> = nz.iter().map(|&j| (j, self.t[r][j].clone())).collect();
        for i in 0..=self.rows() {
            if i == r || self.t[i][c].is_zero() {
                continue;
            }
            let factor = self.t[i][c].clone();
            for (j, v) in &pivot_row {
                let delta = &factor * v;
                self.t[i][*j] -= delta;
            }
        }
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// Runs simplex iterations until optimal for the current cost row.
    fn optimize(&mut self) -> Result<()> {
        let m = self.rows();
        loop {
            let mut in_basis = vec![false; self.cols()];
            for &b in &self.basis {
                in_basis[b] = true;
            }
            let entering = (0..self.cols()).find(|&j| {
                if in_basis[j] || self.upper[j].as_ref().is_some_and(Zero::is_zero) {
                    return false;
                }
                let d = &self.t[m][j];
                if self.at_upper[j] {
                    d.is_positive()
                } else {
                    d.is_negative()
                }
            });
            let Some(j) = entering else { return Ok(()) };
            let increase = !self.at_upper[j];
            // basic variable i changes by step * delta_i
            let delta: Vec<BigRational> =
                (0..m).map(|i| if increase { -self.t[i][j].clone() } else { self.t[i][j].clone() }).collect();
            let mut best: Option<(BigRational, usize)> = None;
            for i in 0..m {
                let limit = if delta[i].is_negative() {
                    Some(-&self.beta[i] / &delta[i])
                } else if delta[i].is_positive() {
                    self.upper[self.basis[i]].as_ref().map(|u| (u - &self.beta[i]) / &delta[i])
                } else {
                    None
                };
                if let Some(t) = limit {
                    let better = match &best {
                        None => true,
                        Some((bt, bi)) => t < *bt || (t == *bt && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((t, i));
                    }
                }
            }
            let flip = self.upper[j].clone();
            match (best, flip) {
                (None, None) => return Err(Error::Unbounded),
                (Some((t, _)), Some(u)) if u < t => self.bound_flip(j, &u, &delta),
                (None, Some(u)) => self.bound_flip(j, &u, &delta),
                (Some((t, r)), _) => {
                    for i in 0..m {
                        if !delta[i].is_zero() {
                            let step = &t * &delta[i];
                            self.beta[i] += step;
                        }
                    }
                    let leaving = self.basis[r];
                    self.at_upper[leaving] = delta[r].is_positive();
                    let entering_value = if increase {
                        t
                    } else {
                        self.upper[j].clone().expect("decreasing variables are bounded") - t
                    };
                    self.beta[r] = entering_value;
                    self.at_upper[j] = false;
                    self.pivot(r, j);
                }
            }
        }
    }

    fn bound_flip(&mut self, j: usize, u: &BigRational, delta: &[BigRational]) {
        for (i, d) in delta.iter().enumerate() {
            if !d.is_zero() {
                self.beta[i] += u * d;
            }
        }
        self.at_upper[j] = !self.at_upper[j];
    }

    fn value_of(&self, j: usize) -> BigRational {
        if let Some(i) = self.basis.iter().position(|&b| b == j) {
            self.beta[i].clone()
        } else if self.at_upper[j] {
            self.upper[j].clone().expect("only bounded variables rest at their upper bound")
        } else {
            BigRational::zero()
        }
    }
}

impl LinearProgram {
    pub fn vars(&self) -> usize {
        self.objective.len()
    }

    /// Two-phase simplex; the answer is checked with [`LinearProgram::certify`].
    pub fn solve(&self) -> Result<SimplexSolution> {
        let n = self.vars();
        let m = self.rows.len();
        // columns: structural, one slack per inequality row, one artificial per row
        let slack_rows: Vec<usize> = (0..m).filter(|&i| self.rows[i].1 != Sense::Eq).collect();
        let cols = n + slack_rows.len() + m;
        let art = |i: usize| n + slack_rows.len() + i;
        let mut t = vec![vec![BigRational::zero(); cols]; m + 1];
        let mut beta = Vec::with_capacity(m);
        let mut sign = Vec::with_capacity(m);
        for (i, (coeffs, sense, rhs)) in self.rows.iter().enumerate() {
            let s = if rhs.is_negative() { -BigRational::one() } else { BigRational::one() };
            for (j, a) in coeffs {
                t[i][*j] += a * &s;
            }
            if let Some(pos) = slack_rows.iter().position(|&r| r == i) {
                let slack = if *sense == Sense::Le { s.clone() } else { -s.clone() };
                t[i][n + pos] = slack;
            }
            t[i][art(i)] = BigRational::one();
            beta.push(rhs * &s);
            sign.push(s);
        }
        let mut upper: Vec<Option<BigRational>> = self.upper.clone();
        upper.extend(std::iter::repeat_n(None, slack_rows.len() + m));
        let mut tab = Tableau {
            t,
            basis: (0..m).map(art).collect(),
            beta,
            upper,
            at_upper: vec![false; cols],
            pivots: 0,
        };

        let mut phase1 = vec![BigRational::zero(); cols];
        for i in 0..m {
            phase1[art(i)] = BigRational::one();
        }
        tab.set_costs(&phase1);
        tab.optimize()?;
        let infeasibility: BigRational = (0..m).map(|i| tab.value_of(art(i))).sum();
        if infeasibility.is_positive() {
            return Err(Error::Infeasible);
        }
        for i in 0..m {
            tab.upper[art(i)] = Some(BigRational::zero());
        }

        let mut phase2 = self.objective.clone();
        phase2.resize(cols, BigRational::zero());
        tab.set_costs(&phase2);
        tab.optimize()?;

        let x: Vec<BigRational> = (0..n).map(|j| tab.value_of(j)).collect();
        let value = x.iter().zip(&self.objective).map(|(a, b)| a * b).sum();
        let duals = (0..m).map(|i| -&tab.t[m][art(i)] * &sign[i]).collect();
        let sol = SimplexSolution { x, value, duals, pivots: tab.pivots };
        self.certify(&sol)?;
        Ok(sol)
    }

    /// Exact optimality check independent of the tableau: primal feasibility,
    /// dual sign conditions and equal primal and dual objectives.
    pub fn certify(&self, sol: &SimplexSolution) -> Result<()> {
        let n = self.vars();
        if sol.x.len() != n || sol.duals.len() != self.rows.len() {
            return Err(Error::Certificate("dimension mismatch".into()));
        }
        for (j, v) in sol.x.iter().enumerate() {
            if v.is_negative() || self.upper[j].as_ref().is_some_and(|u| v > u) {
                return Err(Error::Certificate(format!("variable {j} out of bounds")));
            }
        }
        let mut reduced = self.objective.clone();
        let mut dual_value = BigRational::zero();
        for (i, ((coeffs, sense, rhs), y)) in self.rows.iter().zip(&sol.duals).enumerate() {
            let lhs: BigRational = coeffs.iter().map(|(j, a)| a * &sol.x[*j]).sum();
            let ok = match sense {
                Sense::Le => lhs <= *rhs && !y.is_positive(),
                Sense::Ge => lhs >= *rhs && !y.is_negative(),
                Sense::Eq => lhs == *rhs,
            };
            if !ok {
                return Err(Error::Certificate(format!("row {i} infeasible or dual sign wrong")));
            }
            for (j, a) in coeffs {
                reduced[*j] -= a * y;
            }
            dual_value += rhs * y;
        }
        for (j, r) in reduced.iter().enumerate() {
            if r.is_negative() {
                match &self.upper[j] {
                    Some(u) => dual_value += r * u,
                    None => return Err(Error::Certificate(format!("dual infeasible at variable {j}"))),
                }
            }
        }
        let primal: BigRational = sol.x.iter().zip(&self.objective).map(|(a, b)| a * b).sum();
        if primal != sol.value || primal != dual_value {
            return Err(Error::Certificate(format!("primal {primal} and dual {dual_value} differ")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn small_box_lp() {
        // min -x - y, x + 2y <= 2, 0 <= x, y <= 1  ->  x = 1, y = 1/2
        let lp = LinearProgram {
            objective: vec![q(-1, 1), q(-1, 1)],
            rows: vec![(vec![(0, q(1, 1)), (1, q(2, 1))], Sense::Le, q(2, 1))],
            upper: vec![Some(q(1, 1)), Some(q(1, 1))],
        };
        let sol = lp.solve().unwrap();
        assert_eq!(sol.x, vec![q(1, 1), q(1, 2)]);
        assert_eq!(sol.value, q(-3, 2));
    }

    #[test]
    fn covering_with_ge_rows() {
        // min 3x + 2y, x + y >= 1, x - y = 0 -> x = y = 1/2
        let lp = LinearProgram {
            objective: vec![q(3, 1), q(2, 1)],
            rows: vec![
                (vec![(0, q(1, 1)), (1, q(1, 1))], Sense::Ge, q(1, 1)),
                (vec![(0, q(1, 1)), (1, q(-1, 1))], Sense::Eq, q(0, 1)),
            ],
            upper: vec![None, None],
        };
        let sol = lp.solve().unwrap();
        assert_eq!(sol.value, q(5, 2));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let infeasible = LinearProgram {
            objective: vec![q(1, 1)],
            rows: vec![(vec![(0, q(1, 1))], Sense::Ge, q(2, 1))],
            upper: vec![Some(q(1, 1))],
        };
        assert!(matches!(infeasible.solve(), Err(Error::Infeasible)));
        let unbounded =
            LinearProgram { objective: vec![q(-1, 1)], rows: vec![(vec![(0, q(1, 1))], Sense::Ge, q(0, 1))], upper: vec![None] };
        assert!(matches!(unbounded.solve(), Err(Error::Unbounded)));
    }
}
