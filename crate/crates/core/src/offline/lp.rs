use super::simplex::{LinearProgram, SimplexSolution};
use super::Schedule;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::{cost_to_big, Cost};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// A variable of the covering program. Indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LpVar {
    /// Server `server` first moves to point `slot` of request `request`.
    G { server: usize, request: usize, slot: usize },
    /// A server serving request `from.0` at its point `from.1` next serves
    /// request `to.0` at its point `to.1`.
    F { from: (usize, usize), to: (usize, usize) },
}

impl fmt::Display for LpVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LpVar::G { server, request, slot } => write!(f, "g({},{},{})", server + 1, request + 1, slot + 1),
            LpVar::F { from, to } => write!(f, "f({},{},{},{})", from.0 + 1, from.1 + 1, to.0 + 1, to.1 + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpRow {
    pub name: String,
    pub coeffs: Vec<(usize, Cost)>,
    pub sense: Sense,
    pub rhs: Cost,
}

/// The covering program of an instance with every variable boxed in `[0, 1]`.
///
/// Rows: each server starts at most once (`a`), a server can only leave a
/// requested point it reached (`b`), and every request is reached (`c`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpModel {
    pub vars: Vec<LpVar>,
    pub objective: Vec<Cost>,
    pub rows: Vec<LpRow>,
    index: HashMap<LpVar, usize>,
}

/// Optimal solution of an [`LpModel`].
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalSolution {
    pub values: Vec<BigRational>,
    pub value: BigRational,
    pub duals: Vec<BigRational>,
    pub pivots: usize,
}

fn coeff(c: &Cost) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn build_lp(inst: &Instance) -> LpModel {
    let (k, m) = (inst.k(), inst.m());
    let reqs = &inst.requests;
    let space = &inst.space;
    let mut vars = Vec::new();
    let mut objective = Vec::new();
    for server in 0..k {
        let s = inst.initial.points()[server];
        for (request, r) in reqs.iter().enumerate() {
            for (slot, &p) in r.points().iter().enumerate() {
                vars.push(LpVar::G { server, request, slot });
                objective.push(space.dist(s, p));
            }
        }
    }
    for i in 0..m {
        for (j, &p) in reqs[i].points().iter().enumerate() {
            for i2 in i + 1..m {
                for (j2, &q) in reqs[i2].points().iter().enumerate() {
                    vars.push(LpVar::F { from: (i, j), to: (i2, j2) });
                    objective.push(space.dist(p, q));
                }
            }
        }
    }
    let index: HashMap<LpVar, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let one = Cost::one();
    let mut rows = Vec::new();
    for server in 0..k {
        let coeffs = vars
            .iter()
            .enumerate()
            .filter(|(_, v)| matches!(v, LpVar::G { server: s, .. } if *s == server))
            .map(|(i, _)| (i, one))
            .collect();
        rows.push(LpRow { name: format!("a{}", server + 1), coeffs, sense: Sense::Le, rhs: Cost::zero() + one });
    }
    for i in 0..m {
        for j in 0..reqs[i].len() {
            let mut coeffs = Vec::new();
            for (idx, v) in vars.iter().enumerate() {
                match *v {
                    LpVar::G { request, slot, .. } if (request, slot) == (i, j) => coeffs.push((idx, one)),
                    LpVar::F { to, .. } if to == (i, j) => coeffs.push((idx, one)),
                    LpVar::F { from, .. } if from == (i, j) => coeffs.push((idx, -one)),
                    _ => {}
                }
            }
            rows.push(LpRow { name: format!("b{},{}", i + 1, j + 1), coeffs, sense: Sense::Ge, rhs: Cost::zero() });
        }
    }
    for i in 0..m {
        let coeffs = vars
            .iter()
            .enumerate()
            .filter(|(_, v)| match v {
                LpVar::G { request, .. } => *request == i,
                LpVar::F { to, .. } => to.0 == i,
            })
            .map(|(idx, _)| (idx, one))
            .collect();
        rows.push(LpRow { name: format!("c{}", i + 1), coeffs, sense: Sense::Ge, rhs: one });
    }
    LpModel { vars, objective, rows, index }
}

impl LpModel {
    pub fn index_of(&self, v: &LpVar) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn to_program(&self) -> LinearProgram {
        LinearProgram {
            objective: self.objective.iter().map(cost_to_big).collect(),
            rows: self
                .rows
                .iter()
                .map(|r| (r.coeffs.iter().map(|(j, a)| (*j, cost_to_big(a))).collect(), r.sense, cost_to_big(&r.rhs)))
                .collect(),
            upper: vec![Some(BigRational::one()); self.vars.len()],
        }
    }

    /// Objective value of `x` if it satisfies every row and box constraint.
    pub fn evaluate(&self, x: &[Cost]) -> Option<Cost> {
        if x.len() != self.vars.len() || x.iter().any(|v| *v < Cost::zero() || *v > Cost::one()) {
            return None;
        }
        for row in &self.rows {
            let lhs: Cost = row.coeffs.iter().map(|(j, a)| a * x[*j]).sum();
            let ok = match row.sense {
                Sense::Le => lhs <= row.rhs,
                Sense::Ge => lhs >= row.rhs,
                Sense::Eq => lhs == row.rhs,
            };
            if !ok {
                return None;
            }
        }
        Some(x.iter().zip(&self.objective).map(|(a, b)| a * b).sum())
    }

    /// The 0/1 point encoding a lazy schedule: every request is charged to
    /// the server standing on it after the request's moves.
    pub fn point_from_schedule(&self, inst: &Instance, schedule: &Schedule) -> Result<Vec<Cost>> {
        let mut x = vec![Cost::zero(); self.vars.len()];
        let mut pos = schedule.initial.clone();
        let mut last: Vec<Option<(usize, usize)>> = vec![None; pos.len()];
        for (i, (moves, r)) in schedule.steps.iter().zip(&inst.requests).enumerate() {
            for mv in moves {
                pos[mv.server] = mv.to;
            }
            let server = match moves.last() {
                Some(mv) => mv.server,
                None => (0..pos.len())
                    .filter(|&s| r.contains(pos[s]))
                    .min_by_key(|&s| last[s].is_none())
                    .ok_or_else(|| Error::Schedule(format!("request {} left unserved", i + 1)))?,
            };
            let slot = r
                .points()
                .iter()
                .position(|&p| p == pos[server])
                .ok_or_else(|| Error::Schedule(format!("request {} left unserved", i + 1)))?;
            let var = match last[server] {
                None => LpVar::G { server, request: i, slot },
                Some(from) => LpVar::F { from, to: (i, slot) },
            };
            x[self.index_of(&var).expect("variable exists")] = Cost::one();
            last[server] = Some((i, slot));
        }
        Ok(x)
    }

    /// Text dump, one row per line with coefficients written as `p/q`.
    pub fn dump(&self) -> String {
        let term = |(j, a): &(usize, Cost)| format!("{} {}", coeff(a), self.vars[*j]);
        let mut out = String::new();
        let obj: Vec<String> = self.objective.iter().enumerate().map(|(j, c)| term(&(j, *c))).collect();
        out.push_str(&format!("minimize: {}\n", obj.join(" + ")));
        for row in &self.rows {
            let lhs: Vec<String> = row.coeffs.iter().map(term).collect();
            out.push_str(&format!("{}: {} {} {}\n", row.name, lhs.join(" + "), row.sense, coeff(&row.rhs)));
        }
        out.push_str(&format!("bounds: 0/1 <= x <= 1/1 for all {} variables\n", self.vars.len()));
        out
    }
}

/// Solves the relaxation exactly.
pub fn solve_lp(model: &LpModel) -> Result<FractionalSolution> {
    let SimplexSolution { x, value, duals, pivots } = model.to_program().solve()?;
    Ok(FractionalSolution { values: x, value, duals, pivots })
}
