//! Dense simplex over the rationals with Bland's rule.

use num::{Signed, Zero};

use crate::exact_math::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

/// `maximize objective · x` subject to the constraints, with every variable
/// free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(vars: usize) -> Self {
        Self {
            vars,
            objective: vec![Rational::zero(); vars],
            constraints: Vec::new(),
        }
    }

    pub fn maximize(mut self, objective: Vec<Rational>) -> Self {
        assert_eq!(objective.len(), self.vars);
        self.objective = objective;
        self
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.vars);
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    pub fn solve(&self) -> LpOutcome {
        // Standard form: x = x⁺ - x⁻, each constraint as one or two `<=` rows.
        let n = self.vars;
        let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
        for c in &self.constraints {
            let split = |sign: bool| {
                let mut row = Vec::with_capacity(2 * n);
                for v in &c.coeffs {
                    row.push(if sign { v.clone() } else { -v });
                }
                for v in &c.coeffs {
                    row.push(if sign { -v } else { v.clone() });
                }
                (row, if sign { c.rhs.clone() } else { -&c.rhs })
            };
            match c.relation {
                Relation::Le => rows.push(split(true)),
                Relation::Ge => rows.push(split(false)),
                Relation::Eq => {
                    rows.push(split(true));
                    rows.push(split(false));
                }
            }
        }
        let mut objective: Vec<Rational> = self.objective.clone();
        objective.extend(self.objective.iter().map(|v| -v));

        match Tableau::solve(&rows, &objective) {
            Solution::Optimal(z, value) => {
                let x = (0..n).map(|k| &z[k] - &z[n + k]).collect();
                LpOutcome::Optimal { x, value }
            }
            Solution::Infeasible => LpOutcome::Infeasible,
            Solution::Unbounded => LpOutcome::Unbounded,
        }
    }
}

enum Solution {
    Optimal(Vec<Rational>, Rational),
    Infeasible,
    Unbounded,
}

/// Full tableau for `max c·z, Az <= b, z >= 0`. Columns are the structural
/// variables, then one slack per row, then the auxiliary `x0` used to find
/// a first feasible basis. The objective is kept as `value + Σ obj_j z_j`
/// over nonbasic `j`.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    obj: Vec<Rational>,
    value: Rational,
    excluded: Option<usize>,
}

impl Tableau {
    fn solve(a: &[(Vec<Rational>, Rational)], c: &[Rational]) -> Solution {
        let m = a.len();
        let n = c.len();
        let cols = n + m + 1;
        let x0 = n + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for (i, (row, b)) in a.iter().enumerate() {
            let mut r = vec![Rational::zero(); cols];
            r[..n].clone_from_slice(row);
            r[n + i] = Rational::from_integer(1.into());
            r[x0] = Rational::from_integer((-1).into());
            rows.push(r);
            rhs.push(b.clone());
        }
        let mut t = Tableau {
            rows,
            rhs,
            basis: (n..n + m).collect(),
            obj: vec![Rational::zero(); cols],
            value: Rational::zero(),
            excluded: None,
        };

        let most_negative = (0..m)
            .filter(|&i| t.rhs[i].is_negative())
            .min_by(|&i, &j| t.rhs[i].cmp(&t.rhs[j]));
        if let Some(l) = most_negative {
            t.obj[x0] = Rational::from_integer((-1).into());
            t.pivot(l, x0);
            if t.run().is_err() {
                unreachable!("auxiliary problem is bounded by 0");
            }
            if !t.value.is_zero() {
                return Solution::Infeasible;
            }
            if let Some(r) = t.basis.iter().position(|&b| b == x0) {
                let j = (0..x0)
                    .find(|&j| !t.rows[r][j].is_zero())
                    .expect("degenerate auxiliary row has a nonzero entry");
                t.pivot(r, j);
            }
        }
        t.excluded = Some(x0);
        for row in &mut t.rows {
            row[x0] = Rational::zero();
        }

        t.obj = vec![Rational::zero(); cols];
        t.obj[..n].clone_from_slice(c);
        t.value = Rational::zero();
        for i in 0..m {
            let coef = t.obj[t.basis[i]].clone();
            if !coef.is_zero() {
                t.value += &coef * &t.rhs[i];
                for j in 0..cols {
                    let d = &coef * &t.rows[i][j];
                    t.obj[j] -= d;
                }
            }
        }

        if t.run().is_err() {
            return Solution::Unbounded;
        }
        let mut z = vec![Rational::zero(); n];
        for (i, &b) in t.basis.iter().enumerate() {
            if b < n {
                z[b] = t.rhs[i].clone();
            }
        }
        Solution::Optimal(z, t.value)
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let p = self.rows[r][j].clone();
        for v in &mut self.rows[r] {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let f = self.rows[i][j].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        let f = self.obj[j].clone();
        if !f.is_zero() {
            self.value += &f * &pivot_rhs;
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = j;
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test
    /// broken by lowest basic index. `Err` on unboundedness.
    fn run(&mut self) -> Result<(), ()> {
        loop {
            let Some(j) = (0..self.obj.len()).find(|&j| Some(j) != self.excluded && self.obj[j].is_positive()) else {
                return Ok(());
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return Err(());
            };
            self.pivot(r, j);
        }
    }
}
