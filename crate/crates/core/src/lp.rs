//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Only meant for the tiny programs that show up in fan computations
//! (cone membership, face tests, support functions), so the tableau is dense
//! and recomputes reduced costs every pivot.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

/// `maximize objective · x` subject to the constraints. Variables are
/// nonnegative unless marked free.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub free: Vec<bool>,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<BigRational>, value: BigRational },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            free: vec![false; num_vars],
            constraints: Vec::new(),
            objective: vec![BigRational::zero(); num_vars],
        }
    }

    pub fn all_free(mut self) -> Self {
        self.free = vec![true; self.num_vars];
        self
    }

    pub fn constrain(&mut self, coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) {
        debug_assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn is_feasible(&self) -> bool {
        let mut probe = self.clone();
        probe.objective = vec![BigRational::zero(); self.num_vars];
        !matches!(probe.solve(), LpOutcome::Infeasible)
    }

    pub fn solve(&self) -> LpOutcome {
        // column layout: split variables, then slack/surplus, then artificials
        let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(self.num_vars);
        let mut ncols = 0;
        for v in 0..self.num_vars {
            if self.free[v] {
                col_of.push((ncols, Some(ncols + 1)));
                ncols += 2;
            } else {
                col_of.push((ncols, None));
                ncols += 1;
            }
        }
        let structural = ncols;
        let m = self.constraints.len();

        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        let mut relations = Vec::with_capacity(m);
        for c in &self.constraints {
            let mut row = vec![BigRational::zero(); structural];
            for (v, a) in c.coeffs.iter().enumerate() {
                let (pos, neg) = col_of[v];
                row[pos] = a.clone();
                if let Some(neg) = neg {
                    row[neg] = -a.clone();
                }
            }
            let mut rhs = c.rhs.clone();
            let mut rel = c.relation;
            if rhs.is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
                rhs = -rhs;
                rel = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
            }
            row.push(rhs);
            rows.push(row);
            relations.push(rel);
        }

        let n_slack = relations.iter().filter(|r| **r != Relation::Eq).count();
        let n_art = relations.iter().filter(|r| **r != Relation::Le).count();
        let total = structural + n_slack + n_art;
        let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        let mut basis = vec![0usize; m];
        let mut slack = structural;
        let mut art = structural + n_slack;
        let art_start = art;
        for (i, (row, rel)) in rows.into_iter().zip(relations.iter()).enumerate() {
            let rhs = row[structural].clone();
            let mut full = row[..structural].to_vec();
            full.resize(total, BigRational::zero());
            match rel {
                Relation::Le => {
                    full[slack] = BigRational::one();
                    basis[i] = slack;
                    slack += 1;
                }
                Relation::Ge => {
                    full[slack] = -BigRational::one();
                    slack += 1;
                    full[art] = BigRational::one();
                    basis[i] = art;
                    art += 1;
                }
                Relation::Eq => {
                    full[art] = BigRational::one();
                    basis[i] = art;
                    art += 1;
                }
            }
            full.push(rhs);
            tab.push(full);
        }

        if n_art > 0 {
            let mut phase1 = vec![BigRational::zero(); total];
            for c in phase1.iter_mut().skip(art_start) {
                *c = -BigRational::one();
            }
            let allowed = vec![true; total];
            // phase one is bounded above by zero
            let _ = run_simplex(&mut tab, &mut basis, &phase1, &allowed);
            let value = objective_value(&tab, &basis, &phase1);
            if !value.is_zero() {
                return LpOutcome::Infeasible;
            }
            // drive artificials out of the basis
            let mut i = 0;
            while i < tab.len() {
                if basis[i] >= art_start {
                    if let Some(j) = (0..art_start).find(|&j| !tab[i][j].is_zero()) {
                        pivot(&mut tab, &mut basis, i, j);
                        i += 1;
                    } else {
                        tab.remove(i);
                        basis.remove(i);
                    }
                } else {
                    i += 1;
                }
            }
        }

        let mut cost = vec![BigRational::zero(); total];
        for (v, a) in self.objective.iter().enumerate() {
            let (pos, neg) = col_of[v];
            cost[pos] = a.clone();
            if let Some(neg) = neg {
                cost[neg] = -a.clone();
            }
        }
        let allowed: Vec<bool> = (0..total).map(|j| j < art_start).collect();
        if run_simplex(&mut tab, &mut basis, &cost, &allowed).is_err() {
            return LpOutcome::Unbounded;
        }
        let value = objective_value(&tab, &basis, &cost);
        let mut col_values = vec![BigRational::zero(); total];
        for (i, &b) in basis.iter().enumerate() {
            col_values[b] = tab[i][total].clone();
        }
        let x = col_of
            .iter()
            .map(|&(pos, neg)| {
                let mut v = col_values[pos].clone();
                if let Some(neg) = neg {
                    v -= &col_values[neg];
                }
                v
            })
            .collect();
        LpOutcome::Optimal { x, value }
    }
}

fn objective_value(tab: &[Vec<BigRational>], basis: &[usize], cost: &[BigRational]) -> BigRational {
    let rhs = cost.len();
    basis
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (i, &b)| acc + &cost[b] * &tab[i][rhs])
}

struct Unbounded;

fn run_simplex(
    tab: &mut [Vec<BigRational>],
    basis: &mut [usize],
    cost: &[BigRational],
    allowed: &[bool],
) -> Result<(), Unbounded> {
    let total = cost.len();
    loop {
        let entering = (0..total).find(|&j| {
            if !allowed[j] || basis.contains(&j) {
                return false;
            }
            let mut reduced = cost[j].clone();
            for (i, &b) in basis.iter().enumerate() {
                if !tab[i][j].is_zero() {
                    reduced -= &cost[b] * &tab[i][j];
                }
            }
            reduced.is_positive()
        });
        let Some(j) = entering else {
            return Ok(());
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..tab.len() {
            if tab[i][j].is_positive() {
                let ratio = &tab[i][total] / &tab[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leave else {
            return Err(Unbounded);
        };
        pivot(tab, basis, i, j);
    }
}

fn pivot(tab: &mut [Vec<BigRational>], basis: &mut [usize], r: usize, c: usize) {
    let width = tab[r].len();
    let inv = tab[r][c].recip();
    for j in 0..width {
        tab[r][j] = &tab[r][j] * &inv;
    }
    let prow = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for j in 0..width {
            if !prow[j].is_zero() {
                row[j] -= &f * &prow[j];
            }
        }
    }
    basis[r] = c;
}
