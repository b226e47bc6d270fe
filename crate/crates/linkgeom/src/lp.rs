//! Exact linear programming over an [`ExactScalar`] field.
//!
//! Problems are in equality standard form: maximize c·x subject to A·x = b,
//! x ≥ 0. The solver is a dense two-phase tableau simplex with Bland's rule
//! (smallest eligible index enters; among tied leaving rows the smallest
//! basis index leaves), which cannot cycle, so termination is guaranteed —
//! and every pivot is exact, so verdicts are proofs for the given input.
//!
//! The geometric questions in this crate (does a point of one simplex lie in
//! another? do r convex hulls share a point?) are all naturally barycentric:
//! the variables are convex-combination weights, which is why the equality
//! form with nonnegative variables is the native shape here.

use crate::scalar::ExactScalar;

/// Outcome of an exact LP solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<S> {
    /// No x ≥ 0 satisfies A·x = b.
    Infeasible,
    /// The maximum of c·x over the feasible region.
    Optimal { value: S, solution: Vec<S> },
    /// c·x is unbounded above on the feasible region.
    Unbounded,
}

struct Tableau<S> {
    /// m rows × (cols + 1); the last entry of each row is the rhs.
    rows: Vec<Vec<S>>,
    /// Reduced costs over all columns plus the current objective value.
    obj: Vec<S>,
    /// Basis column of each row.
    basis: Vec<usize>,
    /// Columns 0..real are genuine variables; the rest are artificials.
    real: usize,
}

impl<S: ExactScalar> Tableau<S> {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        let width = self.rows[row].len();
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].sign() == 0 {
                continue;
            }
            let f = self.rows[r][col].clone();
            for j in 0..width {
                let delta = f.clone() * self.rows[row][j].clone();
                self.rows[r][j] = self.rows[r][j].clone() - delta;
            }
        }
        if self.obj[col].sign() != 0 {
            let f = self.obj[col].clone();
            for j in 0..width {
                let delta = f.clone() * self.rows[row][j].clone();
                self.obj[j] = self.obj[j].clone() - delta;
            }
        }
        self.basis[row] = col;
    }

    /// Runs simplex iterations until no real column can improve the
    /// objective. Returns false when the problem is unbounded.
    fn optimize(&mut self) -> bool {
        loop {
            // Bland's rule: smallest real column with positive reduced cost.
            let Some(col) = (0..self.real).find(|&j| self.obj[j].sign() > 0) else {
                return true;
            };
            let rhs = self.obj.len() - 1;
            let mut leave: Option<usize> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][col].sign() <= 0 {
                    continue;
                }
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let ratio_r = self.rows[r][rhs].clone() / self.rows[r][col].clone();
                        let ratio_l = self.rows[l][rhs].clone() / self.rows[l][col].clone();
                        match ratio_r.cmp(&ratio_l) {
                            std::cmp::Ordering::Less => true,
                            std::cmp::Ordering::Equal => self.basis[r] < self.basis[l],
                            std::cmp::Ordering::Greater => false,
                        }
                    }
                };
                if better {
                    leave = Some(r);
                }
            }
            match leave {
                Some(row) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    fn solution(&self, n: usize) -> Vec<S> {
        let rhs = self.obj.len() - 1;
        let mut x = vec![S::zero(); n];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rows[r][rhs].clone();
            }
        }
        x
    }
}

/// Maximizes c·x subject to A·x = b, x ≥ 0, exactly.
pub fn maximize<S: ExactScalar>(a: &[Vec<S>], b: &[S], c: &[S]) -> LpOutcome<S> {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    let n = c.len();
    for row in a {
        assert_eq!(row.len(), n, "column count mismatch");
    }

    // Phase 1: find a basic feasible solution using one artificial variable
    // per row, maximizing minus their sum. Rows are flipped so every rhs is
    // nonnegative, keeping the artificial basis feasible.
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].sign() < 0;
        let mut t: Vec<S> = Vec::with_capacity(n + m + 1);
        for v in row {
            t.push(if flip { -v.clone() } else { v.clone() });
        }
        for j in 0..m {
            t.push(if j == i { S::one() } else { S::zero() });
        }
        t.push(if flip { -b[i].clone() } else { b[i].clone() });
        rows.push(t);
    }
    // The objective row [o | v] represents z = Σⱼ oⱼxⱼ − v on the feasible
    // set, an invariant every pivot preserves. For z = −Σ artificials,
    // substituting artᵢ = bᵢ − Σⱼ aᵢⱼxⱼ gives oⱼ = Σᵢ aᵢⱼ and v = Σᵢ bᵢ.
    let mut obj: Vec<S> = vec![S::zero(); n + m + 1];
    for row in &rows {
        for j in 0..n {
            obj[j] = obj[j].clone() + row[j].clone();
        }
        obj[n + m] = obj[n + m].clone() + row[n + m].clone();
    }
    let mut t = Tableau {
        rows,
        obj,
        basis: (n..n + m).collect(),
        real: n,
    };
    let bounded = t.optimize();
    debug_assert!(bounded, "phase-1 objective is bounded by construction");
    if t.obj[n + m].sign() != 0 {
        return LpOutcome::Infeasible;
    }

    // Drive any remaining artificials out of the basis; a row where no real
    // column has a nonzero entry is redundant and is dropped.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] < n {
            r += 1;
            continue;
        }
        match (0..n).find(|&j| t.rows[r][j].sign() != 0) {
            Some(col) => {
                t.pivot(r, col);
                r += 1;
            }
            None => {
                t.rows.remove(r);
                t.basis.remove(r);
            }
        }
    }

    // Phase 2: start from z = c·x − 0 and eliminate the basic columns with
    // the same row operations a pivot uses, keeping the invariant above.
    let rhs = n + m;
    t.obj = vec![S::zero(); n + m + 1];
    t.obj[..n].clone_from_slice(c);
    for r in 0..t.rows.len() {
        let cb = c[t.basis[r]].clone();
        if cb.sign() == 0 {
            continue;
        }
        for j in 0..=rhs {
            let delta = cb.clone() * t.rows[r][j].clone();
            t.obj[j] = t.obj[j].clone() - delta;
        }
    }
    if !t.optimize() {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal {
        value: -t.obj[rhs].clone(),
        solution: t.solution(n),
    }
}

/// A nonnegative solution of A·x = b, if one exists (phase 1 only).
pub fn feasible_point<S: ExactScalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let n = a.first().map_or(0, |r| r.len());
    match maximize(a, b, &vec![S::zero(); n]) {
        LpOutcome::Optimal { solution, .. } => Some(solution),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}
