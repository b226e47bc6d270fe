//! Exact dense linear algebra over an [`ExactScalar`] field.
//!
//! Everything here is elimination-based and exact: determinants use the
//! fraction-free (Bareiss) scheme, whose divisions are always exact in the
//! ground ring, and linear systems are classified by Gauss–Jordan reduction
//! with full outcome reporting (unique / inconsistent / underdetermined).
//! Matrices are small throughout the crate (at most (d+2)×(d+2) with d ≤ 6),
//! so dense row operations are the right tool.

use crate::scalar::ExactScalar;

/// Outcome of solving a linear system `A·x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome<S> {
    /// Exactly one solution.
    Unique(Vec<S>),
    /// No solution.
    Inconsistent,
    /// Infinitely many solutions (rank-deficient but consistent).
    Underdetermined,
}

/// Reduces `a` in place to reduced row-echelon form; returns the pivot
/// columns in increasing order.
pub fn rref<S: ExactScalar>(a: &mut [Vec<S>]) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c].sign() != 0) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].clone();
        for j in c..cols {
            a[r][j] = a[r][j].clone() / inv.clone();
        }
        for i in 0..rows {
            if i != r && a[i][c].sign() != 0 {
                let f = a[i][c].clone();
                for j in c..cols {
                    a[i][j] = a[i][j].clone() - f.clone() * a[r][j].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A·x = b` for a general (not necessarily square) matrix given as
/// rows, classifying the outcome exactly.
pub fn solve<S: ExactScalar>(a: &[Vec<S>], b: &[S]) -> SolveOutcome<S> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "matrix and right-hand side disagree on rows");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return SolveOutcome::Inconsistent;
    }
    if pivots.len() < cols {
        return SolveOutcome::Underdetermined;
    }
    // Full column rank: row i carries pivot column i, so the solution is the
    // augmented column read top to bottom.
    let x = (0..cols).map(|i| aug[i][cols].clone()).collect();
    SolveOutcome::Unique(x)
}

/// Rank of the matrix given as rows.
pub fn rank<S: ExactScalar>(a: &[Vec<S>]) -> usize {
    let mut m = a.to_vec();
    rref(&mut m).len()
}

/// One nonzero kernel vector of the matrix given as rows, or `None` when the
/// matrix has full column rank. The vector sets the first free column to 1,
/// so the output is deterministic.
pub fn nullspace_vector<S: ExactScalar>(a: &[Vec<S>]) -> Option<Vec<S>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    if pivots.len() == cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut x = vec![S::zero(); cols];
    x[free] = S::one();
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = -m[row][free].clone();
    }
    Some(x)
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination:
/// every division is exact, keeping intermediate entries small.
pub fn det<S: ExactScalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    if n == 0 {
        return S::one();
    }
    let mut a: Vec<Vec<S>> = m.to_vec();
    for row in &a {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut flipped = false;
    let mut prev = S::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k].sign() != 0) else {
            return S::zero();
        };
        if p != k {
            a.swap(p, k);
            flipped = !flipped;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k].clone() * a[i][j].clone()
                    - a[i][k].clone() * a[k][j].clone())
                    / prev.clone();
            }
            a[i][k] = S::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if flipped {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::scalar::{rat, rat_int, Rat};
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det::<Rat>(&[]), rat_int(1));
        assert_eq!(det(&m(&[&[5]])), rat_int(5));
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])), rat_int(-2));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), rat_int(-1));
        assert_eq!(det(&m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), rat_int(0));
        // Vandermonde at 1,2,3,4: Π (xj − xi) = 1·2·3·1·2·1 = 12.
        let v: Vec<Vec<Rat>> = (1..=4)
            .map(|t: i64| (0..4).map(|p| rat_int(t.pow(p))).collect())
            .collect();
        assert_eq!(det(&v), rat_int(12));
    }

    #[test]
    fn det_agrees_with_rref_rank_on_random_matrices() {
        let mut rng = SplitMix64::new(31337);
        for _ in 0..200 {
            let n = 1 + (rng.below(4) as usize);
            let a: Vec<Vec<Rat>> = (0..n)
                .map(|_| (0..n).map(|_| rng.rat_with_bits(5)).collect())
                .collect();
            let d = det(&a);
            assert_eq!(d.sign() != 0, rank(&a) == n);
        }
    }

    #[test]
    fn det_is_antisymmetric_in_rows() {
        let a = m(&[&[2, 7, 1], &[0, 3, 5], &[4, 4, 9]]);
        let mut b = a.clone();
        b.swap(0, 2);
        assert_eq!(det(&a), -det(&b));
    }

    #[test]
    fn solve_classifies_all_three_outcomes() {
        // Unique: x + y = 3, x − y = 1 → (2, 1).
        match solve(&m(&[&[1, 1], &[1, -1]]), &[rat_int(3), rat_int(1)]) {
            SolveOutcome::Unique(x) => assert_eq!(x, vec![rat_int(2), rat_int(1)]),
            other => panic!("expected unique, got {other:?}"),
        }
        // Inconsistent: x + y = 1, x + y = 2.
        assert_eq!(
            solve(&m(&[&[1, 1], &[1, 1]]), &[rat_int(1), rat_int(2)]),
            SolveOutcome::Inconsistent
        );
        // Underdetermined: one equation, two unknowns.
        assert_eq!(
            solve(&m(&[&[1, 1]]), &[rat_int(1)]),
            SolveOutcome::Underdetermined
        );
        // Overdetermined but consistent.
        match solve(
            &m(&[&[1, 0], &[0, 1], &[1, 1]]),
            &[rat(1, 2), rat(1, 3), rat(5, 6)],
        ) {
            SolveOutcome::Unique(x) => assert_eq!(x, vec![rat(1, 2), rat(1, 3)]),
            other => panic!("expected unique, got {other:?}"),
        }
    }

    #[test]
    fn solve_residual_is_zero_on_random_systems() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..100 {
            let n = 2 + (rng.below(3) as usize);
            let a: Vec<Vec<Rat>> = (0..n)
                .map(|_| (0..n).map(|_| rng.rat_with_bits(6)).collect())
                .collect();
            let b: Vec<Rat> = (0..n).map(|_| rng.rat_with_bits(6)).collect();
            if let SolveOutcome::Unique(x) = solve(&a, &b) {
                for i in 0..n {
                    let mut acc = Rat::zero();
                    for j in 0..n {
                        acc += a[i][j].clone() * x[j].clone();
                    }
                    assert_eq!(acc, b[i]);
                }
            }
        }
    }

    #[test]
    fn nullspace_vector_is_in_the_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]); // rank 1
        let x = nullspace_vector(&a).unwrap();
        assert!(x.iter().any(|v| v.sign() != 0));
        for row in &a {
            let mut acc = Rat::zero();
            for (c, v) in row.iter().zip(&x) {
                acc += c.clone() * v.clone();
            }
            assert_eq!(acc, Rat::zero());
        }
        // Full column rank has no kernel.
        assert_eq!(nullspace_vector(&m(&[&[1, 0], &[0, 1], &[1, 1]])), None);
    }

    #[test]
    fn rank_spot_checks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 0, 0], &[0, 1, 0]])), 2);
        assert_eq!(rank::<Rat>(&[]), 0);
    }
}
