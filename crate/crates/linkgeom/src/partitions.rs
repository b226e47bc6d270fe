//! Radon partitions by exact nullspace computation, convex-hull
//! common-point feasibility by exact linear programming, and brute-force
//! Tverberg search over unordered partitions.
//!
//! All certificates are exact: a [`PartitionCertificate`] carries
//! nonnegative rational (or quadratic-field) barycentric coefficients that
//! reproduce the common point coordinate by coordinate, and
//! [`PartitionCertificate::validate`] re-evaluates every convex-combination
//! equation from scratch.

use num_traits::One;
use thiserror::Error;

use crate::kernel::{Configuration, KernelError};
use crate::linalg;
use crate::lp;
use crate::scalar::{rat, rat_int, ExactScalar, Rat};

/// Default cap on the number of exactly-r-block partitions a Tverberg
/// search may test before giving up with [`PartitionError::BudgetExceeded`].
pub const DEFAULT_PARTITION_BUDGET: usize = 1_000_000;

/// Largest shrink exponent tried by [`tverberg_counterexample`] before the
/// construction gives up.
const MAX_SHRINK_EXPONENT: u32 = 40;

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("search budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

fn bad(msg: impl Into<String>) -> PartitionError {
    PartitionError::InvalidInput(msg.into())
}

/// An exact witness that the convex hulls of `blocks` share `common_point`.
///
/// `blocks` are disjoint index sets into a configuration (they need not
/// cover it); `coefficients[k]` holds one nonnegative weight per entry of
/// `blocks[k]`, summing to one, with the weighted point sum equal to
/// `common_point` in every coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate<S> {
    pub blocks: Vec<Vec<usize>>,
    pub common_point: Vec<S>,
    pub coefficients: Vec<Vec<S>>,
}

impl<S: ExactScalar> PartitionCertificate<S> {
    /// Re-checks every claim the certificate makes against `cfg`: disjoint
    /// nonempty in-range blocks, nonnegative coefficients summing to one
    /// per block, and the convex-combination equations themselves.
    pub fn validate(&self, cfg: &Configuration<S>) -> Result<(), PartitionError> {
        let fail = |msg: String| Err(PartitionError::InvalidCertificate(msg));
        if self.blocks.is_empty() {
            return fail("no blocks".into());
        }
        if self.blocks.len() != self.coefficients.len() {
            return fail(format!(
                "{} blocks but {} coefficient lists",
                self.blocks.len(),
                self.coefficients.len()
            ));
        }
        if self.common_point.len() != cfg.dimension() {
            return fail(format!(
                "common point has {} coordinates in dimension {}",
                self.common_point.len(),
                cfg.dimension()
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (k, (block, lambda)) in self.blocks.iter().zip(&self.coefficients).enumerate() {
            if block.is_empty() {
                return fail(format!("block {k} is empty"));
            }
            if block.len() != lambda.len() {
                return fail(format!("block {k} has a mismatched coefficient list"));
            }
            let mut sum = S::zero();
            let mut point = vec![S::zero(); cfg.dimension()];
            for (&i, l) in block.iter().zip(lambda) {
                if i >= cfg.len() {
                    return fail(format!("block {k} references point {i} out of range"));
                }
                if !seen.insert(i) {
                    return fail(format!("point {i} appears in more than one block"));
                }
                if l.sign() < 0 {
                    return fail(format!("negative coefficient for point {i} in block {k}"));
                }
                sum = sum + l.clone();
                for (c, x) in point.iter_mut().enumerate() {
                    *x = x.clone() + l.clone() * cfg.coords(i)[c].clone();
                }
            }
            if sum != S::one() {
                return fail(format!("coefficients of block {k} sum to {sum}, not 1"));
            }
            if point != self.common_point {
                return fail(format!(
                    "block {k} combines to a point other than the claimed common point"
                ));
            }
        }
        Ok(())
    }
}

/// Outcome of a convex-hull common-point feasibility test. When feasible,
/// `coefficients` holds one barycentric list per block and `common_point`
/// the shared point they all reproduce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityResult<S> {
    pub feasible: bool,
    pub coefficients: Option<Vec<Vec<S>>>,
    pub common_point: Option<Vec<S>>,
}

/// Partitions `d + 2` points in ℝᵈ into two blocks whose convex hulls
/// intersect, with an exact common point.
///
/// The blocks come from a nontrivial affine dependence Σ cᵢ pᵢ = 0 with
/// Σ cᵢ = 0, split by coefficient sign. Zero coefficients go to the
/// positive block so the output is deterministic; both blocks are
/// guaranteed nonempty because the coefficients sum to zero and are not
/// all zero.
pub fn radon_partition<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<PartitionCertificate<S>, PartitionError> {
    let d = cfg.dimension();
    let n = cfg.len();
    if n != d + 2 {
        return Err(bad(format!(
            "a Radon partition needs exactly {} points in dimension {d}, got {n}",
            d + 2
        )));
    }
    // d coordinate rows plus a row of ones: a kernel vector is an affine
    // dependence. The matrix is (d+1) × (d+2), so a kernel vector exists.
    let mut m: Vec<Vec<S>> = (0..d)
        .map(|c| (0..n).map(|i| cfg.coords(i)[c].clone()).collect())
        .collect();
    m.push(vec![S::one(); n]);
    let dep = linalg::nullspace_vector(&m)
        .expect("a matrix with more columns than rows has a kernel vector");

    let positive: Vec<usize> = (0..n).filter(|&i| dep[i].sign() >= 0).collect();
    let negative: Vec<usize> = (0..n).filter(|&i| dep[i].sign() < 0).collect();
    let scale = positive
        .iter()
        .fold(S::zero(), |s, &i| s + dep[i].clone());
    let lambda_pos: Vec<S> = positive.iter().map(|&i| dep[i].clone() / scale.clone()).collect();
    let lambda_neg: Vec<S> = negative
        .iter()
        .map(|&i| (S::zero() - dep[i].clone()) / scale.clone())
        .collect();
    let mut common_point = vec![S::zero(); d];
    for (&i, l) in positive.iter().zip(&lambda_pos) {
        for (c, x) in common_point.iter_mut().enumerate() {
            *x = x.clone() + l.clone() * cfg.coords(i)[c].clone();
        }
    }
    let cert = PartitionCertificate {
        blocks: vec![positive, negative],
        common_point,
        coefficients: vec![lambda_pos, lambda_neg],
    };
    debug_assert!(cert.validate(cfg).is_ok());
    Ok(cert)
}

/// Decides exactly whether the convex hulls of `blocks` share a point, by
/// phase-one simplex over the block-coefficient variables.
///
/// The system asks for nonnegative coefficients, one list per block, each
/// summing to one, such that every block combines to the same point: the
/// first block's combination is equated with each of the others
/// coordinate by coordinate.
pub fn hulls_common_point<S: ExactScalar>(
    cfg: &Configuration<S>,
    blocks: &[Vec<usize>],
) -> Result<FeasibilityResult<S>, PartitionError> {
    let d = cfg.dimension();
    let r = blocks.len();
    if r == 0 {
        return Err(bad("no blocks given"));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (k, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(bad(format!("block {k} is empty")));
        }
        for &i in block {
            if i >= cfg.len() {
                return Err(bad(format!("block {k} references point {i} out of range")));
            }
            if !seen.insert(i) {
                return Err(bad(format!("point {i} appears in more than one block")));
            }
        }
    }

    // Variable layout: the coefficients of block 0, then block 1, …
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0usize, |acc, b| {
            let o = *acc;
            *acc += b.len();
            Some(o)
        })
        .collect();
    let vars = offsets[r - 1] + blocks[r - 1].len();

    let mut a: Vec<Vec<S>> = Vec::with_capacity(d * (r - 1) + r);
    let mut b: Vec<S> = Vec::with_capacity(d * (r - 1) + r);
    for k in 1..r {
        for c in 0..d {
            let mut row = vec![S::zero(); vars];
            for (j, &i) in blocks[0].iter().enumerate() {
                row[offsets[0] + j] = cfg.coords(i)[c].clone();
            }
            for (j, &i) in blocks[k].iter().enumerate() {
                row[offsets[k] + j] = S::zero() - cfg.coords(i)[c].clone();
            }
            a.push(row);
            b.push(S::zero());
        }
    }
    for k in 0..r {
        let mut row = vec![S::zero(); vars];
        for j in 0..blocks[k].len() {
            row[offsets[k] + j] = S::one();
        }
        a.push(row);
        b.push(S::one());
    }

    let Some(solution) = lp::feasible_point(&a, &b) else {
        return Ok(FeasibilityResult {
            feasible: false,
            coefficients: None,
            common_point: None,
        });
    };
    let coefficients: Vec<Vec<S>> = blocks
        .iter()
        .zip(&offsets)
        .map(|(block, &o)| solution[o..o + block.len()].to_vec())
        .collect();
    let mut common_point = vec![S::zero(); d];
    for (&i, l) in blocks[0].iter().zip(&coefficients[0]) {
        for (c, x) in common_point.iter_mut().enumerate() {
            *x = x.clone() + l.clone() * cfg.coords(i)[c].clone();
        }
    }
    Ok(FeasibilityResult {
        feasible: true,
        coefficients: Some(coefficients),
        common_point: Some(common_point),
    })
}

/// Outcome of an exhaustive Tverberg search: the first certificate found in
/// restricted-growth-string order, if any, plus how many exactly-r-block
/// partitions were tested before stopping.
#[derive(Debug, Clone)]
pub struct TverbergSearch<S> {
    pub certificate: Option<PartitionCertificate<S>>,
    pub partitions_checked: usize,
}

/// Visits every partition of `0..n` into exactly `r` nonempty unordered
/// blocks, encoded as restricted growth strings in lexicographic order.
/// The visitor returns `Ok(true)` to stop early.
fn visit_partitions<F>(
    n: usize,
    r: usize,
    assignment: &mut Vec<usize>,
    used: usize,
    visit: &mut F,
) -> Result<bool, PartitionError>
where
    F: FnMut(&[usize]) -> Result<bool, PartitionError>,
{
    if assignment.len() == n {
        return if used == r { visit(assignment) } else { Ok(false) };
    }
    for v in 0..=used.min(r - 1) {
        assignment.push(v);
        let stop = visit_partitions(n, r, assignment, used.max(v + 1), visit)?;
        assignment.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exhaustively searches for a partition of the whole configuration into
/// `r` nonempty blocks whose hulls share a point.
///
/// Every candidate partition costs one feasibility test at the leaf; no
/// prefix of a partition is ever pruned, because growing a block grows its
/// hull, so infeasibility of a partial partition says nothing about its
/// completions. The search stops at the first feasible partition
/// (lexicographic in the growth-string encoding) or after exhausting all of
/// them, in which case `certificate` is `None` and the absence is certified.
pub fn tverberg_search<S: ExactScalar>(
    cfg: &Configuration<S>,
    r: usize,
    budget: usize,
) -> Result<TverbergSearch<S>, PartitionError> {
    if r < 2 {
        return Err(bad(format!("need at least 2 blocks, got {r}")));
    }
    let n = cfg.len();
    let mut checked = 0usize;
    let mut found: Option<PartitionCertificate<S>> = None;
    let mut assignment = Vec::with_capacity(n);
    visit_partitions(n, r, &mut assignment, 0, &mut |a| {
        checked += 1;
        if checked > budget {
            return Err(PartitionError::BudgetExceeded { budget });
        }
        let mut blocks = vec![Vec::new(); r];
        for (i, &v) in a.iter().enumerate() {
            blocks[v].push(i);
        }
        let result = hulls_common_point(cfg, &blocks)?;
        if result.feasible {
            found = Some(PartitionCertificate {
                blocks,
                common_point: result.common_point.expect("feasible result carries a point"),
                coefficients: result
                    .coefficients
                    .expect("feasible result carries coefficients"),
            });
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(TverbergSearch {
        certificate: found,
        partitions_checked: checked,
    })
}

/// The first partition of the configuration into `r` blocks with a common
/// hull point, or `None` when exhaustive search certifies that no such
/// partition exists.
pub fn tverberg_partition<S: ExactScalar>(
    cfg: &Configuration<S>,
    r: usize,
    budget: usize,
) -> Result<Option<PartitionCertificate<S>>, PartitionError> {
    Ok(tverberg_search(cfg, r, budget)?.certificate)
}

/// Builds `(d+1)·(r−1)` points in ℝᵈ that admit no partition into `r`
/// blocks with a common hull point, and certifies that absence by
/// exhaustive search before returning.
///
/// The points form `d + 1` tight clusters of `r − 1` points each, placed
/// near the affinely independent sites 0, e₁, …, e_d. Cluster members are
/// offset along a moment curve, scaled by `1 / 2^k`; `k` grows until the
/// search certifies absence. Tight enough clusters always succeed: a
/// common point of `r` hulls would force some cluster to meet all `r`
/// disjoint blocks, but a cluster has only `r − 1` points.
pub fn tverberg_counterexample(
    d: usize,
    r: usize,
    budget: usize,
) -> Result<Configuration<Rat>, PartitionError> {
    if d == 0 {
        return Err(bad("dimension must be at least 1"));
    }
    if r < 2 {
        return Err(bad(format!("need at least 2 blocks, got {r}")));
    }
    for k in 4..=MAX_SHRINK_EXPONENT {
        let scale = rat(1, 1i64 << k);
        let mut coords: Vec<Vec<Rat>> = Vec::with_capacity((d + 1) * (r - 1));
        for site in 0..=d {
            for member in 0..r - 1 {
                let t = (site * (r - 1) + member + 1) as i64;
                let mut p: Vec<Rat> = (0..d)
                    .map(|c| {
                        let mut w = Rat::one();
                        for _ in 0..=c {
                            w = w * rat_int(t);
                        }
                        w * scale.clone()
                    })
                    .collect();
                if site > 0 {
                    p[site - 1] = p[site - 1].clone() + Rat::one();
                }
                coords.push(p);
            }
        }
        // Coinciding points (possible while the clusters are still coarse)
        // just mean the shrink must continue.
        let Ok(cfg) = Configuration::from_coords(d, coords) else {
            continue;
        };
        if tverberg_search(&cfg, r, budget)?.certificate.is_none() {
            return Ok(cfg);
        }
    }
    Err(PartitionError::BudgetExceeded {
        budget: MAX_SHRINK_EXPONENT as usize,
    })
}
