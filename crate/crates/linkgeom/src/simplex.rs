//! Index-based simplices, broken lines, 2-cycles, and exact transversal
//! intersection of complementary-dimension simplex pairs — the machinery
//! behind every parity count in the crate.
//!
//! The key primitive is [`transversality`]: for simplices of complementary
//! dimensions (dim s₁ + dim s₂ = d) it solves the square affine system
//! Σαᵢuᵢ = Σβⱼvⱼ, Σα = 1, Σβ = 1 exactly and classifies the outcome by the
//! signs of the coefficients. Counters built on top of it refuse to count
//! anything that is not clearly transversal: boundary touching and
//! degenerate (non-transversal affine hulls) both surface as errors rather
//! than silently biasing a parity.

use crate::kernel::Configuration;
use crate::linalg::{self, SolveOutcome};
use crate::scalar::ExactScalar;
use itertools::Itertools;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SimplexError {
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),
    #[error("invalid broken line: {0}")]
    InvalidBrokenLine(String),
    #[error("invalid 2-cycle: edge {edge:?} appears {count} times (odd)")]
    InvalidTwoCycle { edge: (usize, usize), count: usize },
    #[error(
        "simplices {s1:?} and {s2:?} have dimensions {dim1} + {dim2} ≠ ambient {ambient}"
    )]
    ComplementarityViolation {
        s1: Vec<usize>,
        s2: Vec<usize>,
        dim1: usize,
        dim2: usize,
        ambient: usize,
    },
    #[error("simplices {s1:?} and {s2:?} share vertices")]
    SharedVertices { s1: Vec<usize>, s2: Vec<usize> },
    #[error("affine hulls of {s1:?} and {s2:?} are not transversal (singular system)")]
    SingularSystem { s1: Vec<usize>, s2: Vec<usize> },
    #[error("simplices {s1:?} and {s2:?} touch at a boundary point (not transversal)")]
    NotTransversal { s1: Vec<usize>, s2: Vec<usize> },
    #[error("ambient dimension is {got}, operation requires {expected}")]
    AmbientDimension { expected: usize, got: usize },
}

/// A simplex referenced by vertex indices into a [`Configuration`]:
/// sorted, distinct, nonempty. Dimension = index count − 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexRef {
    indices: Vec<usize>,
}

impl SimplexRef {
    pub fn new(mut indices: Vec<usize>) -> Result<Self, SimplexError> {
        if indices.is_empty() {
            return Err(SimplexError::InvalidSimplex("no vertices".into()));
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(SimplexError::InvalidSimplex(format!(
                "repeated vertex in {indices:?}"
            )));
        }
        Ok(SimplexRef { indices })
    }

    pub fn segment(a: usize, b: usize) -> Self {
        SimplexRef::new(vec![a, b]).expect("segment endpoints must differ")
    }

    pub fn triangle(a: usize, b: usize, c: usize) -> Self {
        SimplexRef::new(vec![a, b, c]).expect("triangle vertices must be distinct")
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn dim(&self) -> usize {
        self.indices.len() - 1
    }

    pub fn vertex_disjoint(&self, other: &SimplexRef) -> bool {
        // Index lists are sorted; a merge scan would also work, but the
        // simplices here have at most d+1 ≤ 7 vertices.
        self.indices.iter().all(|i| !other.indices.contains(i))
    }

    pub fn shared_vertices(&self, other: &SimplexRef) -> Vec<usize> {
        self.indices
            .iter()
            .copied()
            .filter(|i| other.indices.contains(i))
            .collect()
    }

    /// All facets: the subsimplices omitting exactly one vertex.
    pub fn facets(&self) -> Vec<SimplexRef> {
        (0..self.indices.len())
            .map(|omit| {
                let indices = self
                    .indices
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != omit)
                    .map(|(_, &v)| v)
                    .collect();
                SimplexRef { indices }
            })
            .collect()
    }
}

/// An open or closed broken line given by configuration indices, in order.
/// Closure is implicit: the last vertex connects back to the first, which is
/// stored only once. Self-intersections are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenLine {
    vertices: Vec<usize>,
    closed: bool,
}

impl BrokenLine {
    pub fn open(vertices: Vec<usize>) -> Result<Self, SimplexError> {
        BrokenLine::new(vertices, false)
    }

    pub fn closed(vertices: Vec<usize>) -> Result<Self, SimplexError> {
        BrokenLine::new(vertices, true)
    }

    pub fn new(vertices: Vec<usize>, closed: bool) -> Result<Self, SimplexError> {
        let min = if closed { 3 } else { 2 };
        if vertices.len() < min {
            return Err(SimplexError::InvalidBrokenLine(format!(
                "needs at least {min} vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(SimplexError::InvalidBrokenLine(
                "consecutive vertices must differ".into(),
            ));
        }
        if closed && vertices.first() == vertices.last() {
            return Err(SimplexError::InvalidBrokenLine(
                "closed line must not repeat the first vertex at the end".into(),
            ));
        }
        Ok(BrokenLine { vertices, closed })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// The sides as segments, including the closing side for closed lines.
    pub fn sides(&self) -> Vec<SimplexRef> {
        let mut sides: Vec<SimplexRef> = self
            .vertices
            .windows(2)
            .map(|w| SimplexRef::segment(w[0], w[1]))
            .collect();
        if self.closed {
            sides.push(SimplexRef::segment(
                *self.vertices.last().unwrap(),
                self.vertices[0],
            ));
        }
        sides
    }
}

/// A 2-cycle: a list of distinct triangles in which every edge occurs an
/// even number of times. Its body is the union of the triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCycle {
    triangles: Vec<SimplexRef>,
}

impl TwoCycle {
    pub fn new(triangles: Vec<SimplexRef>) -> Result<Self, SimplexError> {
        for t in &triangles {
            if t.dim() != 2 {
                return Err(SimplexError::InvalidSimplex(format!(
                    "2-cycle member {:?} is not a triangle",
                    t.indices()
                )));
            }
        }
        for (a, b) in triangles.iter().tuple_combinations() {
            if a == b {
                return Err(SimplexError::InvalidSimplex(format!(
                    "repeated triangle {:?} in 2-cycle",
                    a.indices()
                )));
            }
        }
        match is_two_cycle(&triangles) {
            (true, _) => Ok(TwoCycle { triangles }),
            (false, Some(edge)) => Err(SimplexError::InvalidTwoCycle {
                edge,
                count: edge_multiplicities(&triangles)[&edge],
            }),
            (false, None) => unreachable!("failure always carries an edge"),
        }
    }

    pub fn triangles(&self) -> &[SimplexRef] {
        &self.triangles
    }
}

fn edge_multiplicities(triangles: &[SimplexRef]) -> BTreeMap<(usize, usize), usize> {
    let mut counts = BTreeMap::new();
    for t in triangles {
        for pair in t.indices().iter().combinations(2) {
            *counts.entry((*pair[0], *pair[1])).or_insert(0) += 1;
        }
    }
    counts
}

/// Checks the 2-cycle condition: every edge lies in an even number of the
/// given triangles. On failure returns the smallest offending edge.
pub fn is_two_cycle(triangles: &[SimplexRef]) -> (bool, Option<(usize, usize)>) {
    match edge_multiplicities(triangles)
        .into_iter()
        .find(|(_, count)| count % 2 == 1)
    {
        Some((edge, _)) => (false, Some(edge)),
        None => (true, None),
    }
}

/// Exact relative position of two complementary-dimension simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transversality<S> {
    /// The relative interiors cross in a single point.
    Interior {
        point: Vec<S>,
        alpha: Vec<S>,
        beta: Vec<S>,
    },
    /// The affine hulls meet in one point that lies on a boundary face of at
    /// least one simplex (all coefficients ≥ 0, some zero).
    Touch,
    /// The affine hulls meet in one point outside at least one closed
    /// simplex, or do not meet at all.
    Miss,
    /// The affine hulls are not transversal (the system is underdetermined);
    /// the input is degenerate for this operation.
    Singular,
}

fn check_pair<S: ExactScalar>(
    cfg: &Configuration<S>,
    s1: &SimplexRef,
    s2: &SimplexRef,
) -> Result<(), SimplexError> {
    for s in [s1, s2] {
        if let Some(&i) = s.indices().iter().find(|&&i| i >= cfg.len()) {
            return Err(SimplexError::InvalidSimplex(format!(
                "vertex {i} out of range for a {}-point configuration",
                cfg.len()
            )));
        }
    }
    if !s1.vertex_disjoint(s2) {
        return Err(SimplexError::SharedVertices {
            s1: s1.indices().to_vec(),
            s2: s2.indices().to_vec(),
        });
    }
    if s1.dim() + s2.dim() != cfg.dimension() {
        return Err(SimplexError::ComplementarityViolation {
            s1: s1.indices().to_vec(),
            s2: s2.indices().to_vec(),
            dim1: s1.dim(),
            dim2: s2.dim(),
            ambient: cfg.dimension(),
        });
    }
    Ok(())
}

/// Classifies the intersection of two vertex-disjoint simplices of
/// complementary dimensions by solving Σαᵢuᵢ = Σβⱼvⱼ, Σα = 1, Σβ = 1.
///
/// The system is square: (d+2) equations in (dim s₁ + 1) + (dim s₂ + 1) =
/// d + 2 unknowns. An inconsistent system means the affine hulls are
/// disjoint (e.g. parallel) — a [`Transversality::Miss`], not an error.
pub fn transversality<S: ExactScalar>(
    cfg: &Configuration<S>,
    s1: &SimplexRef,
    s2: &SimplexRef,
) -> Result<Transversality<S>, SimplexError> {
    check_pair(cfg, s1, s2)?;
    let d = cfg.dimension();
    let k1 = s1.indices().len();
    let k2 = s2.indices().len();
    let cols = k1 + k2;
    let mut a: Vec<Vec<S>> = Vec::with_capacity(d + 2);
    for c in 0..d {
        let mut row = Vec::with_capacity(cols);
        for &i in s1.indices() {
            row.push(cfg.coords(i)[c].clone());
        }
        for &j in s2.indices() {
            row.push(-cfg.coords(j)[c].clone());
        }
        a.push(row);
    }
    let mut alpha_row = vec![S::zero(); cols];
    let mut beta_row = vec![S::zero(); cols];
    for x in alpha_row.iter_mut().take(k1) {
        *x = S::one();
    }
    for x in beta_row.iter_mut().skip(k1) {
        *x = S::one();
    }
    a.push(alpha_row);
    a.push(beta_row);
    let mut b = vec![S::zero(); d];
    b.push(S::one());
    b.push(S::one());

    let coeffs = match linalg::solve(&a, &b) {
        SolveOutcome::Inconsistent => return Ok(Transversality::Miss),
        SolveOutcome::Underdetermined => return Ok(Transversality::Singular),
        SolveOutcome::Unique(x) => x,
    };
    let signs: Vec<i8> = coeffs.iter().map(|c| c.sign()).collect();
    if signs.iter().any(|&s| s < 0) {
        return Ok(Transversality::Miss);
    }
    if signs.iter().any(|&s| s == 0) {
        return Ok(Transversality::Touch);
    }
    let alpha = coeffs[..k1].to_vec();
    let beta = coeffs[k1..].to_vec();
    let mut point = vec![S::zero(); d];
    for (w, &i) in alpha.iter().zip(s1.indices()) {
        for (c, p) in point.iter_mut().enumerate() {
            *p = p.clone() + w.clone() * cfg.coords(i)[c].clone();
        }
    }
    Ok(Transversality::Interior { point, alpha, beta })
}

/// The single transversal interior intersection point of two
/// complementary-dimension simplices, with its barycentric coordinates in
/// both, or `None` when the closed simplices are disjoint or merely touch
/// at a boundary point.
///
/// Errors with [`SimplexError::SingularSystem`] when the affine hulls are
/// not transversal; the caller decides whether to perturb.
pub fn transversal_point<S: ExactScalar>(
    cfg: &Configuration<S>,
    s1: &SimplexRef,
    s2: &SimplexRef,
) -> Result<Option<(Vec<S>, Vec<S>, Vec<S>)>, SimplexError> {
    match transversality(cfg, s1, s2)? {
        Transversality::Interior { point, alpha, beta } => Ok(Some((point, alpha, beta))),
        Transversality::Touch | Transversality::Miss => Ok(None),
        Transversality::Singular => Err(SimplexError::SingularSystem {
            s1: s1.indices().to_vec(),
            s2: s2.indices().to_vec(),
        }),
    }
}

/// Strict interior-crossing decision for counters: `Touch` and `Singular`
/// are refused as errors because a parity count cannot absorb either.
fn strict_crossing<S: ExactScalar>(
    cfg: &Configuration<S>,
    s1: &SimplexRef,
    s2: &SimplexRef,
) -> Result<bool, SimplexError> {
    match transversality(cfg, s1, s2)? {
        Transversality::Interior { .. } => Ok(true),
        Transversality::Miss => Ok(false),
        Transversality::Touch => Err(SimplexError::NotTransversal {
            s1: s1.indices().to_vec(),
            s2: s2.indices().to_vec(),
        }),
        Transversality::Singular => Err(SimplexError::SingularSystem {
            s1: s1.indices().to_vec(),
            s2: s2.indices().to_vec(),
        }),
    }
}

/// The unordered pairs (as indices into `family`) whose relative interiors
/// cross. With `disjoint_only`, pairs sharing a vertex are skipped;
/// otherwise every pair is evaluated and a shared vertex is an error.
pub fn interior_crossing_pairs<S: ExactScalar>(
    cfg: &Configuration<S>,
    family: &[SimplexRef],
    disjoint_only: bool,
) -> Result<Vec<(usize, usize)>, SimplexError> {
    let mut pairs = Vec::new();
    for (i, j) in (0..family.len()).tuple_combinations() {
        if disjoint_only && !family[i].vertex_disjoint(&family[j]) {
            continue;
        }
        if strict_crossing(cfg, &family[i], &family[j])? {
            pairs.push((i, j));
        }
    }
    Ok(pairs)
}

/// Number of unordered pairs in `family` with a transversal interior
/// intersection point.
pub fn count_interior_crossings<S: ExactScalar>(
    cfg: &Configuration<S>,
    family: &[SimplexRef],
    disjoint_only: bool,
) -> Result<usize, SimplexError> {
    Ok(interior_crossing_pairs(cfg, family, disjoint_only)?.len())
}

/// Number of facets of `boundary_of` whose relative interior meets the
/// relative interior of `target`.
pub fn outline_crossings<S: ExactScalar>(
    cfg: &Configuration<S>,
    boundary_of: &SimplexRef,
    target: &SimplexRef,
) -> Result<usize, SimplexError> {
    if !boundary_of.vertex_disjoint(target) {
        return Err(SimplexError::SharedVertices {
            s1: boundary_of.indices().to_vec(),
            s2: target.indices().to_vec(),
        });
    }
    let mut count = 0;
    for facet in boundary_of.facets() {
        if strict_crossing(cfg, &facet, target)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of transversal crossing points between the sides of two broken
/// lines (for parity checks of closed curves in the plane).
pub fn broken_line_crossings<S: ExactScalar>(
    cfg: &Configuration<S>,
    l1: &BrokenLine,
    l2: &BrokenLine,
) -> Result<usize, SimplexError> {
    let mut count = 0;
    for a in l1.sides() {
        for b in l2.sides() {
            if strict_crossing(cfg, &a, &b)? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Total number of (side, triangle) interior intersection points between a
/// broken line and the body of a 2-cycle. General position in the sense
/// "each side and each triangle either are disjoint or intersect at their
/// common interior point" is checked, not assumed.
pub fn line_body_crossings<S: ExactScalar>(
    cfg: &Configuration<S>,
    line: &BrokenLine,
    cycle: &TwoCycle,
) -> Result<usize, SimplexError> {
    let mut count = 0;
    for side in line.sides() {
        for triangle in cycle.triangles() {
            if strict_crossing(cfg, &side, triangle)? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Count of transversal triangle–triangle interior intersection points
/// between the bodies of two 2-cycles in ℝ⁴. Any cross-cycle pair that
/// shares a vertex or touches non-transversally is an error: the parity
/// laws for 2-cycle bodies are stated only for configurations where every
/// cross pair is strictly transversal.
pub fn bodies_crossings_4d<S: ExactScalar>(
    cfg: &Configuration<S>,
    c1: &TwoCycle,
    c2: &TwoCycle,
) -> Result<usize, SimplexError> {
    if cfg.dimension() != 4 {
        return Err(SimplexError::AmbientDimension {
            expected: 4,
            got: cfg.dimension(),
        });
    }
    let mut count = 0;
    for t1 in c1.triangles() {
        for t2 in c2.triangles() {
            if strict_crossing(cfg, t1, t2)? {
                count += 1;
            }
        }
    }
    Ok(count)
}
