//! Mod-2 linking predicates: linked triangles in ℝ³, linked quadrangular
//! loops, linked higher-dimensional simplices, the projection (dimension
//! lowering) construction, and the common-line alternation criterion.
//!
//! The base definition is direct: two vertex-disjoint triangles in ℝ³ are
//! linked when the outline of one crosses the other's interior an odd number
//! of times (in general position that number is 0, 1 or 2, so "odd" means
//! exactly one). Higher odd dimensions use the same facet-crossing parity —
//! which coincides with the triangle definition at n = 3 — and the
//! alternative criteria (projection, common-line alternation, plane
//! criterion) are implemented independently so their equivalence is a
//! testable fact rather than a code path.

use crate::kernel::{Configuration, KernelError, Point};
use crate::scalar::ExactScalar;
use crate::simplex::{outline_crossings, BrokenLine, SimplexError, SimplexRef};
use itertools::Itertools;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LinkingError {
    #[error(transparent)]
    Simplex(#[from] SimplexError),
    #[error("ambient dimension is {got}, operation requires {expected}")]
    AmbientDimension { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("point {apex} does not have the strictly largest first coordinate")]
    ApexNotExtreme { apex: usize },
    #[error("triangle planes are parallel")]
    ParallelPlanes,
    #[error("degenerate position: {0}")]
    NotTransversal(String),
    #[error("projection produced an invalid configuration: {0}")]
    DegenerateProjection(String),
}

impl From<KernelError> for LinkingError {
    fn from(e: KernelError) -> Self {
        LinkingError::DegenerateProjection(e.to_string())
    }
}

/// How a linking verdict was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkMethod {
    Direct,
    Projection,
    LineAlternation,
    PlaneCriterion,
}

/// A linking decision together with the crossing count behind it.
/// Invariant: `linked` ⇔ `crossing_count` is odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkVerdict {
    pub linked: bool,
    pub crossing_count: usize,
    pub method: LinkMethod,
}

impl LinkVerdict {
    fn from_count(crossing_count: usize, method: LinkMethod) -> Self {
        LinkVerdict {
            linked: crossing_count % 2 == 1,
            crossing_count,
            method,
        }
    }
}

fn require_triangle(s: &SimplexRef) -> Result<(), LinkingError> {
    if s.dim() != 2 {
        return Err(LinkingError::InvalidInput(format!(
            "{:?} is not a triangle",
            s.indices()
        )));
    }
    Ok(())
}

/// Whether two vertex-disjoint triangles in ℝ³ are linked: the outline of
/// `t1` crosses the interior of `t2` an odd number of times.
pub fn triangles_linked<S: ExactScalar>(
    cfg: &Configuration<S>,
    t1: &SimplexRef,
    t2: &SimplexRef,
) -> Result<LinkVerdict, LinkingError> {
    if cfg.dimension() != 3 {
        return Err(LinkingError::AmbientDimension {
            expected: 3,
            got: cfg.dimension(),
        });
    }
    require_triangle(t1)?;
    require_triangle(t2)?;
    let count = outline_crossings(cfg, t1, t2)?;
    Ok(LinkVerdict::from_count(count, LinkMethod::Direct))
}

/// Whether two vertex-disjoint simplices of dimension (n+1)/2 in odd-
/// dimensional ℝⁿ are linked: the number of facets of `s1` whose relative
/// interior meets the relative interior of `s2` is odd. At n = 3 this is
/// exactly [`triangles_linked`].
pub fn simplices_linked<S: ExactScalar>(
    cfg: &Configuration<S>,
    s1: &SimplexRef,
    s2: &SimplexRef,
) -> Result<LinkVerdict, LinkingError> {
    let n = cfg.dimension();
    if n % 2 == 0 {
        return Err(LinkingError::InvalidInput(format!(
            "linking of equal-dimension simplices needs odd ambient dimension, got {n}"
        )));
    }
    let want = (n + 1) / 2;
    for s in [s1, s2] {
        if s.dim() != want {
            return Err(LinkingError::InvalidInput(format!(
                "{:?} has dimension {}, expected {want} in R^{n}",
                s.indices(),
                s.dim()
            )));
        }
    }
    let count = outline_crossings(cfg, s1, s2)?;
    Ok(LinkVerdict::from_count(count, LinkMethod::Direct))
}

/// Whether two vertex-disjoint closed quadrangular loops in ℝ³ are linked:
/// the sides of `loop1` cross the union of the two triangles A'B'C', A'C'D'
/// (the second loop split along its diagonal A'C') an odd number of times.
/// Splitting along the other diagonal gives the same verdict in general
/// position; that is a tested property, not an option.
pub fn quad_loops_linked<S: ExactScalar>(
    cfg: &Configuration<S>,
    loop1: &BrokenLine,
    loop2: &BrokenLine,
) -> Result<LinkVerdict, LinkingError> {
    if cfg.dimension() != 3 {
        return Err(LinkingError::AmbientDimension {
            expected: 3,
            got: cfg.dimension(),
        });
    }
    for l in [loop1, loop2] {
        if !l.is_closed() || l.vertices().len() != 4 {
            return Err(LinkingError::InvalidInput(format!(
                "expected a closed quadrangular loop, got {:?} (closed = {})",
                l.vertices(),
                l.is_closed()
            )));
        }
    }
    let [a, b, c, d] = *loop2.vertices() else {
        unreachable!("length checked above")
    };
    let split = [SimplexRef::triangle(a, b, c), SimplexRef::triangle(a, c, d)];
    let mut count = 0;
    for side in loop1.sides() {
        for triangle in &split {
            match crate::simplex::transversal_point(cfg, &side, triangle) {
                Ok(Some(_)) => count += 1,
                Ok(None) => {
                    // Distinguish a clean miss from a boundary touch: a
                    // touch would make the count split-dependent.
                    if let crate::simplex::Transversality::Touch =
                        crate::simplex::transversality(cfg, &side, triangle)?
                    {
                        return Err(LinkingError::Simplex(SimplexError::NotTransversal {
                            s1: side.indices().to_vec(),
                            s2: triangle.indices().to_vec(),
                        }));
                    }
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(LinkVerdict::from_count(count, LinkMethod::Direct))
}

/// Number of sides of the `opposite` triangle that the segment
/// `edge` passes below, looking from `apex`: a side S is counted when the
/// ray from the apex through a point of S meets the open edge beyond S,
/// which happens exactly when S transversally crosses the interior of the
/// triangle (apex, edge). Its parity equals the linking verdict of the
/// triangles (apex ∪ edge) and `opposite` — the projection lemma.
pub fn below_sides_count<S: ExactScalar>(
    cfg: &Configuration<S>,
    apex: usize,
    edge: (usize, usize),
    opposite: &SimplexRef,
) -> Result<usize, LinkingError> {
    if cfg.dimension() != 3 {
        return Err(LinkingError::AmbientDimension {
            expected: 3,
            got: cfg.dimension(),
        });
    }
    require_triangle(opposite)?;
    let cone = SimplexRef::new(vec![apex, edge.0, edge.1]).map_err(|_| {
        LinkingError::InvalidInput(format!(
            "apex {apex} and edge {edge:?} must be three distinct points"
        ))
    })?;
    Ok(outline_crossings(cfg, opposite, &cone)?)
}

/// Linking verdict through the projection lemma: parity of
/// [`below_sides_count`].
pub fn projection_linked<S: ExactScalar>(
    cfg: &Configuration<S>,
    apex: usize,
    edge: (usize, usize),
    opposite: &SimplexRef,
) -> Result<LinkVerdict, LinkingError> {
    let count = below_sides_count(cfg, apex, edge, opposite)?;
    Ok(LinkVerdict::from_count(count, LinkMethod::Projection))
}

/// Index of the unique point with strictly maximal first coordinate, or
/// `None` when the maximum is attained twice.
pub fn extreme_apex_index<S: ExactScalar>(cfg: &Configuration<S>) -> Option<usize> {
    let mut best = 0usize;
    let mut tied = false;
    for i in 1..cfg.len() {
        match cfg.coords(i)[0].cmp(&cfg.coords(best)[0]) {
            std::cmp::Ordering::Greater => {
                best = i;
                tied = false;
            }
            std::cmp::Ordering::Equal => tied = true,
            std::cmp::Ordering::Less => {}
        }
    }
    if tied {
        None
    } else {
        Some(best)
    }
}

/// Central projection from an extreme point: intersects every segment
/// apex→Pᵢ with the hyperplane x₁ = b, where b is the exact midpoint of the
/// apex's first coordinate and the second-largest first coordinate, and
/// returns the last d−1 coordinates of the intersection points. Labels are
/// preserved; the apex is dropped, so output index i corresponds to input
/// index i for i < apex and i+1 afterwards.
pub fn project_from_extreme<S: ExactScalar>(
    cfg: &Configuration<S>,
    apex: usize,
) -> Result<Configuration<S>, LinkingError> {
    let d = cfg.dimension();
    if d < 2 {
        return Err(LinkingError::AmbientDimension { expected: 2, got: d });
    }
    if apex >= cfg.len() || cfg.len() < 2 {
        return Err(LinkingError::InvalidInput(format!(
            "apex {apex} out of range for {} points",
            cfg.len()
        )));
    }
    let a = cfg.coords(apex)[0].clone();
    let mut second: Option<S> = None;
    for i in 0..cfg.len() {
        if i == apex {
            continue;
        }
        let x = &cfg.coords(i)[0];
        if *x >= a {
            return Err(LinkingError::ApexNotExtreme { apex });
        }
        if second.as_ref().is_none_or(|s| x > s) {
            second = Some(x.clone());
        }
    }
    let two = S::from_int(2);
    let b = (a.clone() + second.expect("at least one non-apex point")) / two;
    let points: Vec<Point<S>> = cfg
        .points()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != apex)
        .map(|(_, p)| {
            // Apex + t·(P − apex) meets x₁ = b at t = (a − b)/(a − x₁(P)).
            let t = (a.clone() - b.clone()) / (a.clone() - p.coords[0].clone());
            let coords = (1..d)
                .map(|c| {
                    cfg.coords(apex)[c].clone()
                        + t.clone() * (p.coords[c].clone() - cfg.coords(apex)[c].clone())
                })
                .collect();
            Point::new(p.label.clone(), coords)
        })
        .collect();
    Ok(Configuration::new(d - 1, points)?)
}

fn sub3<S: ExactScalar>(a: &[S], b: &[S]) -> [S; 3] {
    [
        a[0].clone() - b[0].clone(),
        a[1].clone() - b[1].clone(),
        a[2].clone() - b[2].clone(),
    ]
}

fn cross3<S: ExactScalar>(a: &[S; 3], b: &[S; 3]) -> [S; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn dot3<S: ExactScalar>(a: &[S; 3], b: &[S]) -> S {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

fn is_zero3<S: ExactScalar>(a: &[S; 3]) -> bool {
    a.iter().all(|x| x.sign() == 0)
}

/// Normal vector of a triangle's plane; `None` when the triangle is
/// degenerate (collinear vertices).
fn triangle_normal<S: ExactScalar>(
    cfg: &Configuration<S>,
    t: &SimplexRef,
) -> Option<[S; 3]> {
    let [a, b, c] = *t.indices() else { return None };
    let n = cross3(
        &sub3(cfg.coords(b), cfg.coords(a)),
        &sub3(cfg.coords(c), cfg.coords(a)),
    );
    if is_zero3(&n) {
        None
    } else {
        Some(n)
    }
}

/// The points where the outline of `t` crosses the plane with normal `n`
/// through the point `base`, or an error when a vertex of `t` lies exactly
/// on that plane. In general position there are 0 or 2 such points.
fn outline_plane_crossings<S: ExactScalar>(
    cfg: &Configuration<S>,
    t: &SimplexRef,
    n: &[S; 3],
    base: &[S],
) -> Result<Vec<Vec<S>>, LinkingError> {
    let g = |i: usize| -> S {
        let w = sub3(cfg.coords(i), base);
        dot3(n, &w)
    };
    let idx = t.indices();
    let mut out = Vec::new();
    for k in 0..3 {
        let (u, v) = (idx[k], idx[(k + 1) % 3]);
        let (gu, gv) = (g(u), g(v));
        if gu.sign() == 0 || gv.sign() == 0 {
            return Err(LinkingError::NotTransversal(format!(
                "a vertex of {:?} lies exactly on the other triangle's plane",
                idx
            )));
        }
        if gu.sign() == gv.sign() {
            continue;
        }
        let s = gu.clone() / (gu.clone() - gv);
        let w: Vec<S> = (0..3)
            .map(|c| {
                cfg.coords(u)[c].clone()
                    + s.clone() * (cfg.coords(v)[c].clone() - cfg.coords(u)[c].clone())
            })
            .collect();
        out.push(w);
    }
    Ok(out)
}

/// Linking by the common-line alternation criterion: the planes of the two
/// triangles meet in a line; each outline crosses that line at 0 or 2
/// points, and the triangles are linked exactly when the two point pairs
/// alternate along the line. The reported count is the number of `t2`
/// outline points strictly inside `t1`'s interval on the common line.
pub fn line_alternation_linked<S: ExactScalar>(
    cfg: &Configuration<S>,
    t1: &SimplexRef,
    t2: &SimplexRef,
) -> Result<LinkVerdict, LinkingError> {
    if cfg.dimension() != 3 {
        return Err(LinkingError::AmbientDimension {
            expected: 3,
            got: cfg.dimension(),
        });
    }
    require_triangle(t1)?;
    require_triangle(t2)?;
    if !t1.vertex_disjoint(t2) {
        return Err(LinkingError::Simplex(SimplexError::SharedVertices {
            s1: t1.indices().to_vec(),
            s2: t2.indices().to_vec(),
        }));
    }
    let n1 = triangle_normal(cfg, t1)
        .ok_or_else(|| LinkingError::NotTransversal(format!("triangle {:?} is degenerate", t1.indices())))?;
    let n2 = triangle_normal(cfg, t2)
        .ok_or_else(|| LinkingError::NotTransversal(format!("triangle {:?} is degenerate", t2.indices())))?;
    let dir = cross3(&n1, &n2);
    if is_zero3(&dir) {
        return Err(LinkingError::ParallelPlanes);
    }
    // Outline of t1 meets plane 2 exactly where it meets the common line,
    // because the outline already lies in plane 1; symmetrically for t2.
    let p1 = outline_plane_crossings(cfg, t1, &n2, cfg.coords(t2.indices()[0]))?;
    let p2 = outline_plane_crossings(cfg, t2, &n1, cfg.coords(t1.indices()[0]))?;
    if p1.is_empty() || p2.is_empty() {
        // An outline that never reaches the common line cannot pierce the
        // other triangle, so the pair is unlinked with no crossings.
        return Ok(LinkVerdict::from_count(0, LinkMethod::LineAlternation));
    }
    let tau = |w: &Vec<S>| dot3(&dir, w);
    let (mut lo, mut hi) = (tau(&p1[0]), tau(&p1[1]));
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let mut inside = 0;
    for w in &p2 {
        let t = tau(w);
        if t == lo || t == hi {
            return Err(LinkingError::NotTransversal(
                "outline points coincide on the common line".into(),
            ));
        }
        if lo < t && t < hi {
            inside += 1;
        }
    }
    Ok(LinkVerdict::from_count(inside, LinkMethod::LineAlternation))
}

/// Linking by the plane criterion: the outline of `t1` crosses the plane of
/// `t2` at 0 or 2 points, and the pair is linked exactly when one of those
/// points lies inside `t2` and the other outside. The count is the number
/// of crossing points strictly inside `t2`.
pub fn plane_criterion_linked<S: ExactScalar>(
    cfg: &Configuration<S>,
    t1: &SimplexRef,
    t2: &SimplexRef,
) -> Result<LinkVerdict, LinkingError> {
    if cfg.dimension() != 3 {
        return Err(LinkingError::AmbientDimension {
            expected: 3,
            got: cfg.dimension(),
        });
    }
    require_triangle(t1)?;
    require_triangle(t2)?;
    if !t1.vertex_disjoint(t2) {
        return Err(LinkingError::Simplex(SimplexError::SharedVertices {
            s1: t1.indices().to_vec(),
            s2: t2.indices().to_vec(),
        }));
    }
    let n2 = triangle_normal(cfg, t2)
        .ok_or_else(|| LinkingError::NotTransversal(format!("triangle {:?} is degenerate", t2.indices())))?;
    let crossings = outline_plane_crossings(cfg, t1, &n2, cfg.coords(t2.indices()[0]))?;
    let mut inside = 0;
    for w in &crossings {
        // Barycentric coordinates of w in t2: Σλᵥ·v = w, Σλ = 1. The system
        // is overdetermined (4 equations, 3 unknowns) but consistent because
        // w lies in t2's plane.
        let [a, b, c] = *t2.indices() else { unreachable!() };
        let mut rows: Vec<Vec<S>> = (0..3)
            .map(|d| {
                vec![
                    cfg.coords(a)[d].clone(),
                    cfg.coords(b)[d].clone(),
                    cfg.coords(c)[d].clone(),
                ]
            })
            .collect();
        rows.push(vec![S::one(), S::one(), S::one()]);
        let mut rhs: Vec<S> = w.clone();
        rhs.push(S::one());
        match crate::linalg::solve(&rows, &rhs) {
            crate::linalg::SolveOutcome::Unique(lambda) => {
                let signs: Vec<i8> = lambda.iter().map(|x| x.sign()).collect();
                if signs.iter().any(|&s| s == 0) {
                    return Err(LinkingError::NotTransversal(
                        "outline crosses the plane exactly on the triangle's boundary".into(),
                    ));
                }
                if signs.iter().all(|&s| s > 0) {
                    inside += 1;
                }
            }
            _ => {
                return Err(LinkingError::NotTransversal(
                    "degenerate barycentric system".into(),
                ))
            }
        }
    }
    Ok(LinkVerdict::from_count(inside, LinkMethod::PlaneCriterion))
}

/// For every split of the points into a target simplex on `target_arity`
/// vertices and the complementary simplex on the rest, the number of facets
/// of the complementary simplex the target crosses.
///
/// With n points in ℝⁿ⁻³ the complementary simplex's facets have
/// codimension-complementary dimension to the target for every arity, so
/// all crossing counts are well defined: segments against tetrahedron
/// surfaces for 6 points in ℝ³, triangles against tetrahedron surfaces for
/// 7 points in ℝ⁴. Splits come back in lexicographic order of the target's
/// index tuple, C(n, target_arity) entries total.
pub fn split_crossing_counts<S: ExactScalar>(
    cfg: &Configuration<S>,
    target_arity: usize,
) -> Result<Vec<(SimplexRef, usize)>, LinkingError> {
    let n = cfg.len();
    if target_arity < 2 || n < target_arity + 2 {
        return Err(LinkingError::InvalidInput(format!(
            "splits into {target_arity} + {} points are not available on {n} points",
            n.saturating_sub(target_arity)
        )));
    }
    if cfg.dimension() + 3 != n {
        return Err(LinkingError::AmbientDimension {
            expected: n.saturating_sub(3),
            got: cfg.dimension(),
        });
    }
    let mut counts = Vec::new();
    for target_idx in (0..n).combinations(target_arity) {
        let body_idx: Vec<usize> = (0..n).filter(|i| !target_idx.contains(i)).collect();
        let target = SimplexRef::new(target_idx).expect("combination indices are valid");
        let body = SimplexRef::new(body_idx).expect("complementary index set is valid");
        let crossings = outline_crossings(cfg, &body, &target)?;
        counts.push((target, crossings));
    }
    Ok(counts)
}
