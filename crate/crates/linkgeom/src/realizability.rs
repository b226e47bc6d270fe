//! Exact classification of closed-simplex pair intersections and
//! validation of embedded segment/triangle sets, i.e. linear realizations
//! of graphs and 2-hypergraphs.
//!
//! The heart of the module is [`classify_pair`]: one uniform exact-LP
//! procedure that decides how two closed segments or triangles meet,
//! covering disjoint, touching, crossing, and coplanar-overlap cases
//! without geometric case analysis. Everything else — embedded-set
//! checks, hypergraph realization checks — is a loop over it.

use thiserror::Error;

use crate::kernel::{affinely_independent, Configuration};
use crate::lp::{self, LpOutcome};
use crate::scalar::ExactScalar;
use crate::simplex::{outline_crossings, SimplexError, SimplexRef};

#[derive(Debug, Error)]
pub enum RealizabilityError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate face: mapped triple {0:?} is collinear")]
    DegenerateFace(Vec<usize>),
    #[error(transparent)]
    Simplex(#[from] SimplexError),
}

fn bad(msg: impl Into<String>) -> RealizabilityError {
    RealizabilityError::InvalidInput(msg.into())
}

/// A 2-dimensional hypergraph: a vertex count, a set of 3-element faces,
/// and optionally a set of 2-element extra edges (for families mixing
/// segments and triangles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph2 {
    vertices: usize,
    faces: Vec<[usize; 3]>,
    edges: Vec<[usize; 2]>,
}

impl Hypergraph2 {
    /// Validates that faces are distinct 3-subsets and edges distinct
    /// 2-subsets of the vertex range. Index lists are stored sorted.
    pub fn new(
        vertices: usize,
        faces: Vec<[usize; 3]>,
        edges: Vec<[usize; 2]>,
    ) -> Result<Self, RealizabilityError> {
        let mut seen_faces = std::collections::BTreeSet::new();
        let mut normalized_faces = Vec::with_capacity(faces.len());
        for mut f in faces {
            f.sort_unstable();
            if f[0] == f[1] || f[1] == f[2] {
                return Err(bad(format!("face {f:?} repeats a vertex")));
            }
            if f[2] >= vertices {
                return Err(bad(format!("face {f:?} exceeds vertex count {vertices}")));
            }
            if !seen_faces.insert(f) {
                return Err(bad(format!("face {f:?} appears twice")));
            }
            normalized_faces.push(f);
        }
        let mut seen_edges = std::collections::BTreeSet::new();
        let mut normalized_edges = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e[0] == e[1] {
                return Err(bad(format!("edge {e:?} repeats a vertex")));
            }
            if e[1] >= vertices {
                return Err(bad(format!("edge {e:?} exceeds vertex count {vertices}")));
            }
            if !seen_edges.insert(e) {
                return Err(bad(format!("edge {e:?} appears twice")));
            }
            normalized_edges.push(e);
        }
        Ok(Self {
            vertices,
            faces: normalized_faces,
            edges: normalized_edges,
        })
    }

    /// The complete 2-hypergraph: every 3-subset of `vertices` is a face.
    pub fn complete(vertices: usize) -> Self {
        let mut faces = Vec::new();
        for a in 0..vertices {
            for b in a + 1..vertices {
                for c in b + 1..vertices {
                    faces.push([a, b, c]);
                }
            }
        }
        Self {
            vertices,
            faces,
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }
}

/// How two closed simplices meet: the admissible ways for an embedded
/// set (disjoint, a common vertex, a common edge) or improperly, with an
/// exact witness point common to both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairClass<S> {
    Disjoint,
    CommonVertexOnly,
    CommonEdgeOnly,
    Improper(Vec<S>),
}

impl<S> PairClass<S> {
    pub fn is_proper(&self) -> bool {
        !matches!(self, PairClass::Improper(_))
    }
}

/// Classifies the intersection of two closed segments or triangles in any
/// ambient dimension ≥ 2.
///
/// Let F be the set of shared vertices. The intersection of the two
/// closed hulls is a polytope, described exactly by a linear system over
/// the two barycentric coordinate lists. The pair is proper exactly when
/// that intersection is conv(F): empty for F = ∅, the shared vertex, or
/// the shared edge. This is decided by maximizing, over the common-point
/// polytope, each barycentric coordinate belonging to a vertex outside F
/// — for nondegenerate simplices all maxima are zero iff every common
/// point lies in conv(F).
///
/// Degenerate (collinear) triangles have non-unique barycentric
/// coordinates and can misreport; realization checking rejects them
/// before calling this (see [`is_linear_realization`]).
///
/// Two copies of the same simplex are always `Improper` (witnessed by the
/// barycenter): a duplicated face never forms an embedded set.
pub fn classify_pair<S: ExactScalar>(
    cfg: &Configuration<S>,
    s1: &SimplexRef,
    s2: &SimplexRef,
) -> Result<PairClass<S>, RealizabilityError> {
    let d = cfg.dimension();
    if d < 2 {
        return Err(bad(format!("ambient dimension must be at least 2, got {d}")));
    }
    for s in [s1, s2] {
        if s.dim() != 1 && s.dim() != 2 {
            return Err(bad(format!(
                "only segments and triangles are classified, got dimension {}",
                s.dim()
            )));
        }
        if s.indices().iter().any(|&i| i >= cfg.len()) {
            return Err(bad(format!(
                "simplex {:?} references a point out of range",
                s.indices()
            )));
        }
    }
    // Canonical argument order makes the result — witness included —
    // symmetric in the two simplices.
    let (s1, s2) = if s1.indices() <= s2.indices() {
        (s1, s2)
    } else {
        (s2, s1)
    };
    let v1 = s1.indices();
    let v2 = s2.indices();

    if v1 == v2 {
        let k = v1.len();
        let w = S::one() / S::from_int(k as i64);
        let mut barycenter = vec![S::zero(); d];
        for &i in v1 {
            for (c, x) in barycenter.iter_mut().enumerate() {
                *x = x.clone() + w.clone() * cfg.coords(i)[c].clone();
            }
        }
        return Ok(PairClass::Improper(barycenter));
    }

    let shared: Vec<usize> = v1.iter().copied().filter(|i| v2.contains(i)).collect();

    // Bounding-box prefilter: strict separation along any coordinate
    // proves disjointness without an LP.
    if shared.is_empty() {
        for c in 0..d {
            let bounds = |v: &[usize]| {
                let lo = v.iter().map(|&i| &cfg.coords(i)[c]).min().unwrap();
                let hi = v.iter().map(|&i| &cfg.coords(i)[c]).max().unwrap();
                (lo, hi)
            };
            let (min1, max1) = bounds(v1);
            let (min2, max2) = bounds(v2);
            if max1 < min2 || max2 < min1 {
                return Ok(PairClass::Disjoint);
            }
        }
    }

    // Common-point polytope: variables are the two barycentric lists.
    let k1 = v1.len();
    let k2 = v2.len();
    let vars = k1 + k2;
    let mut a: Vec<Vec<S>> = Vec::with_capacity(d + 2);
    let mut b: Vec<S> = Vec::with_capacity(d + 2);
    for c in 0..d {
        let mut row = vec![S::zero(); vars];
        for (j, &i) in v1.iter().enumerate() {
            row[j] = cfg.coords(i)[c].clone();
        }
        for (j, &i) in v2.iter().enumerate() {
            row[k1 + j] = S::zero() - cfg.coords(i)[c].clone();
        }
        a.push(row);
        b.push(S::zero());
    }
    for range in [0..k1, k1..vars] {
        let mut row = vec![S::zero(); vars];
        for j in range {
            row[j] = S::one();
        }
        a.push(row);
        b.push(S::one());
    }

    let common_point = |solution: &[S]| -> Vec<S> {
        let mut x = vec![S::zero(); d];
        for (j, &i) in v1.iter().enumerate() {
            for (c, xc) in x.iter_mut().enumerate() {
                *xc = xc.clone() + solution[j].clone() * cfg.coords(i)[c].clone();
            }
        }
        x
    };

    if shared.is_empty() {
        return Ok(match lp::feasible_point(&a, &b) {
            None => PairClass::Disjoint,
            Some(solution) => PairClass::Improper(common_point(&solution)),
        });
    }

    // The shared vertices witness feasibility, so only the question
    // "does any common point put weight on a vertex outside F?" remains.
    let outside: Vec<usize> = v1
        .iter()
        .enumerate()
        .filter(|(_, i)| !shared.contains(i))
        .map(|(j, _)| j)
        .chain(
            v2.iter()
                .enumerate()
                .filter(|(_, i)| !shared.contains(i))
                .map(|(j, _)| k1 + j),
        )
        .collect();
    for var in outside {
        let mut objective = vec![S::zero(); vars];
        objective[var] = S::one();
        match lp::maximize(&a, &b, &objective) {
            LpOutcome::Optimal { value, solution } => {
                if value.sign() > 0 {
                    return Ok(PairClass::Improper(common_point(&solution)));
                }
            }
            LpOutcome::Infeasible => {
                unreachable!("a shared vertex is always a common point")
            }
            LpOutcome::Unbounded => {
                unreachable!("barycentric coordinates are bounded by 1")
            }
        }
    }
    Ok(match shared.len() {
        1 => PairClass::CommonVertexOnly,
        2 => PairClass::CommonEdgeOnly,
        n => unreachable!("{n} shared vertices on distinct segments or triangles"),
    })
}

/// Whether every unordered pair of the family meets properly (disjoint,
/// common vertex, or common edge). On failure the indices of the first
/// improper pair, in family order, are returned.
pub fn is_embedded<S: ExactScalar>(
    cfg: &Configuration<S>,
    simplices: &[SimplexRef],
) -> Result<(bool, Option<(usize, usize)>), RealizabilityError> {
    for i in 0..simplices.len() {
        for j in i + 1..simplices.len() {
            if !classify_pair(cfg, &simplices[i], &simplices[j])?.is_proper() {
                return Ok((false, Some((i, j))));
            }
        }
    }
    Ok((true, None))
}

/// Whether mapping the hypergraph's vertices onto the configuration's
/// points (vertex `v` to point `vertex_map[v]`) makes the face and
/// extra-edge family an embedded set.
///
/// The map must be a bijection, and every mapped face nondegenerate —
/// a realization with flat faces is not an embedding, so collinear
/// triples are an error, not a `false`. A witness pair indexes the
/// combined family, faces first, then edges.
pub fn is_linear_realization<S: ExactScalar>(
    hg: &Hypergraph2,
    cfg: &Configuration<S>,
    vertex_map: &[usize],
) -> Result<(bool, Option<(usize, usize)>), RealizabilityError> {
    if vertex_map.len() != hg.vertices() {
        return Err(bad(format!(
            "vertex map has {} entries for {} vertices",
            vertex_map.len(),
            hg.vertices()
        )));
    }
    if cfg.len() != hg.vertices() {
        return Err(bad(format!(
            "a bijection needs {} points, the configuration has {}",
            hg.vertices(),
            cfg.len()
        )));
    }
    let mut hit = vec![false; cfg.len()];
    for &p in vertex_map {
        if p >= cfg.len() {
            return Err(bad(format!("vertex map entry {p} is out of range")));
        }
        if hit[p] {
            return Err(bad(format!("vertex map repeats point {p}")));
        }
        hit[p] = true;
    }

    let mut family = Vec::with_capacity(hg.faces().len() + hg.edges().len());
    for f in hg.faces() {
        let mapped = [vertex_map[f[0]], vertex_map[f[1]], vertex_map[f[2]]];
        if !affinely_independent(cfg, &mapped) {
            return Err(RealizabilityError::DegenerateFace(f.to_vec()));
        }
        family.push(SimplexRef::triangle(mapped[0], mapped[1], mapped[2]));
    }
    for e in hg.edges() {
        family.push(SimplexRef::segment(vertex_map[e[0]], vertex_map[e[1]]));
    }
    is_embedded(cfg, &family)
}

/// Whether the open segment `pq` crosses the outline of the triangle an
/// odd number of times — in the plane, whether `p` and `q` lie on
/// opposite sides of the triangle.
///
/// Errors when the segment meets the outline non-transversally (through
/// a vertex, along a side, or touching without crossing).
pub fn separated_sides<S: ExactScalar>(
    cfg: &Configuration<S>,
    p: usize,
    q: usize,
    triangle: [usize; 3],
) -> Result<bool, RealizabilityError> {
    if cfg.dimension() != 2 {
        return Err(bad(format!(
            "side separation is a planar test, got dimension {}",
            cfg.dimension()
        )));
    }
    for &i in triangle.iter().chain([p, q].iter()) {
        if i >= cfg.len() {
            return Err(bad(format!("point {i} is out of range")));
        }
    }
    if triangle.contains(&p) || triangle.contains(&q) || p == q {
        return Err(bad(
            "the segment endpoints must be distinct and disjoint from the triangle",
        ));
    }
    let outline = SimplexRef::triangle(triangle[0], triangle[1], triangle[2]);
    let segment = SimplexRef::segment(p, q);
    let crossings = outline_crossings(cfg, &outline, &segment)?;
    Ok(crossings % 2 == 1)
}
