//! One verifier per theorem: each consumes a configuration (or grid),
//! checks preconditions, computes the relevant parity count or witness
//! set, and emits a [`ParityReport`].
//!
//! Degeneracy is a first-class verdict, never an exception: where the
//! theorem has a weaker first sentence that survives degenerate positions
//! (a closed intersecting pair exists), the verifier falls back to
//! searching for that witness. Arity and dimension are hard errors —
//! counts over wrong arities are meaningless. A `Violated` verdict on an
//! input passing the verifier's own position checks is a bug alarm, not a
//! result; the master conformance property is that it never happens.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{deleted_face_family, ProductGrid};
use crate::kernel::{affinely_independent, is_general_position, Configuration};
use crate::linking::{
    quad_loops_linked, simplices_linked, split_crossing_counts, triangles_linked,
};
use crate::realizability::{classify_pair, is_embedded, PairClass};
use crate::scalar::ExactScalar;
use crate::simplex::{
    broken_line_crossings, interior_crossing_pairs, transversality, BrokenLine, SimplexRef,
    Transversality,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum VerifierError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

fn invalid(msg: impl Into<String>) -> VerifierError {
    VerifierError::InvalidInput(msg.into())
}

/// What the theorem asserts about the computed count or witness set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Odd,
    Even,
    WitnessExists,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Violated,
    Degenerate,
}

/// The outcome of one verifier run. `witnesses` holds index tuples into
/// the input configuration: for a pair of simplices, the two index tuples
/// concatenated.
#[derive(Clone, Debug, Serialize)]
pub struct ParityReport {
    pub theorem: String,
    pub input_summary: String,
    pub count: usize,
    pub claim: Claim,
    pub verdict: Verdict,
    pub witnesses: Vec<Vec<usize>>,
    pub degeneracy: Option<String>,
    pub note: Option<String>,
}

impl ParityReport {
    fn parity(
        theorem: &str,
        input_summary: String,
        count: usize,
        claim: Claim,
        witnesses: Vec<Vec<usize>>,
    ) -> Self {
        let holds = match claim {
            Claim::Odd => count % 2 == 1,
            Claim::Even => count % 2 == 0,
            Claim::WitnessExists => !witnesses.is_empty(),
        };
        ParityReport {
            theorem: theorem.into(),
            input_summary,
            count,
            claim,
            verdict: if holds {
                Verdict::Confirmed
            } else {
                Verdict::Violated
            },
            witnesses,
            degeneracy: None,
            note: None,
        }
    }

    fn degenerate(
        theorem: &str,
        input_summary: String,
        claim: Claim,
        degeneracy: String,
        witnesses: Vec<Vec<usize>>,
    ) -> Self {
        ParityReport {
            theorem: theorem.into(),
            input_summary,
            count: witnesses.len(),
            claim,
            verdict: Verdict::Degenerate,
            witnesses,
            degeneracy: Some(degeneracy),
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

fn summary<S: ExactScalar>(cfg: &Configuration<S>) -> String {
    format!(
        "{} points in R^{} ({})",
        cfg.len(),
        cfg.dimension(),
        S::FIELD_NAME
    )
}

fn require<S: ExactScalar>(
    cfg: &Configuration<S>,
    points: usize,
    dimension: usize,
    theorem: &str,
) -> Result<(), VerifierError> {
    if cfg.len() != points || cfg.dimension() != dimension {
        return Err(invalid(format!(
            "{theorem} needs exactly {points} points in R^{dimension}, got {} in R^{}",
            cfg.len(),
            cfg.dimension()
        )));
    }
    Ok(())
}

fn pair_witness(s1: &SimplexRef, s2: &SimplexRef) -> Vec<usize> {
    let mut w = s1.indices().to_vec();
    w.extend_from_slice(s2.indices());
    w
}

/// All simplices on `arity` of the first `n` indices, lexicographic.
fn all_simplices(n: usize, arity: usize) -> Vec<SimplexRef> {
    (0..n)
        .combinations(arity)
        .map(|idx| SimplexRef::new(idx).expect("combination indices are valid"))
        .collect()
}

/// First vertex-disjoint pair from `family` whose closed simplices
/// intersect — the first-sentence fallback witness for degenerate inputs.
fn closed_intersecting_pair<S: ExactScalar>(
    cfg: &Configuration<S>,
    family: &[SimplexRef],
) -> Option<Vec<usize>> {
    for (i, j) in (0..family.len()).tuple_combinations() {
        if !family[i].vertex_disjoint(&family[j]) {
            continue;
        }
        if let Ok(PairClass::Improper(_)) = classify_pair(cfg, &family[i], &family[j]) {
            return Some(pair_witness(&family[i], &family[j]));
        }
    }
    None
}

/// Five points in the plane: the number of interior intersection points
/// of segments with disjoint vertex pairs is odd. Degenerate positions
/// fall back to the first-sentence claim — some two vertex-disjoint closed
/// segments intersect.
pub fn verify_plane_intersection<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 5, 2, "the plane intersection count")?;
    let theorem = "plane";
    let family = all_simplices(5, 2);
    match interior_crossing_pairs(cfg, &family, true) {
        Ok(pairs) => {
            let witnesses = pairs
                .iter()
                .map(|&(i, j)| pair_witness(&family[i], &family[j]))
                .collect::<Vec<_>>();
            Ok(ParityReport::parity(
                theorem,
                summary(cfg),
                pairs.len(),
                Claim::Odd,
                witnesses,
            ))
        }
        Err(e) => {
            let witnesses = closed_intersecting_pair(cfg, &family)
                .into_iter()
                .collect::<Vec<_>>();
            Ok(ParityReport::degenerate(
                theorem,
                summary(cfg),
                Claim::WitnessExists,
                e.to_string(),
                witnesses,
            )
            .with_note("degenerate position: reporting a closed intersecting segment pair"))
        }
    }
}

/// Two labeled triples in the plane (points 0–2 and 3–5): the number of
/// crossings among the nine bipartite segments, over disjoint vertex
/// pairs, is odd.
pub fn verify_k33_plane<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 6, 2, "the bipartite plane count")?;
    let theorem = "k33-plane";
    let family: Vec<SimplexRef> = (0..3)
        .flat_map(|i| (3..6).map(move |j| SimplexRef::segment(i, j)))
        .collect();
    match interior_crossing_pairs(cfg, &family, true) {
        Ok(pairs) => {
            let witnesses = pairs
                .iter()
                .map(|&(i, j)| pair_witness(&family[i], &family[j]))
                .collect::<Vec<_>>();
            Ok(ParityReport::parity(
                theorem,
                format!("3 + 3 points in R^2 ({})", S::FIELD_NAME),
                pairs.len(),
                Claim::Odd,
                witnesses,
            )
            .with_note("witnesses double as intersecting-pair examples"))
        }
        Err(e) => {
            let witnesses = closed_intersecting_pair(cfg, &family)
                .into_iter()
                .collect::<Vec<_>>();
            Ok(ParityReport::degenerate(
                theorem,
                format!("3 + 3 points in R^2 ({})", S::FIELD_NAME),
                Claim::WitnessExists,
                e.to_string(),
                witnesses,
            ))
        }
    }
}

/// Four red points (0–3) and two blue points (4, 5) in the plane, where
/// bichromatic segments may only meet at common vertices: some ordered red
/// pair (a, b) has the property that the segment joining the remaining two
/// reds crosses the broken line a–B1–b–B2 an odd number of times. Each
/// witness lists the broken line's four vertices then the segment's two.
pub fn verify_red_blue_quad<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 6, 2, "the red-blue broken line theorem")?;
    let theorem = "red-blue-quad";
    let input = format!("4 red + 2 blue points in R^2 ({})", S::FIELD_NAME);

    if let (false, witness) = is_general_position(cfg) {
        return Ok(ParityReport::degenerate(
            theorem,
            input,
            Claim::WitnessExists,
            format!("points are not in general position: {witness:?}"),
            Vec::new(),
        ));
    }
    // Bichromatic segments may only intersect at their common vertex.
    let bichromatic: Vec<SimplexRef> = (0..4)
        .flat_map(|r| (4..6).map(move |b| SimplexRef::segment(r, b)))
        .collect();
    if let Some(w) = improper_pair(cfg, &bichromatic) {
        return Ok(ParityReport::degenerate(
            theorem,
            input,
            Claim::WitnessExists,
            "two bichromatic segments intersect beyond a common vertex".into(),
            vec![w],
        ));
    }

    let mut witnesses = Vec::new();
    for a in 0..4usize {
        for b in 0..4usize {
            if a == b {
                continue;
            }
            let rest: Vec<usize> = (0..4).filter(|&r| r != a && r != b).collect();
            let line = BrokenLine::open(vec![a, 4, b, 5]).expect("distinct vertices");
            let segment = BrokenLine::open(vec![rest[0], rest[1]]).expect("distinct vertices");
            match broken_line_crossings(cfg, &line, &segment) {
                Ok(count) if count % 2 == 1 => {
                    witnesses.push(vec![a, 4, b, 5, rest[0], rest[1]]);
                }
                Ok(_) => {}
                Err(e) => {
                    return Ok(ParityReport::degenerate(
                        theorem,
                        input,
                        Claim::WitnessExists,
                        e.to_string(),
                        Vec::new(),
                    ));
                }
            }
        }
    }
    let count = witnesses.len();
    Ok(ParityReport::parity(
        theorem,
        input,
        count,
        Claim::WitnessExists,
        witnesses,
    ))
}

/// First pair of `family` segments intersecting improperly (beyond a
/// shared vertex), as a witness tuple.
fn improper_pair<S: ExactScalar>(
    cfg: &Configuration<S>,
    family: &[SimplexRef],
) -> Option<Vec<usize>> {
    for (i, j) in (0..family.len()).tuple_combinations() {
        let class = classify_pair(cfg, &family[i], &family[j])
            .expect("segment pairs in the plane or space are classifiable");
        if !class.is_proper() {
            return Some(pair_witness(&family[i], &family[j]));
        }
    }
    None
}

/// Five points in general position in the plane: the number of segments
/// crossing the outline of the complementary triangle exactly once is
/// even. Witnesses are the segments with an odd (here: single) crossing.
pub fn verify_unlinking_plane<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 5, 2, "the plane unlinking count")?;
    let theorem = "unlinking-plane";
    if let (false, witness) = is_general_position(cfg) {
        return Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Even,
            format!("points are not in general position: {witness:?}"),
            Vec::new(),
        ));
    }
    match split_crossing_counts(cfg, 2) {
        Ok(counts) => {
            let witnesses: Vec<Vec<usize>> = counts
                .iter()
                .filter(|(_, c)| *c == 1)
                .map(|(s, _)| s.indices().to_vec())
                .collect();
            Ok(ParityReport::parity(
                theorem,
                summary(cfg),
                witnesses.len(),
                Claim::Even,
                witnesses,
            ))
        }
        Err(e) => Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Even,
            e.to_string(),
            Vec::new(),
        )),
    }
}

/// Six points in general position in 3-space: the number of linked
/// unordered pairs of vertex-disjoint triangles is odd (the linear
/// Conway–Gordon–Sachs count). Witnesses are the linked pairs.
pub fn verify_cgs<S: ExactScalar>(cfg: &Configuration<S>) -> Result<ParityReport, VerifierError> {
    require(cfg, 6, 3, "the spatial linking count")?;
    let theorem = "cgs";
    if let (false, witness) = is_general_position(cfg) {
        return Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Odd,
            format!(
                "points are not in general position ({witness:?} affinely dependent); \
                 perturbing the input restores the count"
            ),
            Vec::new(),
        ));
    }
    let mut witnesses = Vec::new();
    let mut pairs = 0usize;
    for first in (1..6usize).combinations(2) {
        let t1 = SimplexRef::triangle(0, first[0], first[1]);
        let rest: Vec<usize> = (1..6).filter(|i| !first.contains(i)).collect();
        let t2 = SimplexRef::new(rest).expect("three remaining indices");
        pairs += 1;
        match triangles_linked(cfg, &t1, &t2) {
            Ok(v) if v.linked => witnesses.push(pair_witness(&t1, &t2)),
            Ok(_) => {}
            Err(e) => {
                return Ok(ParityReport::degenerate(
                    theorem,
                    summary(cfg),
                    Claim::Odd,
                    e.to_string(),
                    Vec::new(),
                ));
            }
        }
    }
    debug_assert_eq!(pairs, 10);
    let count = witnesses.len();
    Ok(ParityReport::parity(
        theorem,
        summary(cfg),
        count,
        Claim::Odd,
        witnesses,
    ))
}

/// Six points in 3-space: some segment on two of them meets the closed
/// triangle spanned by three of the remaining points. Witnesses list the
/// segment pair then the triple.
pub fn verify_intersection_r3<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 6, 3, "the spatial intersection theorem")?;
    let theorem = "intersection-r3";
    let mut witnesses = Vec::new();
    for pair in (0..6usize).combinations(2) {
        let segment = SimplexRef::new(pair.clone()).expect("two indices");
        for triple in (0..6usize)
            .filter(|i| !pair.contains(i))
            .combinations(3)
        {
            let triangle = SimplexRef::new(triple).expect("three indices");
            let class = classify_pair(cfg, &segment, &triangle)
                .expect("segment/triangle pairs are classifiable");
            if let PairClass::Improper(_) = class {
                witnesses.push(pair_witness(&segment, &triangle));
            }
        }
    }
    let count = witnesses.len();
    Ok(ParityReport::parity(
        theorem,
        summary(cfg),
        count,
        Claim::WitnessExists,
        witnesses,
    ))
}

/// Six points in general position in 3-space: the number of segments
/// meeting the complementary tetrahedron's surface exactly once is even.
pub fn verify_unlinking_r3<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 6, 3, "the spatial unlinking count")?;
    let theorem = "unlinking-r3";
    if let (false, witness) = is_general_position(cfg) {
        return Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Even,
            format!("points are not in general position: {witness:?}"),
            Vec::new(),
        ));
    }
    match split_crossing_counts(cfg, 2) {
        Ok(counts) => {
            let witnesses: Vec<Vec<usize>> = counts
                .iter()
                .filter(|(_, c)| *c == 1)
                .map(|(s, _)| s.indices().to_vec())
                .collect();
            Ok(ParityReport::parity(
                theorem,
                summary(cfg),
                witnesses.len(),
                Claim::Even,
                witnesses,
            ))
        }
        Err(e) => Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Even,
            e.to_string(),
            Vec::new(),
        )),
    }
}

/// Four red points (0–3) and four blue points (4–7) in 3-space whose
/// bichromatic segments only meet at common vertices: two vertex-disjoint
/// closed quadrangular broken lines with alternating colors are linked.
/// Witnesses list both loops' vertices in traversal order.
pub fn verify_sachs<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 8, 3, "the linear Sachs theorem")?;
    let theorem = "sachs";
    let input = format!("4 red + 4 blue points in R^3 ({})", S::FIELD_NAME);

    let bichromatic: Vec<SimplexRef> = (0..4)
        .flat_map(|r| (4..8).map(move |b| SimplexRef::segment(r, b)))
        .collect();
    if let Some(w) = improper_pair(cfg, &bichromatic) {
        return Ok(ParityReport::degenerate(
            theorem,
            input,
            Claim::WitnessExists,
            "two bichromatic segments intersect beyond a common vertex".into(),
            vec![w],
        ));
    }

    // Red splits {0, x} vs rest, blue splits {4, y} vs rest, and both ways
    // of assigning blue pairs to red pairs: 3 × 3 × 2 = 18 loop pairs (a
    // 4-cycle on two reds and two blues is unique, so loop order within a
    // pair is immaterial).
    let mut witnesses = Vec::new();
    for x in 1..4usize {
        let reds1 = [0, x];
        let reds2: Vec<usize> = (1..4).filter(|&r| r != x).collect();
        for y in 5..8usize {
            let blues1 = [4, y];
            let blues2: Vec<usize> = (5..8).filter(|&b| b != y).collect();
            for swap in [false, true] {
                let (b_for_1, b_for_2) = if swap {
                    (&blues2[..], &blues1[..])
                } else {
                    (&blues1[..], &blues2[..])
                };
                let l1 = BrokenLine::closed(vec![reds1[0], b_for_1[0], reds1[1], b_for_1[1]])
                    .expect("distinct loop vertices");
                let l2 = BrokenLine::closed(vec![reds2[0], b_for_2[0], reds2[1], b_for_2[1]])
                    .expect("distinct loop vertices");
                match quad_loops_linked(cfg, &l1, &l2) {
                    Ok(v) if v.linked => {
                        let mut w = l1.vertices().to_vec();
                        w.extend_from_slice(l2.vertices());
                        witnesses.push(w);
                    }
                    Ok(_) => {}
                    Err(e) => {
                        return Ok(ParityReport::degenerate(
                            theorem,
                            input,
                            Claim::WitnessExists,
                            e.to_string(),
                            Vec::new(),
                        ));
                    }
                }
            }
        }
    }
    let count = witnesses.len();
    Ok(ParityReport::parity(
        theorem,
        input,
        count,
        Claim::WitnessExists,
        witnesses,
    ))
}

/// Seven points in general position in 4-space: the number of interior
/// intersection points of vertex-disjoint triangle pairs is odd (the
/// linear van Kampen–Flores count). Degenerate positions fall back to the
/// first-sentence claim over closed triangles.
pub fn verify_vkf<S: ExactScalar>(cfg: &Configuration<S>) -> Result<ParityReport, VerifierError> {
    require(cfg, 7, 4, "the 4-space triangle count")?;
    let theorem = "vkf";
    let family = all_simplices(7, 3);
    if let (false, witness) = is_general_position(cfg) {
        let witnesses = closed_intersecting_pair(cfg, &family)
            .into_iter()
            .collect::<Vec<_>>();
        return Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::WitnessExists,
            format!("points are not in general position: {witness:?}"),
            witnesses,
        )
        .with_note("degenerate position: reporting a closed intersecting triangle pair"));
    }
    match interior_crossing_pairs(cfg, &family, true) {
        Ok(pairs) => {
            let witnesses = pairs
                .iter()
                .map(|&(i, j)| pair_witness(&family[i], &family[j]))
                .collect::<Vec<_>>();
            Ok(ParityReport::parity(
                theorem,
                summary(cfg),
                pairs.len(),
                Claim::Odd,
                witnesses,
            ))
        }
        Err(e) => Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Odd,
            e.to_string(),
            Vec::new(),
        )),
    }
}

/// Seven points in general position in 4-space: the sum over all triangles
/// of their crossing counts with the complementary tetrahedron's surface
/// is even. Witnesses are the triangles with odd individual counts.
pub fn verify_unlinking_r4<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 7, 4, "the 4-space unlinking sum")?;
    let theorem = "unlinking-r4";
    if let (false, witness) = is_general_position(cfg) {
        return Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Even,
            format!("points are not in general position: {witness:?}"),
            Vec::new(),
        ));
    }
    match split_crossing_counts(cfg, 3) {
        Ok(counts) => {
            let total: usize = counts.iter().map(|(_, c)| c).sum();
            let witnesses: Vec<Vec<usize>> = counts
                .iter()
                .filter(|(_, c)| c % 2 == 1)
                .map(|(t, _)| t.indices().to_vec())
                .collect();
            Ok(ParityReport::parity(
                theorem,
                summary(cfg),
                total,
                Claim::Even,
                witnesses,
            )
            .with_note("witnesses are the triangles with odd individual crossing counts"))
        }
        Err(e) => Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Even,
            e.to_string(),
            Vec::new(),
        )),
    }
}

/// Three labeled triples (0–2, 3–5, 6–8) in 4-space: two vertex-disjoint
/// closed triangles, each taking one vertex from every triple, intersect.
/// Witnesses list both transversal triangles triple by triple.
pub fn verify_join3<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> Result<ParityReport, VerifierError> {
    require(cfg, 9, 4, "the three-triple intersection theorem")?;
    let theorem = "join3";
    let input = format!("3 + 3 + 3 points in R^4 ({})", S::FIELD_NAME);
    let mut witnesses = Vec::new();
    let mut pairs = 0usize;
    for a1 in 0..3usize {
        for a2 in (a1 + 1)..3 {
            for b1 in 3..6usize {
                for b2 in (3..6usize).filter(|&b| b != b1) {
                    for c1 in 6..9usize {
                        for c2 in (6..9usize).filter(|&c| c != c1) {
                            pairs += 1;
                            let t1 = SimplexRef::triangle(a1, b1, c1);
                            let t2 = SimplexRef::triangle(a2, b2, c2);
                            let class = classify_pair(cfg, &t1, &t2)
                                .expect("triangle pairs in R^4 are classifiable");
                            if let PairClass::Improper(_) = class {
                                witnesses.push(vec![a1, b1, c1, a2, b2, c2]);
                            }
                        }
                    }
                }
            }
        }
    }
    debug_assert_eq!(pairs, 108);
    let count = witnesses.len();
    Ok(ParityReport::parity(
        theorem,
        input,
        count,
        Claim::WitnessExists,
        witnesses,
    ))
}

/// n + 3 points in general position in n-space: for even n the number of
/// interior intersections of vertex-disjoint (n/2)-simplex pairs is odd;
/// for odd n the number of linked vertex-disjoint ((n+1)/2)-simplex pairs
/// is odd. `max_n` caps the enumeration (the CLI default is 8).
pub fn verify_intersection_linking<S: ExactScalar>(
    cfg: &Configuration<S>,
    max_n: usize,
) -> Result<ParityReport, VerifierError> {
    let n = cfg.dimension();
    let theorem = "intersection-linking";
    if n < 1 || n > max_n {
        return Err(invalid(format!(
            "the intersection/linking alternation is bounded to 1 <= n <= {max_n}, got n = {n}"
        )));
    }
    require(cfg, n + 3, n, "the intersection/linking alternation")?;
    if let (false, witness) = is_general_position(cfg) {
        return Ok(ParityReport::degenerate(
            theorem,
            summary(cfg),
            Claim::Odd,
            format!("points are not in general position: {witness:?}"),
            Vec::new(),
        ));
    }
    if n % 2 == 0 {
        // Interior intersections of (n/2)-simplices (n/2 + 1 vertices).
        let family = all_simplices(n + 3, n / 2 + 1);
        match interior_crossing_pairs(cfg, &family, true) {
            Ok(pairs) => {
                let witnesses = pairs
                    .iter()
                    .map(|&(i, j)| pair_witness(&family[i], &family[j]))
                    .collect::<Vec<_>>();
                Ok(ParityReport::parity(
                    theorem,
                    summary(cfg),
                    pairs.len(),
                    Claim::Odd,
                    witnesses,
                )
                .with_note(format!("even n = {n}: interior intersection count")))
            }
            Err(e) => Ok(ParityReport::degenerate(
                theorem,
                summary(cfg),
                Claim::Odd,
                e.to_string(),
                Vec::new(),
            )),
        }
    } else {
        // Linked pairs of ((n+1)/2)-simplices ((n+3)/2 vertices each);
        // two disjoint ones use up all n + 3 points.
        let half = (n + 3) / 2;
        let mut witnesses = Vec::new();
        for first in (1..n + 3).combinations(half - 1) {
            let mut idx1 = vec![0];
            idx1.extend(first.iter().copied());
            let idx2: Vec<usize> = (1..n + 3).filter(|i| !first.contains(i)).collect();
            let s1 = SimplexRef::new(idx1).expect("valid indices");
            let s2 = SimplexRef::new(idx2).expect("valid indices");
            match simplices_linked(cfg, &s1, &s2) {
                Ok(v) if v.linked => witnesses.push(pair_witness(&s1, &s2)),
                Ok(_) => {}
                Err(e) => {
                    return Ok(ParityReport::degenerate(
                        theorem,
                        summary(cfg),
                        Claim::Odd,
                        e.to_string(),
                        Vec::new(),
                    ));
                }
            }
        }
        let count = witnesses.len();
        Ok(ParityReport::parity(
            theorem,
            summary(cfg),
            count,
            Claim::Odd,
            witnesses,
        )
        .with_note(format!("odd n = {n}: linked pair count")))
    }
}

/// Whether two closed triangles intersect, decided by complementary-
/// dimension transversality first (cheap) with an LP fallback for the
/// singular cases; in non-complementary ambient dimensions it goes
/// straight to the LP.
fn closed_triangles_intersect<S: ExactScalar>(
    cfg: &Configuration<S>,
    t1: &SimplexRef,
    t2: &SimplexRef,
) -> bool {
    if cfg.dimension() == 4 {
        match transversality(cfg, t1, t2) {
            Ok(Transversality::Interior { .. }) | Ok(Transversality::Touch) => return true,
            Ok(Transversality::Miss) => return false,
            Ok(Transversality::Singular) | Err(_) => {}
        }
    }
    matches!(
        classify_pair(cfg, t1, t2).expect("triangle pairs are classifiable"),
        PairClass::Improper(_)
    )
}

/// A product grid has two triangles with disjoint vertex sets that
/// intersect. The witness claim is a theorem for shapes 3 × 5 in R³,
/// 4 × 4 in R³ and 5 × 5 in R⁴; for other shapes the report carries the
/// search outcome, with absence certified by the exhaustive pair check.
pub fn verify_product<S: ExactScalar>(
    grid: &ProductGrid<S>,
) -> Result<ParityReport, VerifierError> {
    let theorem = "product";
    let cfg = grid.config();
    let (m, n) = grid.shape();
    let d = cfg.dimension();
    let input = format!("{m}x{n} grid in R^{d} ({})", S::FIELD_NAME);
    let shape = (m.min(n), m.max(n));
    let guaranteed = matches!((shape, d), ((3, 5), 3) | ((4, 4), 3) | ((5, 5), 4));

    let family = grid.triangles();
    let mut witnesses = Vec::new();
    for (i, j) in (0..family.len()).tuple_combinations() {
        if !family[i].vertex_disjoint(&family[j]) {
            continue;
        }
        if closed_triangles_intersect(cfg, &family[i], &family[j]) {
            witnesses.push(pair_witness(&family[i], &family[j]));
        }
    }
    let count = witnesses.len();
    if guaranteed {
        Ok(ParityReport::parity(
            theorem,
            input,
            count,
            Claim::WitnessExists,
            witnesses,
        ))
    } else {
        let note = if count == 0 {
            "shape outside the guaranteed list; absence of intersecting vertex-disjoint pairs \
             certified by the exhaustive check"
        } else {
            "shape outside the guaranteed list; intersecting pairs found by search"
        };
        let mut report =
            ParityReport::parity(theorem, input, count, Claim::WitnessExists, witnesses);
        report.verdict = Verdict::Confirmed;
        Ok(report.with_note(note))
    }
}

/// Six points 0–5 in 3-space with the deleted-face family embedded: for
/// deleted faces {0,1,k} (k in `deleted`, one of [2], [2,3] or [2,3,4],
/// with segments {1,k} replacing them), at least one of the pairs
/// (012, 345), (013, 245), (014, 235) — one per deleted k — is linked.
pub fn verify_deleted_face_linking<S: ExactScalar>(
    cfg: &Configuration<S>,
    deleted: &[usize],
) -> Result<ParityReport, VerifierError> {
    require(cfg, 6, 3, "the deleted-face linking problem")?;
    let theorem = "deleted-face";
    let mut ks = deleted.to_vec();
    ks.sort_unstable();
    ks.dedup();
    if !matches!(ks.as_slice(), [2] | [2, 3] | [2, 3, 4]) {
        return Err(invalid(format!(
            "deleted faces must be [2], [2, 3] or [2, 3, 4], got {deleted:?}"
        )));
    }
    let input = format!(
        "6 points in R^3 ({}), deleted faces {ks:?}",
        S::FIELD_NAME
    );

    let family = deleted_face_family(&ks);
    for simplex in &family {
        if simplex.dim() == 2 && !affinely_independent(cfg, simplex.indices()) {
            return Ok(ParityReport::degenerate(
                theorem,
                input,
                Claim::WitnessExists,
                format!("face {:?} is degenerate (collinear)", simplex.indices()),
                Vec::new(),
            ));
        }
    }
    match is_embedded(cfg, &family) {
        Ok((true, None)) => {}
        Ok((_, improper)) => {
            let witnesses = improper
                .map(|(i, j)| pair_witness(&family[i], &family[j]))
                .into_iter()
                .collect::<Vec<_>>();
            return Ok(ParityReport::degenerate(
                theorem,
                input,
                Claim::WitnessExists,
                "the deleted-face family is not embedded".into(),
                witnesses,
            ));
        }
        Err(e) => {
            return Ok(ParityReport::degenerate(
                theorem,
                input,
                Claim::WitnessExists,
                e.to_string(),
                Vec::new(),
            ));
        }
    }

    let mut witnesses = Vec::new();
    for &k in &ks {
        let t1 = SimplexRef::triangle(0, 1, k);
        let rest: Vec<usize> = (2..6).filter(|&i| i != k).collect();
        let t2 = SimplexRef::new(rest).expect("three remaining indices");
        match triangles_linked(cfg, &t1, &t2) {
            Ok(v) if v.linked => witnesses.push(pair_witness(&t1, &t2)),
            Ok(_) => {}
            Err(e) => {
                return Ok(ParityReport::degenerate(
                    theorem,
                    input,
                    Claim::WitnessExists,
                    e.to_string(),
                    Vec::new(),
                ));
            }
        }
    }
    let count = witnesses.len();
    Ok(ParityReport::parity(
        theorem,
        input,
        count,
        Claim::WitnessExists,
        witnesses,
    )
    .with_note("the claim is a disjunction: at least one listed pair must be linked"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        cylinder_grid, deleted_face_instance, hexagon_helix6, moment_curve_default,
        rational_helix, torus_k3n, DEFAULT_SHRINK_BUDGET,
    };
    use crate::kernel::random_configuration;
    use crate::linking::{extreme_apex_index, project_from_extreme};
    use crate::scalar::{rat, rat_int, Rat};

    fn cfg_i64(d: usize, pts: &[&[i64]]) -> Configuration<Rat> {
        Configuration::from_coords(
            d,
            pts.iter()
                .map(|p| p.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn plane_count_is_five_on_convex_position_and_degrades_with_witness() {
        // Convex position: every 4-subset contributes exactly one crossing
        // pair, so the count is C(5, 4) = 5.
        let convex = cfg_i64(2, &[&[0, 0], &[4, 0], &[6, 3], &[2, 6], &[-2, 3]]);
        let report = verify_plane_intersection(&convex).unwrap();
        assert_eq!(report.theorem, "plane");
        assert_eq!(report.count, 5);
        assert_eq!(report.claim, Claim::Odd);
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert_eq!(report.witnesses.len(), 5);

        // Triangle + interior point + far point: still odd.
        let mixed = cfg_i64(2, &[&[0, 0], &[8, 0], &[4, 8], &[4, 3], &[100, 50]]);
        let report = verify_plane_intersection(&mixed).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert_eq!(report.count % 2, 1);

        // Three collinear points: degenerate, with a closed intersecting
        // segment pair as the first-sentence witness.
        let collinear = cfg_i64(2, &[&[0, 0], &[2, 0], &[4, 0], &[1, 5], &[3, 5]]);
        let report = verify_plane_intersection(&collinear).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert_eq!(report.claim, Claim::WitnessExists);
        assert!(!report.witnesses.is_empty());
        assert!(report.degeneracy.is_some());

        assert!(verify_plane_intersection(&cfg_i64(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]))
            .is_err());
    }

    #[test]
    fn k33_count_is_nine_between_two_horizontal_triples() {
        // Both triples are internally collinear — harmless, since only
        // bipartite segments enter the count.
        let cfg = cfg_i64(2, &[&[0, 0], &[2, 0], &[4, 0], &[1, 1], &[3, 1], &[5, 1]]);
        let report = verify_k33_plane(&cfg).unwrap();
        assert_eq!(report.count, 9);
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert_eq!(report.witnesses.len(), 9);

        // Mixed collinearity (a red between a red and a blue) degrades.
        let degenerate = cfg_i64(2, &[&[0, 0], &[2, 2], &[5, 0], &[4, 4], &[0, 5], &[9, 1]]);
        let report = verify_k33_plane(&degenerate).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert!(!report.witnesses.is_empty());

        // Random general-position trials all confirm.
        for seed in 0..40u64 {
            let cfg = random_configuration(2, 6, 12, seed).unwrap();
            let report = verify_k33_plane(&cfg).unwrap();
            if report.verdict != Verdict::Degenerate {
                assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
            }
        }
    }

    #[test]
    fn red_blue_quad_finds_the_hand_checked_broken_line() {
        // Reds 0–3 left to right, blues above and below: the polyline
        // R2–B1–R4–B2 is crossed once by the segment R1R3 (at (-2/3, 1)).
        let cfg = cfg_i64(
            2,
            &[&[-4, 1], &[-1, 0], &[1, 1], &[4, 0], &[0, 3], &[0, -3]],
        );
        let report = verify_red_blue_quad(&cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert!(report.witnesses.contains(&vec![1, 4, 3, 5, 0, 2]));

        // Crossing bichromatic segments violate the precondition.
        let crossing = cfg_i64(2, &[&[0, 0], &[4, 0], &[4, 4], &[0, 4], &[1, 2], &[3, 2]]);
        let report = verify_red_blue_quad(&crossing).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert!(!report.witnesses.is_empty());

        // Random valid inputs always produce a witness. The bichromatic
        // precondition is restrictive, so most draws are filtered out.
        let mut valid = 0;
        for seed in 0..200u64 {
            let cfg = random_configuration(2, 6, 10, seed).unwrap();
            let report = verify_red_blue_quad(&cfg).unwrap();
            if report.verdict != Verdict::Degenerate {
                assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
                valid += 1;
            }
        }
        assert!(valid >= 5, "only {valid} valid draws");
    }

    #[test]
    fn unlinking_plane_count_is_zero_on_convex_position() {
        // Pentagon: sides cross the complementary triangle 0 times,
        // diagonals 2 times — never exactly once.
        let convex = cfg_i64(2, &[&[0, 0], &[4, 0], &[6, 3], &[2, 6], &[-2, 3]]);
        let report = verify_unlinking_plane(&convex).unwrap();
        assert_eq!(report.count, 0);
        assert_eq!(report.claim, Claim::Even);
        assert_eq!(report.verdict, Verdict::Confirmed);

        let mixed = cfg_i64(2, &[&[0, 0], &[8, 0], &[4, 8], &[4, 3], &[100, 50]]);
        let report = verify_unlinking_plane(&mixed).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);

        let collinear = cfg_i64(2, &[&[0, 0], &[2, 0], &[4, 0], &[1, 5], &[3, 5]]);
        let report = verify_unlinking_plane(&collinear).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);

        for seed in 100..140u64 {
            let cfg = random_configuration(2, 5, 12, seed).unwrap();
            let report = verify_unlinking_plane(&cfg).unwrap();
            if report.verdict != Verdict::Degenerate {
                assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
            }
        }
    }

    #[test]
    fn cgs_pins_the_moment_curve_and_hexagon_helix_counts() {
        let helix = hexagon_helix6();
        let report = verify_cgs(&helix).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert!(report.witnesses.contains(&vec![0, 2, 4, 1, 3, 5]));

        // Moment curve: exactly one linked pair, the alternating one.
        let moment = moment_curve_default(6, 3).unwrap();
        let report = verify_cgs(&moment).unwrap();
        assert_eq!(report.count, 1);
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert_eq!(report.witnesses, vec![vec![0, 2, 4, 1, 3, 5]]);

        // Four coplanar points: degenerate with a perturbation hint.
        let flat = cfg_i64(
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[1, 1, 0],
                &[0, 0, 5],
                &[3, 1, 7],
            ],
        );
        let report = verify_cgs(&flat).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert!(report.degeneracy.as_deref().unwrap().contains("perturb"));

        for seed in 0..30u64 {
            let cfg = random_configuration(3, 6, 12, seed).unwrap();
            let report = verify_cgs(&cfg).unwrap();
            if report.verdict != Verdict::Degenerate {
                assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
            }
        }
    }

    #[test]
    fn intersection_r3_always_finds_a_segment_through_a_triangle() {
        let helix = hexagon_helix6();
        let report = verify_intersection_r3(&helix).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert!(!report.witnesses.is_empty());

        for seed in 0..25u64 {
            let cfg = random_configuration(3, 6, 10, seed).unwrap();
            let report = verify_intersection_r3(&cfg).unwrap();
            assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
        }

        assert!(verify_intersection_r3(&moment_curve_default(5, 3).unwrap()).is_err());
    }

    #[test]
    fn unlinking_r3_certifies_the_helix_and_moment_tables() {
        // The rational helix is built to make every split count even; the
        // exactly-once count is therefore 0.
        let helix = rational_helix(6).unwrap();
        let report = verify_unlinking_r3(&helix).unwrap();
        assert_eq!(report.count, 0);
        assert_eq!(report.verdict, Verdict::Confirmed);

        // Moment curve: three splits cross twice, none exactly once.
        let moment = moment_curve_default(6, 3).unwrap();
        let report = verify_unlinking_r3(&moment).unwrap();
        assert_eq!(report.count, 0);
        assert_eq!(report.verdict, Verdict::Confirmed);

        let hexagon = hexagon_helix6();
        let report = verify_unlinking_r3(&hexagon).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);

        for seed in 40..60u64 {
            let cfg = random_configuration(3, 6, 10, seed).unwrap();
            let report = verify_unlinking_r3(&cfg).unwrap();
            if report.verdict != Verdict::Degenerate {
                assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
            }
        }
    }

    #[test]
    fn sachs_rejects_the_cube_and_confirms_valid_random_inputs() {
        // The exact cube's four main diagonals are bichromatic and share
        // the center — the precondition fails.
        let cube = cfg_i64(
            3,
            &[
                &[0, 0, 0],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 1],
            ],
        );
        let report = verify_sachs(&cube).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert!(!report.witnesses.is_empty());

        let mut valid = 0;
        for seed in 0..40u64 {
            let cfg = random_configuration(3, 8, 10, seed).unwrap();
            let report = verify_sachs(&cfg).unwrap();
            if report.verdict != Verdict::Degenerate {
                assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
                // A witness is a pair of disjoint alternating loops.
                let w = &report.witnesses[0];
                assert_eq!(w.len(), 8);
                valid += 1;
            }
        }
        assert!(valid >= 10, "only {valid} valid draws");
    }

    #[test]
    fn vkf_count_is_seven_on_the_moment_curve() {
        let moment = moment_curve_default(7, 4).unwrap();
        let report = verify_vkf(&moment).unwrap();
        assert_eq!(report.count, 7);
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert_eq!(report.witnesses.len(), 7);

        for seed in 0..10u64 {
            let cfg = random_configuration(4, 7, 10, seed).unwrap();
            let report = verify_vkf(&cfg).unwrap();
            if report.verdict != Verdict::Degenerate {
                assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
            }
        }

        // An affinely dependent quadruple degrades with the closed-triangle
        // fallback witness.
        let flat = cfg_i64(
            4,
            &[
                &[0, 0, 0, 0],
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[1, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[2, 3, 5, 7],
            ],
        );
        let report = verify_vkf(&flat).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert_eq!(report.claim, Claim::WitnessExists);
    }

    #[test]
    fn unlinking_r4_total_is_fourteen_on_the_moment_curve() {
        let moment = moment_curve_default(7, 4).unwrap();
        let report = verify_unlinking_r4(&moment).unwrap();
        assert_eq!(report.count, 14);
        assert_eq!(report.claim, Claim::Even);
        assert_eq!(report.verdict, Verdict::Confirmed);
        // Parity comes from pair cancellation: no triangle has an odd count.
        assert!(report.witnesses.is_empty());

        for seed in 10..18u64 {
            let cfg = random_configuration(4, 7, 10, seed).unwrap();
            let report = verify_unlinking_r4(&cfg).unwrap();
            if report.verdict != Verdict::Degenerate {
                assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
            }
        }
    }

    #[test]
    fn join3_finds_transversal_intersecting_triangles() {
        let moment = moment_curve_default(9, 4).unwrap();
        let report = verify_join3(&moment).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        for w in &report.witnesses {
            assert!(w[0] < 3 && (3..6).contains(&w[1]) && (6..9).contains(&w[2]));
            assert!(w[3] < 3 && (3..6).contains(&w[4]) && (6..9).contains(&w[5]));
        }

        for seed in 0..15u64 {
            let cfg = random_configuration(4, 9, 8, seed).unwrap();
            let report = verify_join3(&cfg).unwrap();
            assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
        }

        assert!(verify_join3(&moment_curve_default(8, 4).unwrap()).is_err());
    }

    #[test]
    fn intersection_linking_matches_the_pinned_moment_counts() {
        // n = 1..6 moment curves: counts 1, 5, 1, 7, 1, 9.
        let expected = [1usize, 5, 1, 7, 1, 9];
        for (n, want) in (1..=6usize).zip(expected) {
            let cfg = moment_curve_default(n + 3, n).unwrap();
            let report = verify_intersection_linking(&cfg, 8).unwrap();
            assert_eq!(report.count, want, "moment count at n = {n}");
            assert_eq!(report.verdict, Verdict::Confirmed, "n = {n}");
        }

        // Pairwise agreement with the specialized verifiers on shared inputs.
        let plane = moment_curve_default(5, 2).unwrap();
        assert_eq!(
            verify_intersection_linking(&plane, 8).unwrap().count,
            verify_plane_intersection(&plane).unwrap().count
        );
        let space = moment_curve_default(6, 3).unwrap();
        assert_eq!(
            verify_intersection_linking(&space, 8).unwrap().count,
            verify_cgs(&space).unwrap().count
        );
        let four = moment_curve_default(7, 4).unwrap();
        assert_eq!(
            verify_intersection_linking(&four, 8).unwrap().count,
            verify_vkf(&four).unwrap().count
        );

        // The cap and the arity are hard errors.
        let big = moment_curve_default(9, 6).unwrap();
        assert!(verify_intersection_linking(&big, 5).is_err());
        assert!(verify_intersection_linking(&moment_curve_default(6, 2).unwrap(), 8).is_err());
    }

    #[test]
    fn cgs_confirms_projections_of_r4_configurations() {
        // The projection consistency chain: a 7-point configuration in R^4
        // with a unique extreme point projects to 6 points in R^3 whose
        // linking count confirms whenever the original does.
        let mut checked = 0;
        for seed in 200..230u64 {
            let cfg = random_configuration(4, 7, 8, seed).unwrap();
            if verify_vkf(&cfg).unwrap().verdict != Verdict::Confirmed {
                continue;
            }
            let Some(apex) = extreme_apex_index(&cfg) else {
                continue;
            };
            let Ok(projected) = project_from_extreme(&cfg, apex) else {
                continue;
            };
            let report = verify_cgs(&projected).unwrap();
            if report.verdict == Verdict::Degenerate {
                continue;
            }
            assert_eq!(report.verdict, Verdict::Confirmed, "seed {seed}");
            checked += 1;
        }
        assert!(checked >= 5, "only {checked} projections checked");
    }

    #[test]
    fn product_certifies_cylinder_absence_and_guaranteed_shapes() {
        // The cylinder grid is constructed embedded: certified absence.
        let cylinder = cylinder_grid(4, DEFAULT_SHRINK_BUDGET).unwrap();
        let report = verify_product(&cylinder).unwrap();
        assert_eq!(report.count, 0);
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert!(report.note.as_deref().unwrap().contains("certified"));

        // The torus realization is likewise intersection-free.
        let torus = torus_k3n(3).unwrap();
        let report = verify_product(&torus).unwrap();
        assert_eq!(report.count, 0);
        assert_eq!(report.verdict, Verdict::Confirmed);

        // Guaranteed shapes on random grids must find a witness.
        for (m, n, d, seed) in [(3usize, 5usize, 3usize, 7u64), (4, 4, 3, 8)] {
            let cfg = random_configuration(d, m * n, 10, seed).unwrap();
            let grid = crate::constructions::ProductGrid::new(m, n, cfg).unwrap();
            let report = verify_product(&grid).unwrap();
            assert_eq!(report.verdict, Verdict::Confirmed, "{m}x{n} seed {seed}");
            assert!(report.count > 0, "{m}x{n} must have a witness");
            assert_eq!(report.witnesses.len(), report.count);
        }

        // A 3x3 grid in the plane is not a guaranteed shape, but random
        // points make the search find plenty of intersecting pairs; the
        // verdict stays Confirmed with an explanatory note.
        let cfg = random_configuration(2, 9, 10, 13).unwrap();
        let plane_grid = crate::constructions::ProductGrid::new(3, 3, cfg).unwrap();
        let report = verify_product(&plane_grid).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert!(report.count > 0);
        assert!(report.note.as_deref().unwrap().contains("search"));
    }

    #[test]
    fn product_confirms_the_r4_guaranteed_shape() {
        let cfg = random_configuration(4, 25, 8, 11).unwrap();
        let grid = crate::constructions::ProductGrid::new(5, 5, cfg).unwrap();
        let report = verify_product(&grid).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert!(report.count > 0, "5x5 in R^4 must have a witness");
    }

    #[test]
    fn deleted_face_confirms_the_instance_and_degrades_otherwise() {
        let cfg = deleted_face_instance();
        let report = verify_deleted_face_linking(&cfg, &[2]).unwrap();
        assert_eq!(report.verdict, Verdict::Confirmed);
        assert_eq!(report.witnesses, vec![vec![0, 1, 2, 3, 4, 5]]);

        // Larger deletions keep the disjunction satisfiable on the same
        // instance only if the family stays embedded; report either way.
        let report = verify_deleted_face_linking(&cfg, &[2, 3]).unwrap();
        assert_ne!(report.verdict, Verdict::Violated);

        // A collinear kept face (here 0-1-3) is degenerate before any
        // embedding check.
        let collinear = cfg_i64(
            3,
            &[
                &[0, 0, 0],
                &[1, 1, 1],
                &[5, 0, 1],
                &[2, 2, 2],
                &[0, 5, 1],
                &[1, 2, 8],
            ],
        );
        let report = verify_deleted_face_linking(&collinear, &[2]).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert!(report.degeneracy.as_deref().unwrap().contains("collinear"));

        // A non-embedded family (P3 placed so the segment P1P2 pierces an
        // apex edge) is degenerate with the improper pair as witness.
        let pierced = Configuration::from_coords(
            3,
            vec![
                vec![rat_int(0), rat_int(0), rat_int(0)],
                vec![rat_int(0), rat_int(4), rat_int(4)],
                vec![rat_int(5), rat_int(25), rat_int(5)],
                vec![rat_int(5), rat_int(29), rat_int(9)],
                vec![rat(-9, 4), rat_int(0), rat(9, 8)],
                vec![rat(5, 2), rat_int(0), rat(5, 4)],
            ],
        )
        .unwrap();
        let report = verify_deleted_face_linking(&pierced, &[2]).unwrap();
        assert_eq!(report.verdict, Verdict::Degenerate);
        assert!(!report.witnesses.is_empty());

        assert!(verify_deleted_face_linking(&cfg, &[3]).is_err());
        assert!(verify_deleted_face_linking(&cfg, &[1, 2]).is_err());
    }

    #[test]
    fn reports_serialize_with_snake_case_fields() {
        let convex = cfg_i64(2, &[&[0, 0], &[4, 0], &[6, 3], &[2, 6], &[-2, 3]]);
        let report = verify_plane_intersection(&convex).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["theorem"], "plane");
        assert_eq!(json["claim"], "odd");
        assert_eq!(json["verdict"], "confirmed");
        assert_eq!(json["count"], 5);
        assert!(json["witnesses"].as_array().unwrap().len() == 5);
    }
}
