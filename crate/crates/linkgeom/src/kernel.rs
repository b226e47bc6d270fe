//! Points, labeled configurations, orientation predicates, general-position
//! tests, and seeded perturbation.
//!
//! A [`Configuration`] is the universe every other module indexes into:
//! simplices, broken lines, and 2-cycles all refer to points by position in
//! a configuration. Validation happens once, at construction, so downstream
//! code can assume dimensions agree, labels are unique, and points are
//! pairwise distinct.

use crate::linalg;
use crate::rng::SplitMix64;
use crate::scalar::{ExactScalar, Rat};
use itertools::Itertools;
use thiserror::Error;

/// Retry budget for [`perturb`]: offsets shrink as 2^(−k) for
/// k = 2, 3, …, 2 + PERTURB_BUDGET − 1 before giving up.
pub const PERTURB_BUDGET: u32 = 40;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("expected {expected} points of dimension {dimension}, got {got}")]
    ArityMismatch {
        expected: usize,
        got: usize,
        dimension: usize,
    },
    #[error("point {index} has dimension {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("perturbation budget exhausted after {0} attempts")]
    PerturbExhausted(u32),
}

/// A labeled point in ℝᵈ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point<S> {
    pub label: String,
    pub coords: Vec<S>,
}

impl<S> Point<S> {
    pub fn new(label: impl Into<String>, coords: Vec<S>) -> Self {
        Point {
            label: label.into(),
            coords,
        }
    }
}

/// A validated list of labeled points sharing one ambient dimension.
///
/// Invariants (enforced by [`Configuration::new`]): dimension ≥ 1, every
/// point has that dimension, labels are unique and nonempty, and points are
/// pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration<S> {
    dimension: usize,
    points: Vec<Point<S>>,
}

impl<S: ExactScalar> Configuration<S> {
    pub fn new(dimension: usize, points: Vec<Point<S>>) -> Result<Self, KernelError> {
        if dimension == 0 {
            return Err(KernelError::InvalidConfiguration(
                "dimension must be at least 1".into(),
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if p.coords.len() != dimension {
                return Err(KernelError::DimensionMismatch {
                    index: i,
                    expected: dimension,
                    got: p.coords.len(),
                });
            }
            if p.label.is_empty() {
                return Err(KernelError::InvalidConfiguration(format!(
                    "point {i} has an empty label"
                )));
            }
        }
        for (i, j) in (0..points.len()).tuple_combinations() {
            if points[i].label == points[j].label {
                return Err(KernelError::InvalidConfiguration(format!(
                    "duplicate label {:?} at indices {i} and {j}",
                    points[i].label
                )));
            }
            if points[i].coords == points[j].coords {
                return Err(KernelError::InvalidConfiguration(format!(
                    "points {:?} and {:?} coincide",
                    points[i].label, points[j].label
                )));
            }
        }
        Ok(Configuration { dimension, points })
    }

    /// Builds a configuration with automatic labels `P1..Pn`.
    pub fn from_coords(dimension: usize, coords: Vec<Vec<S>>) -> Result<Self, KernelError> {
        let points = coords
            .into_iter()
            .enumerate()
            .map(|(i, c)| Point::new(format!("P{}", i + 1), c))
            .collect();
        Configuration::new(dimension, points)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point<S> {
        &self.points[i]
    }

    pub fn coords(&self, i: usize) -> &[S] {
        &self.points[i].coords
    }

    pub fn label(&self, i: usize) -> &str {
        &self.points[i].label
    }

    /// Maps every coordinate into another exact field (e.g. ℚ into ℚ(√3)).
    pub fn map_scalars<T: ExactScalar>(
        &self,
        f: impl Fn(&S) -> T,
    ) -> Result<Configuration<T>, KernelError> {
        let points = self
            .points
            .iter()
            .map(|p| Point::new(p.label.clone(), p.coords.iter().map(&f).collect()))
            .collect();
        Configuration::new(self.dimension, points)
    }
}

/// Orientation of d+1 points in ℝᵈ: the sign of the determinant of the d×d
/// matrix of edge vectors from the first point. Zero iff the points are
/// affinely dependent. Positive for the frame (origin, e₁, …, e_d).
pub fn orientation<S: ExactScalar>(pts: &[&[S]]) -> Result<i8, KernelError> {
    let d = pts.first().map_or(0, |p| p.len());
    if pts.len() != d + 1 {
        return Err(KernelError::ArityMismatch {
            expected: d + 1,
            got: pts.len(),
            dimension: d,
        });
    }
    for (i, p) in pts.iter().enumerate() {
        if p.len() != d {
            return Err(KernelError::DimensionMismatch {
                index: i,
                expected: d,
                got: p.len(),
            });
        }
    }
    let m: Vec<Vec<S>> = pts[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(pts[0])
                .map(|(a, b)| a.clone() - b.clone())
                .collect()
        })
        .collect();
    Ok(linalg::det(&m).sign())
}

/// Whether the points indexed by `subset` are affinely independent, i.e.
/// the edge vectors from the first point have full rank.
pub fn affinely_independent<S: ExactScalar>(cfg: &Configuration<S>, subset: &[usize]) -> bool {
    let base = cfg.coords(subset[0]);
    let m: Vec<Vec<S>> = subset[1..]
        .iter()
        .map(|&i| {
            cfg.coords(i)
                .iter()
                .zip(base)
                .map(|(a, b)| a.clone() - b.clone())
                .collect()
        })
        .collect();
    linalg::rank(&m) == subset.len() - 1
}

/// Tests whether every subset of at most d+1 points is affinely independent.
/// On failure returns one offending subset, smallest size first, so the
/// witness is minimal (three collinear points rather than a larger
/// dependent set that contains them).
pub fn is_general_position<S: ExactScalar>(
    cfg: &Configuration<S>,
) -> (bool, Option<Vec<usize>>) {
    let n = cfg.len();
    let top = (cfg.dimension() + 1).min(n);
    // Dependence propagates upward (a dependent subset makes every superset
    // dependent), so scanning sizes small to large finds a minimal witness
    // and scanning only size `top` would find the same configurations bad.
    for k in 3..=top {
        for subset in (0..n).combinations(k) {
            if !affinely_independent(cfg, &subset) {
                return (false, Some(subset));
            }
        }
    }
    (true, None)
}

/// Shifts every coordinate by an independent rational offset of magnitude
/// less than ε = 2^(−k), retrying with k = 2, 3, … until the perturbed
/// configuration is valid and satisfies `predicate`. Deterministic given the
/// seed. Offsets are drawn from {−(2^k − 1), …, 2^k − 1} / 2^(2k).
pub fn perturb(
    cfg: &Configuration<Rat>,
    seed: u64,
    predicate: impl Fn(&Configuration<Rat>) -> bool,
) -> Result<Configuration<Rat>, KernelError> {
    let mut rng = SplitMix64::new(seed);
    for k in 2..2 + PERTURB_BUDGET {
        let bound = (1i64 << k) - 1;
        let denom = Rat::from_integer(num_bigint::BigInt::from(1u8) << (2 * k));
        let points: Vec<Point<Rat>> = cfg
            .points()
            .iter()
            .map(|p| {
                let coords = p
                    .coords
                    .iter()
                    .map(|c| {
                        let num = rng.int_in(-bound, bound);
                        c.clone() + Rat::from_integer(num.into()) / denom.clone()
                    })
                    .collect();
                Point::new(p.label.clone(), coords)
            })
            .collect();
        if let Ok(candidate) = Configuration::new(cfg.dimension(), points) {
            if predicate(&candidate) {
                return Ok(candidate);
            }
        }
    }
    Err(KernelError::PerturbExhausted(PERTURB_BUDGET))
}

/// A reproducible random configuration: n points in ℝᵈ with coordinates of
/// the form m / 2^bits, |m| < 2^bits, labels `P1..Pn`. Colliding points are
/// redrawn so the result is always a valid configuration.
pub fn random_configuration(
    dimension: usize,
    n: usize,
    bits: u32,
    seed: u64,
) -> Result<Configuration<Rat>, KernelError> {
    if dimension == 0 {
        return Err(KernelError::InvalidConfiguration(
            "dimension must be at least 1".into(),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let mut coords: Vec<Vec<Rat>> = Vec::with_capacity(n);
    while coords.len() < n {
        let c: Vec<Rat> = (0..dimension).map(|_| rng.rat_with_bits(bits)).collect();
        if !coords.contains(&c) {
            coords.push(c);
        }
    }
    Configuration::from_coords(dimension, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn cfg2(coords: &[(i64, i64)]) -> Configuration<Rat> {
        Configuration::from_coords(
            2,
            coords
                .iter()
                .map(|&(x, y)| vec![rat_int(x), rat_int(y)])
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn configuration_validation_rejects_bad_input() {
        let p = |x: i64, y: i64| vec![rat_int(x), rat_int(y)];
        assert!(Configuration::<Rat>::from_coords(0, vec![]).is_err());
        assert!(Configuration::from_coords(2, vec![p(1, 2), vec![rat_int(1)]]).is_err());
        assert!(Configuration::from_coords(2, vec![p(1, 2), p(1, 2)]).is_err());
        let dup = vec![Point::new("A", p(0, 0)), Point::new("A", p(1, 1))];
        assert!(Configuration::new(2, dup).is_err());
        let empty_label = vec![Point::new("", p(0, 0))];
        assert!(Configuration::new(2, empty_label).is_err());
    }

    #[test]
    fn orientation_reference_cases() {
        // Identity frame in R^3.
        let o = vec![rat_int(0); 3];
        let e1 = vec![rat_int(1), rat_int(0), rat_int(0)];
        let e2 = vec![rat_int(0), rat_int(1), rat_int(0)];
        let e3 = vec![rat_int(0), rat_int(0), rat_int(1)];
        assert_eq!(orientation(&[&o, &e1, &e2, &e3]).unwrap(), 1);
        // Collinear points in the plane.
        let a = vec![rat_int(0), rat_int(0)];
        let b = vec![rat_int(1), rat_int(1)];
        let c = vec![rat_int(2), rat_int(2)];
        assert_eq!(orientation(&[&a, &b, &c]).unwrap(), 0);
        // Four consecutive moment-curve points (t, t², t³), t = 1..4.
        let pts: Vec<Vec<Rat>> = (1..=4i64)
            .map(|t| vec![rat_int(t), rat_int(t * t), rat_int(t * t * t)])
            .collect();
        let refs: Vec<&[Rat]> = pts.iter().map(|p| p.as_slice()).collect();
        assert_eq!(orientation(&refs).unwrap(), 1);
        // Arity errors.
        assert!(orientation(&[a.as_slice(), b.as_slice()]).is_err());
    }

    #[test]
    fn orientation_is_antisymmetric_on_random_inputs() {
        let mut rng = SplitMix64::new(99);
        for d in 2..=5usize {
            for _ in 0..20 {
                let pts: Vec<Vec<Rat>> = (0..=d)
                    .map(|_| (0..d).map(|_| rng.rat_with_bits(6)).collect())
                    .collect();
                let mut refs: Vec<&[Rat]> = pts.iter().map(|p| p.as_slice()).collect();
                let before = orientation(&refs).unwrap();
                refs.swap(0, 1);
                let after = orientation(&refs).unwrap();
                assert_eq!(before, -after);
            }
        }
    }

    #[test]
    fn general_position_finds_minimal_witness() {
        // Unit square plus its center: the center lies on both diagonals.
        let cfg = cfg2(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]);
        let (ok, witness) = is_general_position(&cfg);
        assert!(!ok);
        let w = witness.unwrap();
        assert_eq!(w.len(), 3);
        assert!(!affinely_independent(&cfg, &w));

        let gp = cfg2(&[(0, 0), (1, 0), (0, 1), (3, 5)]);
        assert_eq!(is_general_position(&gp), (true, None));
    }

    #[test]
    fn moment_points_in_r4_are_in_general_position() {
        let pts: Vec<Vec<Rat>> = (1..=7i64)
            .map(|t| (1..=4u32).map(|p| rat_int(t.pow(p))).collect())
            .collect();
        let cfg = Configuration::from_coords(4, pts).unwrap();
        assert_eq!(is_general_position(&cfg), (true, None));
    }

    #[test]
    fn perturb_is_reproducible_and_bounded() {
        let degenerate = cfg2(&[(0, 0), (1, 1), (2, 2), (5, 0), (0, 5)]);
        assert!(!is_general_position(&degenerate).0);
        let fixed = perturb(&degenerate, 7, |c| is_general_position(c).0).unwrap();
        assert!(is_general_position(&fixed).0);
        let again = perturb(&degenerate, 7, |c| is_general_position(c).0).unwrap();
        assert_eq!(fixed, again);
        // Offsets never exceed the loosest ε = 2^(−2).
        for (p, q) in degenerate.points().iter().zip(fixed.points()) {
            for (a, b) in p.coords.iter().zip(&q.coords) {
                let diff = a.clone() - b.clone();
                assert!(diff.clone() * diff < rat(1, 16));
            }
        }
        // A configuration already in general position stays that way.
        let gp = cfg2(&[(0, 0), (1, 0), (0, 1)]);
        let moved = perturb(&gp, 11, |c| is_general_position(c).0).unwrap();
        assert!(is_general_position(&moved).0);
    }

    #[test]
    fn perturb_exhausts_on_unsatisfiable_predicate() {
        let cfg = cfg2(&[(0, 0), (1, 0)]);
        assert_eq!(
            perturb(&cfg, 1, |_| false),
            Err(KernelError::PerturbExhausted(PERTURB_BUDGET))
        );
    }

    #[test]
    fn random_configuration_is_valid_and_reproducible() {
        let a = random_configuration(3, 8, 10, 42).unwrap();
        let b = random_configuration(3, 8, 10, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 8);
        assert_eq!(a.dimension(), 3);
        assert_eq!(a.label(0), "P1");
        assert_eq!(a.label(7), "P8");
        let c = random_configuration(3, 8, 10, 43).unwrap();
        assert_ne!(a, c);
    }
}
