//! Deterministic generators for the named configurations the verifiers
//! consume: moment curves, the hexagon-helix, rational helices,
//! simplex-plus-interior, cones, and product grids (cylinder, torus,
//! four-row). Every generator validates its advertised property before
//! returning, so a successful call doubles as a certificate; searches step
//! through fixed candidate sequences and certify the winner by exhaustive
//! checking, never by a conjectured criterion.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::kernel::{is_general_position, Configuration, KernelError, Point};
use crate::linking::{split_crossing_counts, triangles_linked};
use crate::realizability::{is_embedded, Hypergraph2};
use crate::rng::SplitMix64;
use crate::scalar::{rat, rat_int, ExactScalar, Quad, Rat};
use crate::simplex::SimplexRef;

/// Default number of halvings a translate search tries before giving up.
pub const DEFAULT_SHRINK_BUDGET: u32 = 40;

/// Default number of translate-pair candidates for the four-row grid.
pub const DEFAULT_SEARCH_BUDGET: u32 = 64;

/// Hard cap on halvings so `1 << k` stays within i64.
const MAX_SHRINK: u32 = 60;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("the apex must have a nonzero last coordinate to lie outside the base hyperplane")]
    ApexInHyperplane,
    #[error("a {expected:?} grid needs {} points, got {got}", expected.0 * expected.1)]
    ShapeMismatch { expected: (usize, usize), got: usize },
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

fn bad(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidInput(msg.into())
}

/// `count` points on the moment curve (t, t², …, t^d) at the given strictly
/// increasing parameters, labeled P1…Pn in curve order. Vandermonde
/// determinants put every such configuration in general position, and that
/// invariant is re-checked before returning.
pub fn moment_curve(
    count: usize,
    dimension: usize,
    params: &[Rat],
) -> Result<Configuration<Rat>, ConstructionError> {
    if dimension == 0 {
        return Err(bad("dimension must be at least 1"));
    }
    if params.len() != count {
        return Err(bad(format!(
            "expected {count} parameters, got {}",
            params.len()
        )));
    }
    if !params.windows(2).all(|w| w[0] < w[1]) {
        return Err(bad("parameters must be strictly increasing"));
    }
    let coords = params
        .iter()
        .map(|t| {
            let mut power = Rat::one();
            let mut point = Vec::with_capacity(dimension);
            for _ in 0..dimension {
                power = power * t.clone();
                point.push(power.clone());
            }
            point
        })
        .collect();
    let cfg = Configuration::from_coords(dimension, coords)?;
    let (general, witness) = is_general_position(&cfg);
    assert!(
        general,
        "moment-curve points are always in general position (witness {witness:?})"
    );
    Ok(cfg)
}

/// The integer-parameter moment curve, t = 1…count.
pub fn moment_curve_default(
    count: usize,
    dimension: usize,
) -> Result<Configuration<Rat>, ConstructionError> {
    let params: Vec<Rat> = (1..=count as i64).map(rat_int).collect();
    moment_curve(count, dimension, &params)
}

/// The hexagonal helix: six points at heights 1…6 whose horizontal
/// positions walk a hexagon, labeled A1…A6. The canonical configuration
/// whose alternating triangles A1A3A5 and A2A4A6 are linked; both general
/// position and that linking are re-verified on every call.
pub fn hexagon_helix6() -> Configuration<Rat> {
    const DATA: [[i64; 3]; 6] = [
        [2, 0, 1],
        [1, 2, 2],
        [-1, 2, 3],
        [-2, 0, 4],
        [-1, -2, 5],
        [1, -2, 6],
    ];
    let points = DATA
        .iter()
        .enumerate()
        .map(|(i, c)| {
            Point::new(
                format!("A{}", i + 1),
                c.iter().map(|&x| rat_int(x)).collect(),
            )
        })
        .collect();
    let cfg =
        Configuration::new(3, points).expect("fixed hexagon-helix data is a valid configuration");
    assert!(
        is_general_position(&cfg).0,
        "the hexagon-helix is in general position"
    );
    let verdict = triangles_linked(
        &cfg,
        &SimplexRef::triangle(0, 2, 4),
        &SimplexRef::triangle(1, 3, 5),
    )
    .expect("hexagon-helix alternating triangles are transversal");
    assert!(
        verdict.linked,
        "hexagon-helix alternating triangles are linked"
    );
    cfg
}

/// `n` rational points on the unit-circle helix
/// ((1 − t²)/(1 + t²), 2t/(1 + t²), t) at parameters
/// t_i = (2i − n − 1)/(n + 1 + k), symmetric about 0. The denominator
/// offset k is stepped up until validation passes: general position
/// always, and for n = 6 additionally every segment's crossing count with
/// the complementary tetrahedron surface even — the unlinking property the
/// helix exists to witness.
pub fn rational_helix(n: usize) -> Result<Configuration<Rat>, ConstructionError> {
    if n == 0 {
        return Err(bad("a helix needs at least one point"));
    }
    const DENOMINATOR_OFFSETS: i64 = 64;
    for k in 0..DENOMINATOR_OFFSETS {
        let den = n as i64 + 1 + k;
        let coords: Vec<Vec<Rat>> = (1..=n as i64)
            .map(|i| {
                let t = rat(2 * i - n as i64 - 1, den);
                let t2 = t.clone() * t.clone();
                let w = Rat::one() + t2.clone();
                let x = (Rat::one() - t2) / w.clone();
                let y = (rat_int(2) * t.clone()) / w;
                vec![x, y, t]
            })
            .collect();
        let Ok(cfg) = Configuration::from_coords(3, coords) else {
            continue;
        };
        if !is_general_position(&cfg).0 {
            continue;
        }
        if n == 6 {
            match split_crossing_counts(&cfg, 2) {
                Ok(counts) if counts.iter().all(|(_, c)| c % 2 == 0) => {}
                _ => continue,
            }
        }
        return Ok(cfg);
    }
    Err(ConstructionError::SearchExhausted(format!(
        "no helix denominator offset below {DENOMINATOR_OFFSETS} validated for n = {n}"
    )))
}

/// The d + 2 points of a unit d-simplex (origin plus the standard basis)
/// together with its barycenter — the minimal configuration forcing
/// half-dimensional faces to meet.
pub fn simplex_plus_interior(dimension: usize) -> Result<Configuration<Rat>, ConstructionError> {
    if dimension == 0 {
        return Err(bad("dimension must be at least 1"));
    }
    let mut coords = vec![vec![Rat::zero(); dimension]];
    for i in 0..dimension {
        let mut e = vec![Rat::zero(); dimension];
        e[i] = Rat::one();
        coords.push(e);
    }
    coords.push(vec![rat(1, dimension as i64 + 1); dimension]);
    Ok(Configuration::from_coords(dimension, coords)?)
}

/// Lift `base` into one more dimension (last coordinate 0) and prepend the
/// apex, labeled O, at index 0. The apex needs a nonzero last coordinate so
/// it misses the base hyperplane; base labels are preserved.
pub fn cone<S: ExactScalar>(
    apex: Vec<S>,
    base: &Configuration<S>,
) -> Result<Configuration<S>, ConstructionError> {
    let dimension = base.dimension() + 1;
    if apex.len() != dimension {
        return Err(bad(format!(
            "apex has {} coordinates, the cone lives in dimension {dimension}",
            apex.len()
        )));
    }
    if apex[dimension - 1].sign() == 0 {
        return Err(ConstructionError::ApexInHyperplane);
    }
    let mut points = vec![Point::new("O", apex)];
    for i in 0..base.len() {
        let mut coords = base.coords(i).to_vec();
        coords.push(S::zero());
        points.push(Point::new(base.label(i), coords));
    }
    Ok(Configuration::new(dimension, points)?)
}

/// The triangle triples of the complete-graph product on an m × n grid:
/// for every row pair j < k and column pair p < q, the diagonal A_jp A_kq
/// of the cell completed by each of the two off-diagonal corners. Indices
/// are row-major, (j − 1)·n + (p − 1).
fn product_triples(m: usize, n: usize) -> Vec<[usize; 3]> {
    let idx = |j: usize, p: usize| (j - 1) * n + (p - 1);
    let mut out = Vec::new();
    for j in 1..=m {
        for k in j + 1..=m {
            for p in 1..=n {
                for q in p + 1..=n {
                    out.push([idx(j, p), idx(k, q), idx(j, q)]);
                    out.push([idx(j, p), idx(k, q), idx(k, p)]);
                }
            }
        }
    }
    out
}

/// Grid points labeled A11, A12, … row by row.
fn grid_points<S: ExactScalar>(rows: &[Vec<Vec<S>>]) -> Vec<Point<S>> {
    let mut points = Vec::new();
    for (j, row) in rows.iter().enumerate() {
        for (p, coords) in row.iter().enumerate() {
            points.push(Point::new(format!("A{}{}", j + 1, p + 1), coords.clone()));
        }
    }
    points
}

/// An m × n grid of points A_jp carrying the triangle family of the
/// product of two complete graphs: points are stored row-major and the
/// family lists, for every cell (j < k, p < q), the cell diagonal
/// completed by each off-diagonal corner.
#[derive(Clone, Debug)]
pub struct ProductGrid<S: ExactScalar> {
    m: usize,
    n: usize,
    config: Configuration<S>,
}

impl<S: ExactScalar> ProductGrid<S> {
    /// Wrap a configuration whose points are already in row-major grid
    /// order: point (j − 1)·n + (p − 1) is A_jp.
    pub fn new(m: usize, n: usize, config: Configuration<S>) -> Result<Self, ConstructionError> {
        if m == 0 || n == 0 {
            return Err(bad("grid shape must be positive in both directions"));
        }
        if config.len() != m * n {
            return Err(ConstructionError::ShapeMismatch {
                expected: (m, n),
                got: config.len(),
            });
        }
        Ok(ProductGrid { m, n, config })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn columns(&self) -> usize {
        self.n
    }

    pub fn config(&self) -> &Configuration<S> {
        &self.config
    }

    pub fn into_config(self) -> Configuration<S> {
        self.config
    }

    /// Point index of A_jp (row j, column p, both 1-based).
    ///
    /// # Panics
    /// Panics when the position is outside the grid.
    pub fn index(&self, j: usize, p: usize) -> usize {
        assert!(
            (1..=self.m).contains(&j) && (1..=self.n).contains(&p),
            "grid position ({j},{p}) outside {}×{}",
            self.m,
            self.n
        );
        (j - 1) * self.n + (p - 1)
    }

    /// The product's triangle family in deterministic (j, k, p, q) order,
    /// 2·C(m,2)·C(n,2) triangles.
    pub fn triangles(&self) -> Vec<SimplexRef> {
        product_triples(self.m, self.n)
            .into_iter()
            .map(|t| SimplexRef::new(t.to_vec()).expect("product triples are valid triangles"))
            .collect()
    }
}

/// Build a grid from a row-major coordinate table of m·n rows.
pub fn product_grid<S: ExactScalar>(
    m: usize,
    n: usize,
    table: &[Vec<S>],
) -> Result<ProductGrid<S>, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(bad("grid shape must be positive in both directions"));
    }
    if table.len() != m * n {
        return Err(ConstructionError::ShapeMismatch {
            expected: (m, n),
            got: table.len(),
        });
    }
    let dimension = table[0].len();
    let rows: Vec<Vec<Vec<S>>> = table.chunks(n).map(|row| row.to_vec()).collect();
    let config = Configuration::new(dimension, grid_points(&rows))?;
    ProductGrid::new(m, n, config)
}

/// The 2-hypergraph of the complete-graph product on an m × n grid:
/// m·n vertices in row-major order and the product triangle family as
/// faces, no extra edges.
pub fn product_hypergraph(m: usize, n: usize) -> Result<Hypergraph2, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(bad("grid shape must be positive in both directions"));
    }
    Ok(Hypergraph2::new(m * n, product_triples(m, n), Vec::new())
        .expect("product triples are valid faces"))
}

/// A 2 × n grid in ℝ³ whose triangle family is embedded: row 1 is the
/// default moment curve at t = 1…n and row 2 its translate by
/// (1/3, 1/5, 1/7)/2^k, with the halving exponent k stepped up until the
/// exhaustive pair check passes. Short enough translates always embed, so
/// the search terminates well inside the default budget.
pub fn cylinder_grid(n: usize, shrink_budget: u32) -> Result<ProductGrid<Rat>, ConstructionError> {
    if n < 2 {
        return Err(bad("a cylinder grid needs at least two columns"));
    }
    let base = moment_curve_default(n, 3)?;
    let row1: Vec<Vec<Rat>> = (0..n).map(|i| base.coords(i).to_vec()).collect();
    for k in 0..=shrink_budget.min(MAX_SHRINK) {
        let shift = [rat(1, 3 << k), rat(1, 5 << k), rat(1, 7 << k)];
        let row2: Vec<Vec<Rat>> = row1
            .iter()
            .map(|c| {
                c.iter()
                    .zip(&shift)
                    .map(|(x, s)| x.clone() + s.clone())
                    .collect()
            })
            .collect();
        let config = Configuration::new(3, grid_points(&[row1.clone(), row2]))
            .expect("translated moment rows are distinct labeled points");
        let grid = ProductGrid::new(2, n, config)?;
        if matches!(
            is_embedded(grid.config(), &grid.triangles()),
            Ok((true, None))
        ) {
            return Ok(grid);
        }
    }
    Err(ConstructionError::SearchExhausted(format!(
        "no cylinder translate for n = {n} embedded within {shrink_budget} halvings"
    )))
}

/// A 3 × n grid (n = 2, 3, 4) over ℚ(√3) realizing the product of a
/// 3-cycle with a complete graph on a rotational torus: column seeds are
/// swept by the order-3 rotation about the x-axis, so row j is R^(j−1)
/// applied to the seed row. The triangle family's embeddedness is
/// re-verified on every call.
pub fn torus_k3n(n: usize) -> Result<ProductGrid<Quad>, ConstructionError> {
    if !(2..=4).contains(&n) {
        return Err(bad("the torus grid is built for 2 to 4 columns"));
    }
    const SEEDS: [[i64; 3]; 4] = [[1, 0, 1], [-1, 0, 1], [0, 0, 2], [0, 0, 3]];
    let seed_row: Vec<Vec<Quad>> = SEEDS[..n]
        .iter()
        .map(|s| s.iter().map(|&x| Quad::from_int(x)).collect())
        .collect();
    let mut rows = vec![seed_row];
    for _ in 1..3 {
        let prev = rows.last().expect("rows is nonempty");
        rows.push(prev.iter().map(|p| rotate_third_turn(p)).collect());
    }
    let config = Configuration::new(3, grid_points(&rows))?;
    let grid = ProductGrid::new(3, n, config)?;
    let (embedded, witness) =
        is_embedded(grid.config(), &grid.triangles()).expect("torus pairs are classifiable");
    assert!(
        embedded,
        "the rotated torus grid is embedded (witness {witness:?})"
    );
    Ok(grid)
}

/// Rotate by a third turn about the x-axis:
/// (x, y, z) ↦ (x, −y/2 − (√3/2)z, (√3/2)y − z/2).
fn rotate_third_turn(p: &[Quad]) -> Vec<Quad> {
    let half = Quad::new(rat(1, 2), Rat::zero());
    let root3_half = Quad::new(Rat::zero(), rat(1, 2));
    vec![
        p[0].clone(),
        -(half.clone() * p[1].clone()) - root3_half.clone() * p[2].clone(),
        root3_half * p[1].clone() - half * p[2].clone(),
    ]
}

/// A 4 × n grid in ℝ⁴ with an embedded triangle family: rows 1–2 are the
/// embedded cylinder grid lifted to the hyperplane x₄ = 0, and rows 3–4
/// translate row 1 by short vectors with nonzero fourth coordinate.
/// Candidate translate pairs are tried in a fixed deterministic order — a
/// verified primary pair first, then a reproducible pseudorandom sequence
/// at a few scales — and the first candidate certified by the exhaustive
/// pair check wins; no conjectured positioning criterion is trusted.
pub fn k4n_grid_r4(n: usize, search_budget: u32) -> Result<ProductGrid<Rat>, ConstructionError> {
    if n < 2 {
        return Err(bad("a four-row grid needs at least two columns"));
    }
    let cylinder = cylinder_grid(n, DEFAULT_SHRINK_BUDGET)?;
    let lift = |j: usize| -> Vec<Vec<Rat>> {
        (1..=n)
            .map(|p| {
                let mut c = cylinder.config().coords(cylinder.index(j, p)).to_vec();
                c.push(Rat::zero());
                c
            })
            .collect()
    };
    let row1 = lift(1);
    let row2 = lift(2);

    const PRIMARY: ([i64; 4], [i64; 4]) = ([66, -51, 451, 322], [88, -60, 227, 145]);
    const SCALE_DEN: i64 = 1 << 16;
    let mut rng = SplitMix64::new(0x4b34_4e47_5249_4431);
    let draw = |rng: &mut SplitMix64, halving: u32| -> Vec<Rat> {
        let mut v: Vec<Rat> = (0..3)
            .map(|_| rat(rng.int_in(-511, 511), SCALE_DEN << halving))
            .collect();
        let mut last = rng.int_in(-511, 511);
        while last == 0 {
            last = rng.int_in(-511, 511);
        }
        v.push(rat(last, SCALE_DEN << halving));
        v
    };
    let mut last_failure: Option<(usize, usize)> = None;

    for tried in 0..search_budget {
        let (v3, v4): (Vec<Rat>, Vec<Rat>) = if tried == 0 {
            (
                PRIMARY.0.iter().map(|&v| rat(v, SCALE_DEN)).collect(),
                PRIMARY.1.iter().map(|&v| rat(v, SCALE_DEN)).collect(),
            )
        } else {
            let halving = (tried - 1) % 4;
            (draw(&mut rng, halving), draw(&mut rng, halving))
        };
        let translate = |v: &[Rat]| -> Vec<Vec<Rat>> {
            row1.iter()
                .map(|c| {
                    c.iter()
                        .zip(v)
                        .map(|(x, s)| x.clone() + s.clone())
                        .collect()
                })
                .collect()
        };
        let points = grid_points(&[row1.clone(), row2.clone(), translate(&v3), translate(&v4)]);
        let Ok(config) = Configuration::new(4, points) else {
            continue;
        };
        let grid = ProductGrid::new(4, n, config)?;
        match is_embedded(grid.config(), &grid.triangles()) {
            Ok((true, None)) => return Ok(grid),
            Ok((false, Some(pair))) => last_failure = Some(pair),
            _ => {}
        }
    }
    Err(ConstructionError::SearchExhausted(format!(
        "no translate pair for the 4×{n} grid embedded within {search_budget} candidates \
         (last failing triangle pair: {last_failure:?})"
    )))
}

/// The fixed six-point instance for deleted-face linking: an apex O at the
/// origin and five points P_k on distinct rays through the plane z = 1,
/// chosen so that the ten apex triangles O P_j P_k minus the face O P1 P2,
/// together with the replacement segment P1 P2, form an embedded family.
/// That embeddedness is re-verified on every call.
pub fn deleted_face_instance() -> Configuration<Rat> {
    let coords: [[Rat; 3]; 5] = [
        [rat_int(0), rat_int(4), rat_int(4)],
        [rat_int(5), rat_int(25), rat_int(5)],
        [rat_int(0), rat_int(3), rat_int(1)],
        [rat(-9, 4), Rat::zero(), rat(9, 8)],
        [rat(5, 2), Rat::zero(), rat(5, 4)],
    ];
    let mut points = vec![Point::new("O", vec![Rat::zero(); 3])];
    for (k, c) in coords.into_iter().enumerate() {
        points.push(Point::new(format!("P{}", k + 1), c.to_vec()));
    }
    let cfg = Configuration::new(3, points).expect("fixed deleted-face data is valid");
    let family = deleted_face_family(&[2]);
    let (embedded, witness) =
        is_embedded(&cfg, &family).expect("deleted-face family is classifiable");
    assert!(
        embedded,
        "the deleted-face instance family is embedded (witness {witness:?})"
    );
    cfg
}

/// The simplex family of the deleted-face problem on points 0…5 (0 the
/// apex): all triangles {0, j, k} except those whose deleted index k is
/// listed (each deleted face is {0, 1, k}), plus the replacement segments
/// {1, k}.
pub fn deleted_face_family(deleted: &[usize]) -> Vec<SimplexRef> {
    let mut family = Vec::new();
    for j in 1..=5usize {
        for k in j + 1..=5 {
            if j == 1 && deleted.contains(&k) {
                continue;
            }
            family.push(SimplexRef::triangle(0, j, k));
        }
    }
    for &k in deleted {
        family.push(SimplexRef::segment(1, k));
    }
    family
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizability::{classify_pair, is_linear_realization, PairClass};
    use crate::simplex::count_interior_crossings;

    #[test]
    fn moment_curves_are_general_position_and_validated() {
        let cfg = moment_curve_default(6, 3).unwrap();
        assert_eq!(cfg.len(), 6);
        assert_eq!(cfg.dimension(), 3);
        assert_eq!(cfg.coords(2), &[rat_int(3), rat_int(9), rat_int(27)][..]);
        assert_eq!(cfg.label(0), "P1");

        let cfg4 = moment_curve_default(7, 4).unwrap();
        assert!(is_general_position(&cfg4).0);

        // Two points on a line are fine.
        let tiny = moment_curve_default(2, 1).unwrap();
        assert_eq!(tiny.coords(1), &[rat_int(2)][..]);

        // Parameter validation.
        assert!(matches!(
            moment_curve(2, 3, &[rat_int(1)]),
            Err(ConstructionError::InvalidInput(_))
        ));
        assert!(matches!(
            moment_curve(2, 3, &[rat_int(2), rat_int(2)]),
            Err(ConstructionError::InvalidInput(_))
        ));
        assert!(matches!(
            moment_curve(2, 0, &[rat_int(1), rat_int(2)]),
            Err(ConstructionError::InvalidInput(_))
        ));
        // Fractional parameters work and keep curve order.
        let frac = moment_curve(3, 2, &[rat(-1, 2), rat(1, 3), rat(7, 2)]).unwrap();
        assert_eq!(frac.coords(0), &[rat(-1, 2), rat(1, 4)][..]);
    }

    #[test]
    fn hexagon_helix_has_its_advertised_linking() {
        let cfg = hexagon_helix6();
        assert_eq!(cfg.label(0), "A1");
        assert_eq!(cfg.label(5), "A6");
        for i in 0..6 {
            assert_eq!(cfg.coords(i)[2], rat_int(i as i64 + 1), "height of A{}", i + 1);
        }
        let v = triangles_linked(
            &cfg,
            &SimplexRef::triangle(0, 2, 4),
            &SimplexRef::triangle(1, 3, 5),
        )
        .unwrap();
        assert!(v.linked);
        assert_eq!(v.crossing_count, 1);
    }

    #[test]
    fn rational_helix_takes_the_first_denominator_and_unlinks_all_splits() {
        let cfg = rational_helix(6).unwrap();
        // First offset (k = 0) already validates: denominators are n+1 = 7.
        let expected_t: Vec<Rat> = (1..=6).map(|i| rat(2 * i - 7, 7)).collect();
        for (i, t) in expected_t.iter().enumerate() {
            assert_eq!(&cfg.coords(i)[2], t, "z-coordinate of point {i}");
        }
        // x² + y² = 1 on every point: the helix sits on the unit cylinder.
        for i in 0..6 {
            let [x, y, _] = cfg.coords(i) else { panic!() };
            assert_eq!(x.clone() * x.clone() + y.clone() * y.clone(), Rat::one());
        }
        // The advertised unlinking table: three splits cross twice, the
        // rest not at all — every count even.
        let counts = split_crossing_counts(&cfg, 2).unwrap();
        for (seg, c) in &counts {
            let expected = match (seg.indices()[0], seg.indices()[1]) {
                (1, 3) | (1, 4) | (2, 4) => 2,
                _ => 0,
            };
            assert_eq!(*c, expected, "split at segment {:?}", seg.indices());
        }

        // Small n validate on general position alone.
        let four = rational_helix(4).unwrap();
        assert!(is_general_position(&four).0);
        let one = rational_helix(1).unwrap();
        assert_eq!(one.coords(0), &[rat_int(1), rat_int(0), rat_int(0)][..]);
        assert!(matches!(
            rational_helix(0),
            Err(ConstructionError::InvalidInput(_))
        ));
    }

    #[test]
    fn simplex_plus_interior_puts_the_barycenter_inside() {
        // d = 2: no pair of disjoint-vertex segments crosses.
        let plane = simplex_plus_interior(2).unwrap();
        assert_eq!(plane.len(), 4);
        let segments: Vec<SimplexRef> = (0..4)
            .flat_map(|a| ((a + 1)..4).map(move |b| SimplexRef::segment(a, b)))
            .collect();
        assert_eq!(
            count_interior_crossings(&plane, &segments, true).unwrap(),
            0
        );

        // d = 3: the full triangle family is embedded.
        let space = simplex_plus_interior(3).unwrap();
        let triangles: Vec<SimplexRef> = (0..5)
            .flat_map(|a| {
                ((a + 1)..5).flat_map(move |b| {
                    ((b + 1)..5).map(move |c| SimplexRef::triangle(a, b, c))
                })
            })
            .collect();
        assert_eq!(triangles.len(), 10);
        let (embedded, _) = is_embedded(&space, &triangles).unwrap();
        assert!(embedded);

        // d = 4: six points, and no two vertex-disjoint triangles meet.
        let four = simplex_plus_interior(4).unwrap();
        assert_eq!(four.len(), 6);
        for a in 0..6usize {
            for b in (a + 1)..6 {
                for c in (b + 1)..6 {
                    let t1 = SimplexRef::triangle(a, b, c);
                    let rest: Vec<usize> =
                        (0..6).filter(|i| ![a, b, c].contains(i)).collect();
                    let t2 = SimplexRef::new(rest).unwrap();
                    if a > 0 {
                        break; // complementary pairs only, each once
                    }
                    assert_eq!(
                        classify_pair(&four, &t1, &t2).unwrap(),
                        PairClass::Disjoint,
                        "pair {:?} vs {:?}",
                        t1.indices(),
                        t2.indices()
                    );
                }
            }
        }

        assert!(matches!(
            simplex_plus_interior(0),
            Err(ConstructionError::InvalidInput(_))
        ));
    }

    #[test]
    fn cone_lifts_the_base_and_rejects_flat_apexes() {
        let base = moment_curve_default(4, 2).unwrap();
        let cfg = cone(vec![Rat::zero(), Rat::zero(), rat_int(1)], &base).unwrap();
        assert_eq!(cfg.dimension(), 3);
        assert_eq!(cfg.len(), 5);
        assert_eq!(cfg.label(0), "O");
        assert_eq!(cfg.label(1), "P1");
        assert_eq!(cfg.coords(0), &[rat_int(0), rat_int(0), rat_int(1)][..]);
        assert_eq!(cfg.coords(2), &[rat_int(2), rat_int(4), rat_int(0)][..]);

        // Apex triangles over a convex base inherit the base's chord
        // crossings: the diagonals P1P3 and P2P4 cross at (5/2, 7), so the
        // cones over them meet along a seam.
        let (embedded, witness) = is_embedded(
            &cfg,
            &[SimplexRef::triangle(0, 1, 3), SimplexRef::triangle(0, 2, 4)],
        )
        .unwrap();
        assert!(!embedded);
        assert_eq!(witness, Some((0, 1)));

        // Over a crossing-free base (triangle plus interior point) the
        // full apex-triangle family embeds.
        let flat = simplex_plus_interior(2).unwrap();
        let tent = cone(vec![Rat::zero(), Rat::zero(), rat_int(1)], &flat).unwrap();
        let family: Vec<SimplexRef> = (1..=4usize)
            .flat_map(|j| ((j + 1)..=4).map(move |k| SimplexRef::triangle(0, j, k)))
            .collect();
        assert_eq!(family.len(), 6);
        let (embedded, witness) = is_embedded(&tent, &family).unwrap();
        assert!(embedded, "witness {witness:?}");

        assert_eq!(
            cone(vec![Rat::zero(), Rat::zero(), Rat::zero()], &base),
            Err(ConstructionError::ApexInHyperplane)
        );
        assert!(matches!(
            cone(vec![Rat::zero(), Rat::zero()], &base),
            Err(ConstructionError::InvalidInput(_))
        ));
    }

    #[test]
    fn product_grid_indexing_labels_and_triangles() {
        let table: Vec<Vec<Rat>> = (0..6).map(|i| vec![rat_int(i), rat_int(i * i)]).collect();
        let grid = product_grid(2, 3, &table).unwrap();
        assert_eq!(grid.shape(), (2, 3));
        assert_eq!(grid.index(1, 1), 0);
        assert_eq!(grid.index(1, 3), 2);
        assert_eq!(grid.index(2, 1), 3);
        assert_eq!(grid.config().label(3), "A21");
        assert_eq!(grid.config().label(2), "A13");

        // 2·C(2,2)·C(3,2) = 6 triangles, deterministic order.
        let triangles = grid.triangles();
        assert_eq!(triangles.len(), 6);
        assert_eq!(triangles[0].indices(), &[0, 1, 4]);
        assert_eq!(triangles[1].indices(), &[0, 3, 4]);

        assert!(matches!(
            product_grid(2, 3, &table[..5]),
            Err(ConstructionError::ShapeMismatch {
                expected: (2, 3),
                got: 5
            })
        ));
        let single = product_grid(1, 6, &table).unwrap();
        assert!(single.triangles().is_empty());

        // The abstract hypergraph mirrors the concrete family.
        let hg = product_hypergraph(2, 3).unwrap();
        assert_eq!(hg.vertices(), 6);
        assert_eq!(hg.faces().len(), 6);
        let from_grid: Vec<[usize; 3]> = triangles
            .iter()
            .map(|t| [t.indices()[0], t.indices()[1], t.indices()[2]])
            .collect();
        let mut sorted_grid = from_grid.clone();
        sorted_grid.sort();
        let mut sorted_hg = hg.faces().to_vec();
        sorted_hg.sort();
        assert_eq!(sorted_grid, sorted_hg);
    }

    #[test]
    fn cylinder_grids_embed_at_the_pinned_halving_exponents() {
        // First accepted halving exponent k per column count: the x-offset
        // between the rows is exactly 1/(3·2^k).
        for (n, k) in [(2usize, 0u32), (3, 0), (4, 2), (5, 3), (6, 4)] {
            let grid = cylinder_grid(n, DEFAULT_SHRINK_BUDGET).unwrap();
            assert_eq!(grid.shape(), (2, n));
            let a11 = grid.config().coords(grid.index(1, 1));
            let a21 = grid.config().coords(grid.index(2, 1));
            assert_eq!(
                a21[0].clone() - a11[0].clone(),
                rat(1, 3 << k),
                "shrink exponent for n = {n}"
            );
            assert_eq!(grid.config().label(grid.index(2, n)), format!("A2{n}"));
        }
        assert!(matches!(
            cylinder_grid(1, 4),
            Err(ConstructionError::InvalidInput(_))
        ));
        // An impossible budget exhausts.
        assert!(matches!(
            cylinder_grid(4, 0),
            Err(ConstructionError::SearchExhausted(_))
        ));
    }

    #[test]
    fn torus_rotation_has_order_three_and_realizes_the_product() {
        // R³ = identity on a generic Quad point.
        let p: Vec<Quad> = vec![Quad::from_int(5), Quad::sqrt3(), Quad::from_int(-2)];
        let once = rotate_third_turn(&p);
        let thrice = rotate_third_turn(&rotate_third_turn(&once));
        assert_ne!(p, once);
        assert_eq!(p, thrice);

        let grid = torus_k3n(4).unwrap();
        assert_eq!(grid.shape(), (3, 4));
        assert_eq!(grid.config().len(), 12);
        assert_eq!(grid.config().label(0), "A11");
        assert_eq!(grid.config().label(11), "A34");
        assert_eq!(grid.triangles().len(), 36);
        assert_eq!(Quad::FIELD_NAME, "quad_sqrt3");

        // The concrete grid is a linear realization of the abstract product.
        let hg = product_hypergraph(3, 4).unwrap();
        let identity: Vec<usize> = (0..12).collect();
        let (realized, witness) =
            is_linear_realization(&hg, grid.config(), &identity).unwrap();
        assert!(realized, "witness {witness:?}");

        assert!(torus_k3n(3).is_ok());
        assert!(matches!(
            torus_k3n(5),
            Err(ConstructionError::InvalidInput(_))
        ));
        assert!(matches!(
            torus_k3n(1),
            Err(ConstructionError::InvalidInput(_))
        ));
    }

    #[test]
    fn four_row_grids_accept_the_primary_translates() {
        for n in [2usize, 3] {
            let grid = k4n_grid_r4(n, DEFAULT_SEARCH_BUDGET).unwrap();
            assert_eq!(grid.shape(), (4, n));
            assert_eq!(grid.config().dimension(), 4);
            // Rows 1–2 are the lifted cylinder: fourth coordinates zero.
            for p in 1..=n {
                assert_eq!(grid.config().coords(grid.index(1, p))[3], Rat::zero());
                assert_eq!(grid.config().coords(grid.index(2, p))[3], Rat::zero());
            }
            // The primary candidate pair was accepted: row 3 and row 4 are
            // row 1 translated by the fixed vectors.
            let v3 = [66i64, -51, 451, 322];
            let v4 = [88i64, -60, 227, 145];
            for p in 1..=n {
                let r1 = grid.config().coords(grid.index(1, p));
                let r3 = grid.config().coords(grid.index(3, p));
                let r4 = grid.config().coords(grid.index(4, p));
                for c in 0..4 {
                    assert_eq!(
                        r3[c].clone() - r1[c].clone(),
                        rat(v3[c], 1 << 16),
                        "row 3 offset, column {p}, coordinate {c}"
                    );
                    assert_eq!(
                        r4[c].clone() - r1[c].clone(),
                        rat(v4[c], 1 << 16),
                        "row 4 offset, column {p}, coordinate {c}"
                    );
                }
            }
        }
        assert!(matches!(
            k4n_grid_r4(1, 4),
            Err(ConstructionError::InvalidInput(_))
        ));
        assert!(matches!(
            k4n_grid_r4(2, 0),
            Err(ConstructionError::SearchExhausted(_))
        ));
    }

    #[test]
    fn deleted_face_instance_is_embedded_and_its_outline_pair_is_linked() {
        let cfg = deleted_face_instance();
        assert_eq!(cfg.len(), 6);
        assert_eq!(cfg.label(0), "O");
        assert_eq!(cfg.coords(0), &[Rat::zero(), Rat::zero(), Rat::zero()][..]);
        assert_eq!(cfg.coords(2), &[rat_int(5), rat_int(25), rat_int(5)][..]);
        assert_eq!(cfg.coords(4), &[rat(-9, 4), Rat::zero(), rat(9, 8)][..]);

        // The family the generator certifies: 9 apex triangles + segment.
        let family = deleted_face_family(&[2]);
        assert_eq!(family.len(), 10);
        assert!(family.contains(&SimplexRef::segment(1, 2)));
        assert!(!family.contains(&SimplexRef::triangle(0, 1, 2)));

        // The conclusion the verifier will check: 012 and 345 linked.
        let v = triangles_linked(
            &cfg,
            &SimplexRef::triangle(0, 1, 2),
            &SimplexRef::triangle(3, 4, 5),
        )
        .unwrap();
        assert!(v.linked, "deleted-face outline pair must be linked");
    }

    #[test]
    fn scalars_round_trip_through_grid_files_shapes() {
        // ProductGrid::new validates shape against the configuration.
        let table: Vec<Vec<Rat>> = (0..4).map(|i| vec![rat_int(i), rat_int(3 * i)]).collect();
        let grid = product_grid(2, 2, &table).unwrap();
        let config = grid.clone().into_config();
        assert_eq!(config.len(), 4);
        assert!(matches!(
            ProductGrid::new(3, 2, config),
            Err(ConstructionError::ShapeMismatch {
                expected: (3, 2),
                got: 4
            })
        ));
        // Representation survives for quad grids too.
        let q = Quad::sqrt3();
        assert_eq!(Quad::from_repr(q.to_repr()).unwrap(), q);
    }
}
