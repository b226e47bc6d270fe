//! Brute-force oracle for the acceptance suite.
//!
//! Every function here is written from first principles directly over
//! `BigRational`: hand-expanded 2×2 and 3×3 determinant signs for the
//! planar and spatial predicates, and a plain dense Gaussian elimination
//! for the 4-dimensional barycentric system. Nothing is shared with the
//! library's kernel, simplex, or linear-algebra modules, so agreement
//! between these counts and the library's is evidence, not tautology.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Sign of the orientation determinant of (p, q, r) in the plane:
/// +1 for a counterclockwise turn, -1 for clockwise, 0 for collinear.
fn orient2(p: &[Q], q: &[Q], r: &[Q]) -> i8 {
    let det = (&q[0] - &p[0]) * (&r[1] - &p[1]) - (&q[1] - &p[1]) * (&r[0] - &p[0]);
    sign(&det)
}

/// Sign of the 3×3 determinant with rows q−p, r−p, s−p: the side of the
/// plane through (p, q, r) that s lies on.
fn orient3(p: &[Q], q: &[Q], r: &[Q], s: &[Q]) -> i8 {
    let a = [&q[0] - &p[0], &q[1] - &p[1], &q[2] - &p[2]];
    let b = [&r[0] - &p[0], &r[1] - &p[1], &r[2] - &p[2]];
    let c = [&s[0] - &p[0], &s[1] - &p[1], &s[2] - &p[2]];
    let det = &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0]);
    sign(&det)
}

fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Whether open segments (a, b) and (c, d) cross in one interior point:
/// each pair of endpoints strictly straddles the other segment's line.
fn segments_cross_2d(a: &[Q], b: &[Q], c: &[Q], d: &[Q]) -> bool {
    let s1 = orient2(a, b, c);
    let s2 = orient2(a, b, d);
    let s3 = orient2(c, d, a);
    let s4 = orient2(c, d, b);
    s1 != 0 && s2 != 0 && s3 != 0 && s4 != 0 && s1 != s2 && s3 != s4
}

/// Number of crossing pairs among all segments spanned by the points,
/// counting only pairs with four distinct endpoints.
pub fn plane_crossing_count(pts: &[Vec<Q>]) -> usize {
    let n = pts.len();
    let mut segments = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            segments.push((i, j));
        }
    }
    let mut count = 0;
    for (k, &(a, b)) in segments.iter().enumerate() {
        for &(c, d) in &segments[k + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if segments_cross_2d(&pts[a], &pts[b], &pts[c], &pts[d]) {
                count += 1;
            }
        }
    }
    count
}

/// Whether the open segment (p, q) passes through the open triangle
/// (t0, t1, t2) in R³: the endpoints strictly straddle the triangle's
/// plane, and the segment's line passes strictly inside the triangle.
fn segment_pierces_triangle(p: &[Q], q: &[Q], t0: &[Q], t1: &[Q], t2: &[Q]) -> bool {
    let sp = orient3(t0, t1, t2, p);
    let sq = orient3(t0, t1, t2, q);
    if sp == 0 || sq == 0 || sp == sq {
        return false;
    }
    let s1 = orient3(p, q, t0, t1);
    let s2 = orient3(p, q, t1, t2);
    let s3 = orient3(p, q, t2, t0);
    s1 != 0 && s1 == s2 && s2 == s3
}

/// Mod-2 linking of two vertex-disjoint triangles in R³: the outline of
/// the first pierces the body of the second an odd number of times.
pub fn triangles_linked_3d(pts: &[Vec<Q>], t1: [usize; 3], t2: [usize; 3]) -> bool {
    let edges = [(t1[0], t1[1]), (t1[1], t1[2]), (t1[2], t1[0])];
    let crossings = edges
        .iter()
        .filter(|&&(a, b)| {
            segment_pierces_triangle(&pts[a], &pts[b], &pts[t2[0]], &pts[t2[1]], &pts[t2[2]])
        })
        .count();
    crossings % 2 == 1
}

/// Number of linked pairs among the ten unordered pairs of complementary
/// triangles on six points in R³.
pub fn cgs_linked_count(pts: &[Vec<Q>]) -> usize {
    assert_eq!(pts.len(), 6, "the count is over six points");
    let mut count = 0;
    for b in 1..6usize {
        for c in b + 1..6 {
            let t1 = [0, b, c];
            let t2: Vec<usize> = (1..6).filter(|v| *v != b && *v != c).collect();
            if triangles_linked_3d(pts, t1, [t2[0], t2[1], t2[2]]) {
                count += 1;
            }
        }
    }
    count
}

/// Decides by plain Gaussian elimination whether two triangles in R⁴
/// cross in an interior point, from the 6×6 rational system for the
/// barycentric coordinates of their affine-hull intersection. An
/// inconsistent system means the hulls are disjoint — no crossing; an
/// underdetermined one means the instance is not transversal, returned
/// as `None`.
fn triangles_cross_4d(a: [&[Q]; 3], b: [&[Q]; 3]) -> Option<bool> {
    // Unknowns x0,x1,x2,y0,y1,y2: four coordinate equations
    // Σ xᵢ aᵢ − Σ yⱼ bⱼ = 0 plus the two normalizations Σ xᵢ = 1, Σ yⱼ = 1.
    let mut m: Vec<Vec<Q>> = Vec::with_capacity(6);
    for coord in 0..4 {
        let mut row: Vec<Q> = Vec::with_capacity(7);
        for p in &a {
            row.push(p[coord].clone());
        }
        for p in &b {
            row.push(-p[coord].clone());
        }
        row.push(Q::zero());
        m.push(row);
    }
    for block in 0..2 {
        let mut row = vec![Q::zero(); 7];
        for k in 0..3 {
            row[3 * block + k] = Q::one();
        }
        row[6] = Q::one();
        m.push(row);
    }

    let mut rank = 0usize;
    for col in 0..6 {
        let Some(pivot) = (rank..6).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for k in col..7 {
            m[rank][k] = &m[rank][k] / &lead;
        }
        for r in 0..6 {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in col..7 {
                    m[r][k] = &m[r][k] - &factor * &m[rank][k];
                }
            }
        }
        rank += 1;
    }
    if rank < 6 {
        // Rows past the rank are all-zero on the coefficient side; a
        // nonzero right-hand side there makes the system inconsistent,
        // i.e. the affine hulls never meet.
        if (rank..6).any(|r| !m[r][6].is_zero()) {
            return Some(false);
        }
        return None;
    }
    Some((0..6).all(|r| m[r][6].is_positive()))
}

/// Number of vertex-disjoint triangle pairs with an interior crossing
/// among all triangles spanned by seven points in R⁴. Panics on a
/// singular pair: the oracle is only invoked on transversal instances.
pub fn vkf_crossing_count(pts: &[Vec<Q>]) -> usize {
    let n = pts.len();
    let mut triangles = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                triangles.push([i, j, k]);
            }
        }
    }
    let mut count = 0;
    for (s, t1) in triangles.iter().enumerate() {
        for t2 in &triangles[s + 1..] {
            if t1.iter().any(|v| t2.contains(v)) {
                continue;
            }
            let crossed = triangles_cross_4d(
                [&pts[t1[0]], &pts[t1[1]], &pts[t1[2]]],
                [&pts[t2[0]], &pts[t2[1]], &pts[t2[2]]],
            )
            .expect("oracle instances must be transversal");
            if crossed {
                count += 1;
            }
        }
    }
    count
}
