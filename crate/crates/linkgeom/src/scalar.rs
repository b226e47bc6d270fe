//! Exact scalar arithmetic: arbitrary-precision rationals and the quadratic
//! extension field ℚ(√3).
//!
//! Every geometric predicate in this crate reduces to the sign of a scalar,
//! so scalars must support exact sign computation. Two concrete fields are
//! provided:
//!
//! * [`Rat`] — arbitrary-precision rationals (`num::BigRational`);
//! * [`Quad`] — numbers of the form `a + b·√3` with rational `a`, `b`,
//!   needed because a rotation through 2π/3 has matrix entries ±√3/2.
//!
//! Generic code is written against the [`ExactScalar`] trait. Values cross
//! serialization boundaries through the tagged [`ScalarRepr`] union, which
//! also realizes the promotion of a rational into ℚ(√3) with `b = 0`.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar: the workhorse field for every construction except
/// the order-3 rotation torus.
pub type Rat = BigRational;

/// Tagged exact value used at file-format and report boundaries.
///
/// `Rational` holds a canonical rational; `Quad(a, b)` represents `a + b·√3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarRepr {
    Rational(Rat),
    Quad(Rat, Rat),
}

/// An exactly computable field scalar.
///
/// Implementors must keep values in canonical form (reduced fractions with
/// positive denominators) so that `Eq`/`Ord` agree with mathematical
/// equality, and must decide [`sign`](ExactScalar::sign) without any
/// floating-point approximation.
pub trait ExactScalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Ord
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Field tag used by the point-file format.
    const FIELD_NAME: &'static str;

    /// Embeds a rational into the field.
    fn from_rat(r: Rat) -> Self;

    /// Embeds a small integer into the field.
    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// Exact sign: −1, 0, or +1.
    fn sign(&self) -> i8;

    /// Converts to the tagged union for serialization.
    fn to_repr(&self) -> ScalarRepr;

    /// Converts from the tagged union; `None` when the value does not lie in
    /// this field (a genuine √3 component cannot demote to a rational).
    fn from_repr(repr: ScalarRepr) -> Option<Self>;
}

/// Convenience constructor for a reduced rational `num/den`.
///
/// # Panics
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn rat_sign(r: &Rat) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl ExactScalar for Rat {
    const FIELD_NAME: &'static str = "rational";

    fn from_rat(r: Rat) -> Self {
        r
    }

    fn sign(&self) -> i8 {
        rat_sign(self)
    }

    fn to_repr(&self) -> ScalarRepr {
        ScalarRepr::Rational(self.clone())
    }

    fn from_repr(repr: ScalarRepr) -> Option<Self> {
        match repr {
            ScalarRepr::Rational(r) => Some(r),
            ScalarRepr::Quad(a, b) => b.is_zero().then_some(a),
        }
    }
}

/// An element `a + b·√3` of the real quadratic field ℚ(√3).
///
/// Both components are canonical rationals, so derived equality is exact.
/// Ordering and sign are decided by integer comparisons only: for opposite
/// component signs the sign of `a + b√3` follows the comparison of `a²`
/// with `3b²` (they can never be equal, since √3 is irrational).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quad {
    pub a: Rat,
    pub b: Rat,
}

impl Quad {
    pub fn new(a: Rat, b: Rat) -> Self {
        Quad { a, b }
    }

    /// The generator √3.
    pub fn sqrt3() -> Self {
        Quad::new(Rat::zero(), Rat::one())
    }

    /// The field conjugate `a − b·√3`.
    pub fn conjugate(&self) -> Self {
        Quad::new(self.a.clone(), -self.b.clone())
    }

    /// The rational field norm `a² − 3b²`; zero only for the zero element.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(BigInt::from(3)) * &self.b * &self.b
    }
}

impl From<Rat> for Quad {
    fn from(a: Rat) -> Self {
        Quad::new(a, Rat::zero())
    }
}

fn quad_sign(a: &Rat, b: &Rat) -> i8 {
    let sa = rat_sign(a);
    let sb = rat_sign(b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // Opposite strict signs: |a| versus |b|·√3 is decided by a² versus 3b².
    let a2 = a * a;
    let b2_3 = Rat::from_integer(BigInt::from(3)) * b * b;
    match a2.cmp(&b2_3) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => unreachable!("a² = 3b² with b ≠ 0 is impossible: √3 is irrational"),
    }
}

impl ExactScalar for Quad {
    const FIELD_NAME: &'static str = "quad_sqrt3";

    fn from_rat(r: Rat) -> Self {
        Quad::from(r)
    }

    fn sign(&self) -> i8 {
        quad_sign(&self.a, &self.b)
    }

    fn to_repr(&self) -> ScalarRepr {
        ScalarRepr::Quad(self.a.clone(), self.b.clone())
    }

    fn from_repr(repr: ScalarRepr) -> Option<Self> {
        match repr {
            ScalarRepr::Rational(r) => Some(Quad::from(r)),
            ScalarRepr::Quad(a, b) => Some(Quad::new(a, b)),
        }
    }
}

impl PartialOrd for Quad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Quad {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = &self.a - &other.a;
        let b = &self.b - &other.b;
        match quad_sign(&a, &b) {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}·√3", self.b)
        } else if self.b.sign() < 0 {
            write!(f, "{} - {}·√3", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}·√3", self.a, self.b)
        }
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, rhs: Quad) -> Quad {
        Quad::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, rhs: Quad) -> Quad {
        Quad::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, rhs: Quad) -> Quad {
        // (a₁ + b₁√3)(a₂ + b₂√3) = a₁a₂ + 3b₁b₂ + (a₁b₂ + b₁a₂)√3
        let three = Rat::from_integer(BigInt::from(3));
        Quad::new(
            &self.a * &rhs.a + three * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Div for Quad {
    type Output = Quad;
    fn div(self, rhs: Quad) -> Quad {
        // x / y = x·ȳ / N(y) with the rational norm N(y) = a² − 3b².
        let n = rhs.norm();
        assert!(!n.is_zero(), "division of Quad by zero");
        let num = self * rhs.conjugate();
        Quad::new(num.a / n.clone(), num.b / n)
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::new(-self.a, -self.b)
    }
}

impl Zero for Quad {
    fn zero() -> Self {
        Quad::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Quad {
    fn one() -> Self {
        Quad::new(Rat::one(), Rat::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn q(a: (i64, i64), b: (i64, i64)) -> Quad {
        Quad::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn rational_sign_cases() {
        assert_eq!(rat(0, 1).sign(), 0);
        assert_eq!(rat(-3, 7).sign(), -1);
        assert_eq!(rat(5, 2).sign(), 1);
    }

    #[test]
    fn quad_sign_cases() {
        // −2 + √3 < 0 because 3 < 4.
        assert_eq!(q((-2, 1), (1, 1)).sign(), -1);
        // −5/3 + √3 > 0 because 3 > 25/9.
        assert_eq!(q((-5, 3), (1, 1)).sign(), 1);
        // Pure components.
        assert_eq!(q((0, 1), (-2, 5)).sign(), -1);
        assert_eq!(q((7, 3), (0, 1)).sign(), 1);
        assert_eq!(Quad::zero().sign(), 0);
        // Matching signs.
        assert_eq!(q((1, 2), (1, 3)).sign(), 1);
        assert_eq!(q((-1, 2), (-1, 3)).sign(), -1);
    }

    #[test]
    fn quad_field_axioms_spot_checks() {
        let x = q((3, 2), (-1, 3));
        let y = q((-2, 5), (4, 1));
        let z = q((1, 7), (2, 9));
        assert_eq!(x.clone() * (y.clone() + z.clone()),
                   x.clone() * y.clone() + x.clone() * z.clone());
        let w = x.clone() / y.clone();
        assert_eq!(w * y.clone(), x);
        // √3 · √3 = 3.
        assert_eq!(Quad::sqrt3() * Quad::sqrt3(), Quad::from_int(3));
    }

    #[test]
    fn sign_is_multiplicative_on_random_pairs() {
        let mut rng = SplitMix64::new(0x5ca1ab1e);
        for _ in 0..10_000 {
            let a = rng.rat_with_bits(8);
            let b = rng.rat_with_bits(8);
            assert_eq!((a.clone() * b.clone()).sign(), a.sign() * b.sign());
            let qa = Quad::new(rng.rat_with_bits(6), rng.rat_with_bits(6));
            let qb = Quad::new(rng.rat_with_bits(6), rng.rat_with_bits(6));
            assert_eq!((qa.clone() * qb.clone()).sign(), qa.sign() * qb.sign());
        }
    }

    #[test]
    fn repr_round_trip_and_promotion() {
        let r = rat(-6, 4); // canonical −3/2
        assert_eq!(r, rat(-3, 2));
        assert_eq!(Rat::from_repr(r.to_repr()), Some(r.clone()));
        // Rational promotes into Quad with b = 0.
        let promoted = Quad::from_repr(r.to_repr()).unwrap();
        assert_eq!(promoted, Quad::from(r.clone()));
        // A genuine quad value does not demote.
        assert_eq!(Rat::from_repr(Quad::sqrt3().to_repr()), None);
        assert_eq!(Rat::from_repr(ScalarRepr::Quad(r.clone(), Rat::zero())), Some(r));
    }

    #[test]
    fn quad_ordering_matches_decimal_intuition() {
        // 1 + √3 ≈ 2.732 < 2.8, and 2 − √3 ≈ 0.268 > 1/4.
        assert!(q((1, 1), (1, 1)) < Quad::from(rat(28, 10)));
        assert!(q((2, 1), (-1, 1)) > Quad::from(rat(1, 4)));
    }
}
