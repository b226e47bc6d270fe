//! Exact-arithmetic geometry of linked simplices.
//!
//! This crate constructs point configurations in ℝᵈ, decides intersection and
//! linking questions about the simplices spanned by them, and verifies parity
//! laws those configurations obey (odd numbers of crossings, guaranteed
//! linked pairs, Radon/Tverberg partitions, …). All computation is exact:
//! coordinates live in ℚ or in the quadratic field ℚ(√3), and every verdict
//! is a theorem about the specific input, not a floating-point estimate.
//!
//! The core is generic over the scalar field through [`scalar::ExactScalar`];
//! the crate root re-exports the two concrete fields as [`Rat`] and [`Quad`].

pub mod cli;
pub mod constructions;
pub mod files;
pub mod kernel;
pub mod linalg;
pub mod linking;
pub mod lp;
pub mod partitions;
pub mod realizability;
pub mod rng;
pub mod scalar;
pub mod simplex;
pub mod verifiers;

pub use scalar::{rat, rat_int, Quad, Rat, ScalarRepr};
