//! Exact-arithmetic models of Artin and braid group representations, with
//! power-series filtrations that produce verifiable separation certificates:
//! the depth at which the image of a pure element first differs from the
//! identity in a congruence quotient.
//!
//! The main pieces:
//!
//! - [`exact`]: rationals, the number field ℚ(√2, ζ₃), Laurent polynomials
//!   and truncated power series in `h`.
//! - [`coxeter`]: small Coxeter systems, positive roots with depth, and the
//!   word problem in W.
//! - [`paris`]: the depth-recursion polynomials T(s, β), the maps φ_s and
//!   ψ_s over ℚ[x^±1, y^±1], and their reduction modulo h.
//! - [`krammer`]: the Lawrence–Krammer representation over ℚ[q^±1, t^±1],
//!   its ζ₃-specialization and an exact braid-word equality oracle.
//! - [`filtration`]: the congruence filtration of GL⁰ and separation
//!   certificates for pure words.
//! - [`artin`]: free-group Artin actions, the b_i construction, and the
//!   embeddings of type-B and Hessian-type braid groups into braid groups.
//! - [`raag`]: right-angled Artin group word reduction and the free-product
//!   witness suite.

pub mod artin;
pub mod coxeter;
pub mod error;
pub mod exact;
pub mod filtration;
pub mod krammer;
pub mod matrix;
pub mod paris;
pub mod raag;
pub mod words;

pub use error::{Error, Result};

/// Default truncation order for specializations; deep enough to separate
/// short pure words while staying cheap in exact arithmetic.
pub const DEFAULT_ORDER: usize = 16;

/// Default strand bound for exact braid-word equality.
pub const DEFAULT_STRAND_BOUND: usize = 7;
