//! Exhaustive isomorphism census of genus-4 curves over F_2.
//!
//! A genus-4 curve over a field is either hyperelliptic (a degree-2 cover of
//! the projective line) or trigonal (canonically embedded in P^3 as the
//! intersection of a quadric and a cubic surface). This crate enumerates both
//! families over the field with two elements, one representative per
//! isomorphism class, counts their points over F_2 .. F_32, computes the
//! L-polynomial of each curve, and groups the curves into isogeny classes.
//!
//! Module map:
//! - [`gf2k`] — arithmetic in GF(2^k), k = 1..8, with trace and
//!   Artin–Schreier solution counting;
//! - [`polyf2`] — bit-packed polynomials over GF(2) and the weighted Möbius
//!   action of PGL(2, F_2) on polynomials of bounded degree;
//! - [`hyper`] — the hyperelliptic census (standard models y² + q(x)y = p(x));
//! - [`forms4`] — quadratic and cubic forms in four variables over GF(2),
//!   GL(4, 2), rank and Arf invariant;
//! - [`trig`] — the trigonal census (quadric ∩ cubic in P^3);
//! - [`zeta`] — point counts to L-polynomials and isogeny classes;
//! - [`census`], [`record`], [`report`], [`verify`] — orchestration, the
//!   on-disk record format, table emission, and the self-check suite used by
//!   the `verify` subcommand.

pub mod census;
pub mod forms4;
pub mod gf2k;
pub mod hyper;
pub mod polyf2;
pub mod record;
pub mod report;
pub mod trig;
pub mod verify;
pub mod zeta;

use thiserror::Error;

/// Errors shared across the census modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported extension degree {0} (supported: 1..=8)")]
    UnsupportedExtensionDegree(u32),
    #[error("modulus {0:#x} is not irreducible of degree {1}")]
    ReducibleModulus(u64, u32),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial degree {degree} exceeds action weight {weight}")]
    DegreeExceedsWeight { degree: i32, weight: u32 },
    #[error("Arf invariant undefined for a form of rank {0}")]
    ArfUndefined(u32),
    #[error("degenerate pencil member: cubic is a multiple of the quadric")]
    DegeneratePencil,
    #[error("point counts are inconsistent: {0}")]
    InconsistentCounts(String),
    #[error("Weil bound violated for N_{k} = {n}")]
    WeilBoundViolated { k: u32, n: i64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
