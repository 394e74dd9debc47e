//! Divisor-theoretic invariants of moduli spaces of one-dimensional sheaves
//! on the projective plane.
//!
//! A pure one-dimensional semistable sheaf on the plane with support curve of
//! degree `mu` and Euler characteristic `chi` moves in a projective moduli
//! space `N(mu, chi)` of dimension `mu^2 + 1`. For `mu >= 3` these spaces
//! have Picard rank two, and their birational geometry is governed by exact
//! lattice data: the Tor pairing on the Grothendieck group of the plane, a
//! distinguished rank-two sublattice orthogonal to the sheaf class, and a
//! family of semicircular walls in a stability half-plane.
//!
//! Everything in this crate is computed in arbitrary-precision rational
//! arithmetic. Floating point never enters any computation path; the only
//! approximate numbers in the whole workspace live in the SVG renderer of
//! the companion command-line crate.
//!
//! Module layout:
//!
//! * [`rational`] — exact scalars and small helpers.
//! * [`kclass`] — Chern characters, twisting, Euler characteristic, Tor pairing.
//! * [`moduli`] — per-space invariants, normalization of `chi`, sheaf
//!   resolutions, isomorphism classification.
//! * [`cones`] — effective cones, the interpolation criterion, moving curves.
//! * [`stability`] — slope functions, destabilizing walls, Jordan-Hölder
//!   factors, nef cones.
//! * [`report`] — one aggregated, cross-checked report per space.

pub mod cones;
pub mod kclass;
pub mod moduli;
pub mod rational;
pub mod report;
pub mod stability;

pub use kclass::ChernCharacter;
pub use moduli::ModuliSpace;
pub use rational::Rational;
pub use report::AnalysisReport;

/// Errors shared by the whole crate.
///
/// Domain errors (`InvalidMu`, `NotApplicable`, `NotNormalized`, ...) signal
/// that a precondition on the input was not met. `InternalInvariant` is
/// different: it means a cross-check that should hold for every valid input
/// failed, i.e. a bug, and callers are expected to treat it as such.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("support degree mu must be at least 1 (got {0})")]
    InvalidMu(i64),
    #[error("operation requires Picard rank 2, i.e. mu >= 3 (got mu = {0})")]
    NotApplicable(i64),
    #[error("chi = {chi} is not normalized for mu = {mu} (need 0 <= 2*chi <= mu)")]
    NotNormalized { mu: i64, chi: i64 },
    #[error("class does not lie in the orthogonal sublattice spanned by the basis")]
    NotInSpan,
    #[error("class does not pair to zero with the sheaf class under the Tor pairing")]
    NotOrthogonal,
    #[error("class is not one-dimensional (need ch0 = 0 and ch1 > 0)")]
    NotOneDimensional,
    #[error("rank must be nonzero")]
    ZeroRank,
    #[error("stability point must have t_sq > 0")]
    InvalidStabilityPoint,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
