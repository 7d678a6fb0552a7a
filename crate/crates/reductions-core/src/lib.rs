//! Exact-arithmetic computations for the geometry of commutative subalgebras
//! of `gl_n` and `sl_n`.
//!
//! Everything is computed over the rationals (or over rational functions in
//! one parameter for degeneration curves); there is no floating point
//! anywhere in this crate. The main entry points are:
//!
//! * [`mat`] — exact rational/polynomial linear algebra (rref, kernels,
//!   characteristic and minimal polynomials),
//! * [`lie`] — brackets, centralizers, regularity and Jordan data in
//!   `gl_n`/`sl_n`,
//! * [`grassmann`] — Plücker coordinates and limits of one-parameter
//!   families of subspaces,
//! * [`exterior`] — the multilinear maps cutting out the variety of
//!   abelian subalgebras, the trace-form quadric, and the determinant
//!   systems on wedge powers,
//! * [`orbits`] — the complete classification of three-dimensional abelian
//!   subalgebras of `sl_4` into 14 orbits, with degeneration curves,
//! * [`tangent`] — Zariski tangent spaces, tangent-cone data at the minimal
//!   orbits, and the vanishing order of the squared volume form,
//! * [`bb`] — torus fixed points, tangent weights, and Betti numbers of the
//!   resolved variety via the Bialynicki-Birula decomposition.

pub mod bb;
pub mod exterior;
pub mod grassmann;
pub mod json;
pub mod lie;
pub mod mat;
pub mod orbits;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod tangent;
pub mod util;

pub use scalar::Q;

/// Errors produced by the exact-computation layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("input is not abelian: {0}")]
    NotAbelian(String),
    #[error("malformed curve: {0}")]
    MalformedCurve(String),
    #[error("malformed input at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("no orbit signature match: {0}")]
    NoOrbitMatch(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
