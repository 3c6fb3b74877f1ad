//! Exact tensor calculus for almost hypercomplex structures with
//! Hermitian-Norden metrics on 4-dimensional real Lie algebras.
//!
//! Everything is computed over exact rationals, with the two structure
//! parameters `a` and `b` carried symbolically as multivariate polynomial
//! coefficients. The pipeline is:
//!
//! * [`exactalg`] -- rationals, polynomials and exact linear algebra;
//! * [`liealg`] -- structure constants, Jacobi checks, the built-in
//!   `g4_5`/`g4_6` catalog and the algebra file format;
//! * [`hnstruct`] -- the fixed hypercomplex triple (J1, J2, J3), the neutral
//!   metric and the associated metrics;
//! * [`tensorcalc`] -- Levi-Civita connection, fundamental tensors F_alpha,
//!   Lee forms and Nijenhuis tensors;
//! * [`curvature`] -- curvature tensor, Ricci tensors, scalar curvatures and
//!   sectional curvatures of the basic coordinate planes;
//! * [`classify`] -- decomposition of F_alpha into basic classes with
//!   symbolic vanishing conditions and the induced parameter stratification;
//! * [`analysis`] -- the aggregated report (JSON-serializable);
//! * [`verify`] -- the pinned published component tables and theorem claims,
//!   re-checked against the computation.

pub mod analysis;
pub mod classify;
pub mod curvature;
pub mod exactalg;
pub mod hnstruct;
pub mod liealg;
pub mod tensorcalc;
pub mod verify;

mod error;

pub use error::Error;

/// Frame dimension; the whole construction is specific to dimension 4.
pub const DIM: usize = 4;

pub type Result<T> = std::result::Result<T, Error>;
