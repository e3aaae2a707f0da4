//! Exact decision procedures for positivity-type properties of multivariate
//! polynomials: Lorentzian (completely log-concave) testing in polynomial
//! time, log-concavity of homogeneous cubics, directional log-concavity of a
//! depressed-cubic family, and graph-encoded hard-instance constructions for
//! stability and quartic log-concavity, with exact and sampling-based
//! verification oracles.
//!
//! All decision paths run over arbitrary-precision rationals; floating point
//! appears only in sampling-style numeric spot checks.
//!
//! ```
//! use lorentzian::lorentzian::is_lorentzian;
//! use lorentzian::oracles::{verify_reduction, ReductionKind, ReductionOutcome};
//! use lorentzian::{text, Graph};
//!
//! // x1x2 + x1x3 + x2x3 is Lorentzian; x1² + x2² is not
//! let e2 = text::parse_polynomial("vars 3\n1 ; x0 x1\n1 ; x0 x2\n1 ; x1 x2\n").unwrap();
//! assert!(is_lorentzian(&e2).is_lorentzian);
//! let sos = text::parse_polynomial("vars 2\n1 ; x0^2\n1 ; x1^2\n").unwrap();
//! let witness = is_lorentzian(&sos).failure_witness.unwrap();
//! assert_eq!(witness.kind.name(), "bad-inertia");
//!
//! // build the stability instance for (P3, k = 2) and confirm it end to end
//! let report = verify_reduction(ReductionKind::Stability, &Graph::path(3), 2, 200, 0).unwrap();
//! assert_eq!(report.outcome, ReductionOutcome::Agree);
//! assert!(report.exact_positive); // ω(P3) = 2 ≤ k
//! ```

pub mod directional;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod lorentzian;
pub mod matrix;
pub mod oracles;
pub mod poly;
pub mod scalar;
pub mod sqrt;
pub mod text;
pub mod unipoly;

/// Arbitrary-precision integer used throughout.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational: the canonical exact scalar.
pub type Rational = num_rational::BigRational;

/// Polynomial with exact rational coefficients — the universal carrier.
pub type QPoly = poly::Polynomial<Rational>;

/// Polynomial with integer coefficients (hot exact paths).
pub type ZPoly = poly::Polynomial<Int>;

/// Polynomial with float coefficients (numeric spot checks only).
pub type FPoly = poly::Polynomial<f64>;

/// Univariate polynomial with rational coefficients.
pub type QUniPoly = unipoly::UniPoly<Rational>;

/// Univariate polynomial with integer coefficients.
pub type ZUniPoly = unipoly::UniPoly<Int>;

/// Symmetric matrix with rational entries.
pub type QMatrix = matrix::SymMatrix<Rational>;

pub use error::{Error, Result};
pub use graph::Graph;
pub use matrix::{inertia, Inertia, SymMatrix};
pub use poly::{LinearMap, Monomial, Polynomial};
pub use scalar::{rat, rat_int, Coeff};
pub use sqrt::{ceil_of_scaled_sqrt, compare_to_sqrt};
pub use unipoly::{is_real_rooted, real_root_count, UniPoly};
