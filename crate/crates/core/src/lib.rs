//! Exact computer algebra for octonions, quaternions, and the Clifford
//! algebra Cl(0,7), together with the triality bridge between them and the
//! Cauchy-Riemann / Dirac operator machinery of hypercomplex analysis.
//!
//! Everything is computed over exact scalars (see [`scalar::Scalar`]); the
//! concrete instantiation used by the CLI and the verification suites is
//! [`Rat`], an arbitrary-precision rational. There is no floating point
//! anywhere in the identity checks: equality means equality.
//!
//! The crate is organised around the objects it manipulates:
//!
//! * [`octonion`] - the octonion algebra (hard-coded multiplication table),
//!   quaternions, and the quaternion form `x = u + v o e4` with its
//!   associated product and cross-product identities.
//! * [`clifford`] - dense 128-component multivectors of Cl(0,7), blade
//!   arithmetic over 7-bit masks, grade projection, and the structural
//!   constants `W`, `e_{1..7}`, and the primitive idempotents.
//! * [`triality`] - the octonion product realised inside Cl(0,7) via `1 - W`
//!   and via the idempotent, plus the eight graded identities relating
//!   `16 [a b I]_k` to closed forms.
//! * [`poly`] / [`polymap`] / [`parse`] - exact multivariate polynomials,
//!   algebra-valued polynomial maps on R^8, and the expression grammar.
//! * [`ops`] - Cauchy-Riemann operators, classification of regular
//!   functions, spinor-space tests, and the Cauchy-Kovalevskaya extension.
//! * [`biaxial`] - the quaternion-form decomposition of the operators,
//!   quaternionic product rules, and the octonionic vector-calculus identity.
//! * [`regspace`] - constraint matrices for each regularity system, exact
//!   rank via fraction-free elimination, nullspace bases, and dimension
//!   reports witnessing the strict inclusions between function classes.
//! * [`verify`] - the seeded, deterministic check suites that the CLI runs.

pub mod biaxial;
pub mod clifford;
pub mod octonion;
pub mod ops;
pub mod parse;
pub mod poly;
pub mod polymap;
pub mod regspace;
pub mod scalar;
pub mod triality;
pub mod verify;

mod error;

pub use error::Error;

/// Exact rational scalar used by the CLI and the verification suites.
pub type Rat = num_rational::BigRational;

/// Octonion over exact rationals.
pub type Oct = octonion::Octonion<Rat>;
/// Quaternion over exact rationals.
pub type Quat = octonion::Quaternion<Rat>;
/// Quaternion form of an octonion over exact rationals.
pub type QForm = octonion::QuatForm<Rat>;
/// Cl(0,7) multivector over exact rationals.
pub type Mv = clifford::Multivector<Rat>;
/// Exact rational multivariate polynomial in x0..x7.
pub type RatPoly = poly::Poly<Rat>;
/// Algebra-valued polynomial map over exact rationals.
pub type RatMap = polymap::PolyMap<Rat>;
