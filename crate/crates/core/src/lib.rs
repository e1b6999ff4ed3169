//! Intersection semilattices, Möbius polynomials and face counts of
//! arrangements of hyperplanes and pseudolines.
//!
//! The order-theoretic side ([`poset`]) computes the f-polynomial of an
//! arrangement as `(-1)^{rk A} M(-x, -1)` from its Möbius polynomial. The
//! geometric side enumerates faces directly: exact sign-vector feasibility
//! for rational hyperplanes ([`faces`]) and a sweep for wiring diagrams
//! ([`wiring`]). [`verify`] puts the two next to each other.
//!
//! Geometry is generic over an exact [`Scalar`]; [`Rational`] is the default.

pub mod document;
pub mod error;
pub mod faces;
pub mod fm;
pub mod generate;
pub mod geom;
pub mod linalg;
pub mod poly;
pub mod poset;
pub mod scalar;
pub mod verify;
pub mod wiring;

pub use error::{Error, Result};
pub use faces::{FaceRecord, Sign, SignVector};
pub use geom::{AffineFlat, Arrangement, GeometricLattice, Hyperplane};
pub use linalg::Matrix;
pub use poly::BiPolynomial;
pub use poset::{f_from_mobius, Flat, FlatId, MobiusTable, Semilattice};
pub use scalar::Scalar;
pub use verify::VerifyReport;
pub use wiring::{CrossingEvent, ValidatedWiring, WiringDiagram};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Word-sized rationals; panic on overflow.
pub type SmallRational = num_rational::Rational64;

pub type RationalMatrix = Matrix<Rational>;
pub type RationalHyperplane = Hyperplane<Rational>;
pub type RationalArrangement = Arrangement<Rational>;
pub type RationalFlat = AffineFlat<Rational>;
pub type Document = document::InputDocument<Rational>;
