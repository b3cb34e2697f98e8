//! Weyl groups, the Chevalley–Bruhat order, balanced ideals and the
//! homological invariants of the associated domains of discontinuity.

pub mod bbw;
pub mod bruhat;
pub mod cartan;
pub mod error;
pub mod families;
pub mod parabolic;
pub mod set;
pub mod topology;
pub mod weyl;

pub use bruhat::{BruhatOrder, Ideal};
pub use cartan::{parse_type, CartanType, RootSystem};
pub use error::{Error, Result};
pub use parabolic::Parabolic;
pub use set::ElementSet;
pub use weyl::{Elem, WeylGroup, Word};

/// Polynomials with integer coefficients.
pub type IntPoly = topology::Polynomial<i64>;
/// Poincaré polynomials, coefficients indexed by real degree.
pub type PoincarePolynomial = IntPoly;
