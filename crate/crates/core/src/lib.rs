//! Exact verification toolkit for a discrete periodic delta Bose gas on `k`
//! particles and `L` sites, its integral-reflection operators, the
//! propagation operator built from them, and Bethe wave functions.
//!
//! Identities are checked in exact rational arithmetic wherever possible;
//! only the Bethe equation solver works in double-precision complex numbers.

pub mod bethe;
pub mod error;
pub mod function;
pub mod hamiltonian;
pub mod hecke;
pub mod laurent;
pub mod propagation;
pub mod random;
pub mod scalar;
pub mod suites;
pub mod weyl;

pub use error::{Error, Result};
pub use function::{act_on_function, LatticeFunction};
pub use scalar::{Rational, Scalar};
pub use weyl::{AffineRoot, AffineWeylElement, Lattice, LatticePoint, Params, ReducedWord};
