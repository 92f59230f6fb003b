//! Exact computation in the Weyl algebra `A_1` (generators `x`, `y`,
//! relation `yx = xy + 1`) and its Lie-bracket-closed subspace spanned by
//! the elements `x^i*y`, together with a solver that determines every
//! multihomogeneous polynomial identity of a given multidegree satisfied by
//! that subspace, over the rationals or any prime field.

pub mod catalog;
pub mod error;
pub mod exppoly;
pub mod freealg;
pub mod idsolve;
pub mod linearize;
pub mod repro;
pub mod scalar;
pub mod weyl;
pub mod witt;

pub use error::{Error, Result};
pub use scalar::{Char, Scalar};
