//! Exact arithmetic for symmetric functions in the Schur basis, λ-ring
//! operations, Schur-finiteness and rationality of λ-series.

pub mod error;
pub mod lambda_calculus;
pub mod lambda_rings;
pub mod linalg;
pub mod partitions;
pub mod rationality;
pub mod poly;
pub mod scalar;
pub mod schur;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use poly::{MPoly, Monomial};
pub use schur::{SymFuncOver, TensorSymFuncOver};

/// Symmetric functions with integer coefficients.
pub type SymFunc = SymFuncOver<BigInt>;
/// Symmetric functions with rational coefficients.
pub type SymFuncQ = SymFuncOver<BigRational>;
pub type TensorSymFunc = TensorSymFuncOver<BigInt>;
/// Integer polynomials.
pub type Poly = MPoly<BigInt>;
pub type PolyQ = MPoly<BigRational>;

/// Degree cap applied by the λ-ring contexts and the command line.
pub const DEFAULT_MAX_DEGREE: usize = 12;
