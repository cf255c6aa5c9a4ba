//! Exact computer algebra for the Lie algebra W(2,2) and its Whittaker modules.
//!
//! * [`algebra`]: generators, the bracket, partitions.
//! * [`pbw`]: the enveloping algebra `U(W)` with PBW straightening.
//! * [`whittaker`]: Whittaker types, `M_φ`, quotients and the module action.
//! * [`solver`]: Whittaker vectors by exact nullspace, and the descent procedure.
//! * [`structure`]: composition series, decompositions, submodule closure.
//! * [`expr`]: the expression language used by the `w22` binary.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod pbw;
pub mod poly;
mod render;
pub mod sample;
pub mod solver;
pub mod structure;
pub mod verify;
pub mod whittaker;

pub use algebra::{bracket, grade, Generator, GeneratorCombination, Partition};
pub use error::{Error, Result};
pub use pbw::{multiply, normalize, PbwMonomial, UeaElement};
pub use poly::CentralPoly;
pub use whittaker::{
    act, basis_enumerate, phi_extend, vector_diagnostics, BasisKey, ModuleVector, QuotientSpec,
    Truncation, TruncationReport, WhittakerType,
};

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`].
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
