//! R_I biorthogonal polynomials of Hahn type in exact rational arithmetic.
//!
//! The polynomials `P_n(x; alpha, beta, N)` solve the generalized eigenvalue
//! problem `M P_n = n L P_n` for two difference operators on the grid
//! `x = 0..=N`, and are biorthogonal to the rational functions `V_n(x)`.
//! Every relation the library knows about (biorthogonality, recurrence,
//! difference equation, Hahn connection, q-limits) is checked as an exact
//! equality of rationals.

pub mod biorth;
pub mod bispectral;
pub mod error;
pub mod families;
pub mod gevp;
pub mod grid;
pub mod kernel;
pub mod qlimit;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
pub use kernel::{int, rat, HahnParameterSet, ParameterSet, Rational};
