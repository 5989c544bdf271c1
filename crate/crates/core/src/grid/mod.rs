//! Grid functions on `x = 0..=N`, the difference operators acting on them,
//! and their tridiagonal matrices in the `phi` and `rho` bases.

pub mod basis;
pub mod function;
pub mod matrix;
pub mod operator;

pub use basis::{expand_in_phi, expand_in_rho, phi_basis, rho_basis};
pub use function::GridFunction;
pub use matrix::{
    matrix_in_phi_basis, matrix_in_rho_basis, BasisMatrix, BasisTag, PhiOperator, RhoOperator,
};
pub use operator::{
    adjoint_check, apply_operator, make_adjoint_l, make_adjoint_m, make_l, make_m, make_y,
    DifferenceOperator, OperatorKind,
};
