//! Weights, scalar products and the (bi)orthogonality relations, including
//! the bridge to classical Hahn polynomials.

pub mod bridge;
pub mod christoffel;
pub mod gram;
pub mod hahn;
pub mod weight;

pub use bridge::{check_bridge, check_pochhammer_reflection};
pub use christoffel::{christoffel_chain_check, christoffel_chain_glued};
pub use gram::{diagonal_moment, gram_matrix, rational_moment_sum};
pub use hahn::{hahn_gram, hahn_kappa, hahn_norm, hahn_weight};
pub use weight::{normalization_h, scalar_product, weight, WeightVector};
