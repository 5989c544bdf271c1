//! Exact scalars, Pochhammer symbols and terminating (basic) hypergeometric series.

pub mod basic;
pub mod hypergeometric;
pub mod linalg;
pub mod params;
pub mod pochhammer;
pub mod radical;
pub mod rational;

pub use basic::{basic_hyp_terminating, QContext, QField, QMonomial, RadicalQ, RootedQ};
pub use hypergeometric::hyp_terminating;
pub use params::{HahnParameterSet, ParameterSet};
pub use pochhammer::{pochhammer, pochhammer_signed, q_poch_shift_identity_check, q_pochhammer};
pub use radical::Radical;
pub use rational::{int, parse_rational, rat, Rational};
