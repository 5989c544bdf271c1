use crate::error::Result;
use crate::families::{p_grid, v_grid};
use crate::grid::GridFunction;
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{factorial, int, Rational};
use crate::kernel::ParameterSet;
use crate::report::GramReport;

use super::weight::{normalization_h, WeightVector};

/// Entry `(n, m)` is `sum_x w_x P_n(x) V_m(x)`; expected `h_n delta_{nm}`.
pub fn gram_matrix(p: &ParameterSet) -> Result<GramReport> {
    let w = WeightVector::new(p);
    let ps = (0..=p.big_n())
        .map(|n| p_grid(n, p))
        .collect::<Result<Vec<_>>>()?;
    let vs = (0..=p.big_n())
        .map(|m| v_grid(m, p))
        .collect::<Result<Vec<_>>>()?;
    let gram = ps
        .iter()
        .map(|pn| {
            vs.iter()
                .map(|vm| w.pair(pn, vm))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let expected = (0..=p.big_n())
        .map(|n| normalization_h(n, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(GramReport::assemble(p.into(), gram, expected))
}

/// `1 / (1+beta-x)_m` on the grid.
pub fn rational_monomial(m: u64, p: &ParameterSet) -> GridFunction {
    GridFunction::from_fn(p.big_n(), |x| {
        pochhammer(&(int(1) + p.beta() - int(x as i64)), m).recip()
    })
}

/// `sum_x w_x P_n(x) / (1+beta-x)_m`; zero for `m < n`.
pub fn rational_moment_sum(n: u64, m: u64, p: &ParameterSet) -> Result<Rational> {
    p.check_degree(m)?;
    WeightVector::new(p).pair(&p_grid(n, p)?, &rational_monomial(m, p))
}

/// Closed form of the diagonal moment:
/// `(-1)^n (alpha+beta+1)_n n! / ((beta)_n (-N-alpha)_n (-beta-n)_n)`.
pub fn diagonal_moment(n: u64, p: &ParameterSet) -> Result<Rational> {
    p.check_degree(n)?;
    let ni = int(n as i64);
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let num = sign * pochhammer(&(p.alpha() + p.beta() + int(1)), n) * factorial(n);
    let den = pochhammer(p.beta(), n)
        * pochhammer(&(-int(p.big_n() as i64) - p.alpha()), n)
        * pochhammer(&(-p.beta() - &ni), n);
    Ok(num / den)
}
