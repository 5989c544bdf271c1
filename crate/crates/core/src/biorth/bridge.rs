//! Identities linking the biorthogonal family to Hahn polynomials with the
//! degree-dependent parameters `xi = -beta - n`, `eta = alpha + beta`.

use num::Zero;
use rand::Rng;

use crate::error::Result;
use crate::families::{hahn_grid, p_grid, v_grid};
use crate::kernel::pochhammer::{pochhammer, pochhammer_signed};
use crate::kernel::rational::{factorial, int, Rational};
use crate::kernel::{HahnParameterSet, ParameterSet};
use crate::report::{IdentityReport, ReportParams};
use crate::sampling::random_rational;

use super::gram::{diagonal_moment, rational_moment_sum};
use super::hahn::hahn_weight;
use super::weight::{normalization_h, weight, WeightVector};

/// `H_n(x; -beta-n, alpha+beta, N) = P_n(x)` on the grid.
pub fn check_hahn_glue(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("hahn-glue", p.into());
    for n in 0..=p.big_n() {
        let hp = HahnParameterSet::glued(p, n)?;
        let (h, pn) = (hahn_grid(n, &hp)?, p_grid(n, p)?);
        for x in 0..=p.big_n() as usize {
            r.compare(|| format!("n={n} x={x}"), h[x].clone(), pn[x].clone());
        }
    }
    Ok(r)
}

/// `w^H_x(-beta-n, alpha+beta) = (alpha+1)_N (1+beta)_{n-1} / (N! (1+beta-x)_{n-1}) w_x`.
///
/// At `n = 0` the index `n - 1` is negative and `(a)_{-1} = 1/(a-1)`.
pub fn check_weight_glue(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("weight-glue", p.into());
    let big_n = p.big_n();
    for n in 0..=big_n {
        let hp = HahnParameterSet::glued(p, n)?;
        let m = n as i64 - 1;
        let pre = pochhammer(&(p.alpha() + int(1)), big_n)
            * pochhammer_signed(&(p.beta() + int(1)), m)?
            / factorial(big_n);
        for x in 0..=big_n {
            let den = pochhammer_signed(&(int(1) + p.beta() - int(x as i64)), m)?;
            let rhs = &pre / den * weight(x, p)?;
            r.compare(|| format!("n={n} x={x}"), hahn_weight(x, &hp)?, rhs);
        }
    }
    Ok(r)
}

/// `sum_x w_x P_n(x) / (1+beta-x)_m = 0` for `m < n`.
pub fn check_rational_orthogonality(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("rational-orthogonality", p.into());
    for n in 0..=p.big_n() {
        for m in 0..n {
            r.compare(
                || format!("n={n} m={m}"),
                rational_moment_sum(n, m, p)?,
                Rational::zero(),
            );
        }
    }
    Ok(r)
}

/// Diagonal rational moment against its closed form.
pub fn check_diagonal_moment(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("diagonal-moment", p.into());
    for n in 0..=p.big_n() {
        r.compare(
            || format!("n={n}"),
            rational_moment_sum(n, n, p)?,
            diagonal_moment(n, p)?,
        );
    }
    Ok(r)
}

/// `sum_x w_x V_n P_n` equals the top `rho`-coefficient of `V_n` times the
/// diagonal rational moment scaled by `(-beta-n)_n`.
pub fn check_top_coefficient_reduction(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("top-coefficient-reduction", p.into());
    let w = WeightVector::new(p);
    let big = int(p.big_n() as i64);
    for n in 0..=p.big_n() {
        let ni = int(n as i64);
        let lhs = w.pair(&v_grid(n, p)?, &p_grid(n, p)?)?;
        let top = pochhammer(&-&ni, n) * pochhammer(&(-p.alpha() - &big), n)
            / (pochhammer(&-&big, n) * factorial(n));
        let rhs = top * pochhammer(&(-p.beta() - &ni), n) * rational_moment_sum(n, n, p)?;
        r.compare(|| format!("n={n}"), lhs, rhs);
    }
    Ok(r)
}

/// `sum_x w_x V_n P_n = h_n`.
pub fn check_norm_assembly(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("norm-assembly", p.into());
    let w = WeightVector::new(p);
    for n in 0..=p.big_n() {
        let lhs = w.pair(&v_grid(n, p)?, &p_grid(n, p)?)?;
        r.compare(|| format!("n={n}"), lhs, normalization_h(n, p)?);
    }
    Ok(r)
}

/// All of the above on one parameter set.
pub fn check_bridge(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("bridge", p.into());
    r.absorb(check_hahn_glue(p)?);
    r.absorb(check_weight_glue(p)?);
    r.absorb(check_rational_orthogonality(p)?);
    r.absorb(check_diagonal_moment(p)?);
    r.absorb(check_top_coefficient_reduction(p)?);
    r.absorb(check_norm_assembly(p)?);
    Ok(r)
}

/// `(a-m)_k = (1-a)_m (a)_k / (1-a-k)_m` on random `a`, `m`, `k`, skipping
/// draws where the right side has a vanishing denominator.
pub fn check_pochhammer_reflection<R: Rng>(rng: &mut R, trials: usize) -> IdentityReport {
    let mut r = IdentityReport::new("pochhammer-reflection", ReportParams::None {});
    for _ in 0..trials {
        let a = random_rational(rng);
        let m = rng.gen_range(0..6u64);
        let k = rng.gen_range(0..6u64);
        let den = pochhammer(&(int(1) - &a - int(k as i64)), m);
        if den.is_zero() {
            continue;
        }
        let lhs = pochhammer(&(&a - int(m as i64)), k);
        let rhs = pochhammer(&(int(1) - &a), m) * pochhammer(&a, k) / den;
        r.compare(|| format!("a={a} m={m} k={k}"), lhs, rhs);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bridge_on_regression_sets() {
        for (a, b, n) in [
            (int(1), rat(1, 2), 2),
            (rat(1, 3), rat(2, 5), 5),
            (rat(7, 2), rat(-1, 3), 8),
        ] {
            let p = ParameterSet::new(a, b, n).unwrap();
            let r = check_bridge(&p).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn reflection_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let r = check_pochhammer_reflection(&mut rng, 200);
        assert!(r.passed());
        assert!(r.checks > 100);
    }
}
