//! Recurrence relation, difference equation and parameter-shift identities.
//!
//! Polynomial identities are checked by evaluation at more points than the
//! degree, which makes the check exact.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{askey_p, monic_p, p_grid, p_value};
use crate::grid::operator::{coeff_a, coeff_b, coeff_c};
use crate::grid::{make_l, make_m, make_y, GridFunction};
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{int, rat, serde_str, Rational};
use crate::kernel::ParameterSet;
use crate::report::{IdentityReport, ReportParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceCoefficients {
    pub n: u64,
    #[serde(with = "serde_str")]
    pub gamma: Rational,
    #[serde(with = "serde_str")]
    pub delta: Rational,
    #[serde(with = "serde_str")]
    pub epsilon: Rational,
    /// Coefficient of `P_{n+1}` in the action of `Y`.
    #[serde(with = "serde_str")]
    pub raise: Rational,
    /// Coefficient of `P_{n-1}` in the action of `Y`.
    #[serde(with = "serde_str")]
    pub lower: Rational,
}

/// `gamma_n = (2n^2 + (alpha+2beta-N)n - beta N)/(n+alpha+1)`,
/// `delta_n = n(alpha+beta+n)(N+1-n)/((alpha+n)(alpha+1+n))`, `epsilon_n = n+beta-1`,
/// `raise = (n-N)(beta+n)`, `lower = n(alpha+beta+n)`.
///
/// `delta_0` is zero outright, so `alpha = 0` needs no special case.
pub fn recurrence_coefficients(n: u64, p: &ParameterSet) -> Result<RecurrenceCoefficients> {
    p.check_degree(n)?;
    let ni = int(n as i64);
    let big = int(p.big_n() as i64);
    let (a, b) = (p.alpha(), p.beta());
    let gamma =
        (int(2) * &ni * &ni + (a + int(2) * b - &big) * &ni - b * &big) / (&ni + a + int(1));
    let delta = if n == 0 {
        Rational::zero()
    } else {
        &ni * (a + b + &ni) * (&big + int(1) - &ni) / ((a + &ni) * (a + int(1) + &ni))
    };
    Ok(RecurrenceCoefficients {
        n,
        gamma,
        delta,
        epsilon: &ni + b - int(1),
        raise: (&ni - &big) * (b + &ni),
        lower: &ni * (a + b + &ni),
    })
}

/// `n(alpha+beta+n)/(1-beta-n)`, the `P_{n-1}` coefficient in the action of `L`.
fn l_lower(n: u64, p: &ParameterSet) -> Rational {
    let ni = int(n as i64);
    &ni * (p.alpha() + p.beta() + &ni) / (int(1) - p.beta() - &ni)
}

/// `(alpha+1)(1-beta)/(1-beta-n)`.
fn shift_factor(n: u64, p: &ParameterSet) -> Rational {
    (p.alpha() + int(1)) * (int(1) - p.beta()) / (int(1) - p.beta() - int(n as i64))
}

fn p_or_zero(n: i64, p: &ParameterSet) -> Result<GridFunction> {
    if n < 0 || n as u64 > p.big_n() {
        Ok(GridFunction::zeros(p.big_n()))
    } else {
        p_grid(n as u64, p)
    }
}

fn p_at_or_zero(n: i64, x: &Rational, p: &ParameterSet) -> Result<Rational> {
    if n < 0 {
        Ok(Rational::zero())
    } else {
        p_value(n as u64, x, p)
    }
}

/// Distinct non-grid sample points.
pub fn off_grid_points(p: &ParameterSet, count: usize) -> Vec<Rational> {
    let big = p.big_n() as i64;
    (0..count as i64)
        .map(|j| {
            if j % 2 == 0 {
                rat(6 * j + 1, 4)
            } else {
                rat(-(3 * j + 2 * big + 1), 3)
            }
        })
        .collect()
}

/// `Y P_n = raise P_{n+1} - (raise+lower) P_n + lower P_{n-1}` and
/// `L P_n = -(n+alpha+1) P_n - n(alpha+beta+n)/(1-beta-n) P_{n-1}` on the grid.
pub fn verify_y_action(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("operator-action", p.into());
    let (l, y) = (make_l(p)?, make_y(p)?);
    for n in 0..=p.big_n() {
        let rc = recurrence_coefficients(n, p)?;
        let ni = n as i64;
        let (prev, cur) = (p_or_zero(ni - 1, p)?, p_grid(n, p)?);
        // raise vanishes at n = N, so the missing P_{N+1} never contributes
        let next = if rc.raise.is_zero() {
            GridFunction::zeros(p.big_n())
        } else {
            p_or_zero(ni + 1, p)?
        };
        let y_rhs = next
            .scale(&rc.raise)
            .sub(&cur.scale(&(&rc.raise + &rc.lower)))?
            .add(&prev.scale(&rc.lower))?;
        let y_lhs = y.apply(&cur)?;
        let l_rhs = cur
            .scale(&-(int(ni + 1) + p.alpha()))
            .sub(&prev.scale(&l_lower(n, p)))?;
        let l_lhs = l.apply(&cur)?;
        for x in 0..=p.big_n() as usize {
            r.compare(
                || format!("Y n={n} x={x}"),
                y_lhs[x].clone(),
                y_rhs[x].clone(),
            );
            r.compare(
                || format!("L n={n} x={x}"),
                l_lhs[x].clone(),
                l_rhs[x].clone(),
            );
        }
    }
    Ok(r)
}

/// Three-term recurrence
/// `raise P_{n+1} - (raise+lower) P_n + lower P_{n-1} = -x((n+alpha+1) P_n + l P_{n-1})`.
///
/// Every degree is checked on the grid; degrees below `N` are also checked at
/// five non-grid points. At `n = N` the identity involves `P_{N+1}`, which the
/// finite family does not have, and only holds on the grid.
pub fn verify_recurrence_nonmonic(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("recurrence", p.into());
    let grid: Vec<Rational> = (0..=p.big_n()).map(|x| int(x as i64)).collect();
    let off = off_grid_points(p, 5);
    for n in 0..=p.big_n() {
        let rc = recurrence_coefficients(n, p)?;
        let ni = n as i64;
        let points: Vec<&Rational> = if n < p.big_n() {
            grid.iter().chain(off.iter()).collect()
        } else {
            grid.iter().collect()
        };
        for x in points {
            let cur = p_value(n, x, p)?;
            let prev = p_at_or_zero(ni - 1, x, p)?;
            let next = if rc.raise.is_zero() {
                Rational::zero()
            } else {
                p_value(n + 1, x, p)?
            };
            let lhs = &rc.raise * next - (&rc.raise + &rc.lower) * &cur + &rc.lower * &prev;
            let rhs = -(x * ((int(ni + 1) + p.alpha()) * &cur + l_lower(n, p) * &prev));
            r.compare(|| format!("n={n} x={x}"), lhs, rhs);
        }
    }
    Ok(r)
}

/// `p_{n+1} + (gamma_n - x) p_n + delta_n (x - epsilon_n) p_{n-1} = 0` for
/// `n = 1..N-1` at `N + 2` points.
pub fn verify_recurrence_monic(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("monic-recurrence", p.into());
    let points = off_grid_points(p, p.big_n() as usize + 2);
    for n in 1..p.big_n() {
        let rc = recurrence_coefficients(n, p)?;
        for x in &points {
            let lhs = monic_p(n + 1, x, p)?
                + (&rc.gamma - x) * monic_p(n, x, p)?
                + &rc.delta * (x - &rc.epsilon) * monic_p(n - 1, x, p)?;
            r.compare(|| format!("n={n} x={x}"), lhs, Rational::zero());
        }
    }
    Ok(r)
}

/// `A P_n(x+1) + B P_n(x-1) + C P_n(x) = n((N-x) P_n(x+1) + (x-N-alpha-1) P_n(x))`
/// on the grid. Neighbours off the grid are only read when their coefficient
/// is nonzero, which never happens.
pub fn verify_difference_equation(p: &ParameterSet) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("difference-equation", p.into());
    let big_n = p.big_n();
    let big = int(big_n as i64);
    for n in 0..=big_n {
        let f = p_grid(n, p)?;
        let ni = int(n as i64);
        for x in 0..=big_n as usize {
            let xr = int(x as i64);
            let (a, b, c) = (coeff_a(&xr, p), coeff_b(&xr, p), coeff_c(&xr, p));
            let plus_coeff = &big - &xr;
            let up = |coef: &Rational| -> Result<Rational> {
                if coef.is_zero() {
                    Ok(Rational::zero())
                } else if x == big_n as usize {
                    Err(Error::BoundaryLeak(big_n as i64 + 1))
                } else {
                    Ok(coef * &f[x + 1])
                }
            };
            let down = if b.is_zero() {
                Rational::zero()
            } else if x == 0 {
                return Err(Error::BoundaryLeak(-1));
            } else {
                &b * &f[x - 1]
            };
            let lhs = up(&a)? + down + &c * &f[x];
            let rhs = &ni * (up(&plus_coeff)? + (&xr - &big - p.alpha() - int(1)) * &f[x]);
            r.compare(|| format!("n={n} x={x}"), lhs, rhs);
        }
    }
    Ok(r)
}

/// The operators `L`, `M`, `Y` map `P_n(alpha, beta)` to multiples of
/// `P_n(alpha+1, beta-1)`, and the contiguity relation
/// `K P_n(alpha+1, beta-1) = (n+alpha+1) P_n + n(alpha+beta+n)/(1-beta-n) P_{n-1}`
/// with `K = (alpha+1)(1-beta)/(1-beta-n)`. The contiguity relation is also
/// checked off the grid.
pub fn verify_parameter_shift(p: &ParameterSet) -> Result<IdentityReport> {
    let shifted = p.shifted()?;
    let mut r = IdentityReport::new("parameter-shift", p.into());
    let (l, m, y) = (make_l(p)?, make_m(p)?, make_y(p)?);
    for n in 0..=p.big_n() {
        let k = shift_factor(n, p);
        let ni = int(n as i64);
        let cur = p_grid(n, p)?;
        let target = p_grid(n, &shifted)?.scale(&-&k);
        let (lp, mp, yp) = (l.apply(&cur)?, m.apply(&cur)?, y.apply(&cur)?);
        for x in 0..=p.big_n() as usize {
            let xr = int(x as i64);
            r.compare(
                || format!("L n={n} x={x}"),
                lp[x].clone(),
                target[x].clone(),
            );
            r.compare(|| format!("M n={n} x={x}"), mp[x].clone(), &ni * &target[x]);
            r.compare(|| format!("Y n={n} x={x}"), yp[x].clone(), &xr * &target[x]);
        }
        let points = (0..=p.big_n())
            .map(|x| int(x as i64))
            .chain(off_grid_points(p, 5));
        for x in points {
            let lhs = &k * p_value(n, &x, &shifted)?;
            let rhs = (&ni + p.alpha() + int(1)) * p_value(n, &x, p)?
                + l_lower(n, p) * p_at_or_zero(n as i64 - 1, &x, p)?;
            r.compare(|| format!("contiguity n={n} x={x}"), lhs, rhs);
        }
    }
    Ok(r)
}

/// `(-1)^n (1-beta-n)_n / (alpha+1)_n * askey_P(n, x)`.
pub fn askey_monic(n: u64, x: &Rational, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let ni = int(n as i64);
    let den = pochhammer(&(alpha + int(1)), n);
    if den.is_zero() {
        return Err(Error::PoleInDenominator(format!("(alpha+1)_{n} vanishes")));
    }
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    Ok(sign * pochhammer(&(int(1) - beta - &ni), n) / den * askey_p(n, x, alpha, beta)?)
}

/// `p_{n+1} - ((n+beta)/(n+alpha+1) + x) p_n + x n(n+alpha+beta)/((n+alpha)(n+alpha+1)) p_{n-1} = 0`
/// for `n = 0..=n_max` at each sample.
pub fn verify_askey_recurrence(
    alpha: &Rational,
    beta: &Rational,
    n_max: u64,
    samples: &[Rational],
) -> Result<IdentityReport> {
    let mut r = IdentityReport::new("askey-recurrence", ReportParams::None {});
    for n in 0..=n_max {
        let ni = int(n as i64);
        let mid_den = &ni + alpha + int(1);
        if mid_den.is_zero() || (n > 0 && (&ni + alpha).is_zero()) {
            return Err(Error::PoleInDenominator(format!(
                "alpha + n vanishes near n = {n}"
            )));
        }
        let low_coeff = if n == 0 {
            Rational::zero()
        } else {
            &ni * (&ni + alpha + beta) / ((&ni + alpha) * &mid_den)
        };
        for x in samples {
            let prev = if n == 0 {
                Rational::zero()
            } else {
                askey_monic(n - 1, x, alpha, beta)?
            };
            let lhs = askey_monic(n + 1, x, alpha, beta)?
                - ((&ni + beta) / &mid_den + x) * askey_monic(n, x, alpha, beta)?
                + x * &low_coeff * prev;
            r.compare(|| format!("n={n} x={x}"), lhs, Rational::zero());
        }
    }
    Ok(r)
}
