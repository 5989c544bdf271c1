//! The Christoffel transform from Hahn parameter `xi - 1` to `xi`, its
//! Christoffel-Darboux form, and the summed identity that produces the
//! biorthogonality norm.

use num::Zero;

use crate::error::{Error, Result};
use crate::families::hahn_value;
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{factorial, int, rat, Rational};
use crate::kernel::{HahnParameterSet, ParameterSet};
use crate::report::IdentityReport;

use super::gram::rational_moment_sum;
use super::hahn::{hahn_kappa, hahn_norm, hahn_weight};

fn nonzero(v: Rational, what: impl FnOnce() -> String) -> Result<Rational> {
    if v.is_zero() {
        Err(Error::ZeroDivisor(what()))
    } else {
        Ok(v)
    }
}

fn off_grid_points() -> Vec<Rational> {
    vec![rat(1, 3), rat(-2, 7), rat(7, 5), rat(11, 2)]
}

/// Checks, for degree `n < N` and the parameters `hp` (at `xi`):
///
/// - the Christoffel transform `H_n(x; xi) = k'/k * (H_{n+1}(x; xi-1) - W_n H_n(x; xi-1)) / (x + xi)`
/// - its Christoffel-Darboux expansion over `H_k(x; xi-1)`, `k <= n`
/// - the summed identity `sum_x w^H_x(xi-1) H_n(x; xi) = kappa_n(xi-1)/kappa_n(xi) h^H_n(xi-1) / H_n(-xi; xi-1)`
///
/// The transform is checked on the grid and at a few off-grid points; points
/// with `x + xi = 0` are skipped. A vanishing `H_n(-xi; xi-1)` is reported as
/// [`Error::ZeroDivisor`].
pub fn christoffel_chain_check(n: u64, hp: &HahnParameterSet) -> Result<IdentityReport> {
    let big_n = hp.big_n();
    if n >= big_n {
        return Err(Error::IndexOutOfRange {
            index: n as usize,
            max: big_n.saturating_sub(1) as usize,
        });
    }
    hp.check_degree(n)?;
    let low = hp.lowered(n + 1)?;
    let xi = hp.xi().clone();
    let at = -&xi;
    let mut r = IdentityReport::new("christoffel-chain", hp.into());

    let hn_at = nonzero(hahn_value(n, &at, &low)?, || {
        format!(
            "H_{n}(-xi; xi-1) vanishes for xi = {xi}, eta = {}",
            hp.eta()
        )
    })?;
    let w_n = hahn_value(n + 1, &at, &low)? / &hn_at;
    let kappa_hi_low = hahn_kappa(n + 1, &low)?;
    let kappa_n_low = hahn_kappa(n, &low)?;
    let kappa_n = nonzero(hahn_kappa(n, hp)?, || format!("kappa_{n}(xi) vanishes"))?;
    let kappa_hi_low_nz = nonzero(kappa_hi_low.clone(), || {
        format!("kappa_{}(xi-1) vanishes", n + 1)
    })?;

    let h_low_n = hahn_norm(n, &low)?;
    let y = (0..=n)
        .map(|k| {
            let hk = nonzero(hahn_norm(k, &low)?, || format!("h^H_{k}(xi-1) vanishes"))?;
            Ok(&h_low_n * hahn_value(k, &at, &low)? / (hk * &hn_at))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut points: Vec<Rational> = (0..=big_n).map(|x| int(x as i64)).collect();
    points.extend(off_grid_points());
    for x in points.iter().filter(|x| !(*x + &xi).is_zero()) {
        let quotient = (hahn_value(n + 1, x, &low)? - &w_n * hahn_value(n, x, &low)?) / (x + &xi);
        let chr = &kappa_hi_low / &kappa_n * &quotient;
        r.compare(|| format!("transform x={x}"), hahn_value(n, x, hp)?, chr);
        let mut darboux = Rational::zero();
        for (k, yk) in y.iter().enumerate() {
            darboux += yk * hahn_value(k as u64, x, &low)?;
        }
        darboux = darboux * &kappa_n_low / &kappa_hi_low_nz;
        r.compare(|| format!("darboux x={x}"), quotient, darboux);
    }

    let mut lhs = Rational::zero();
    for x in 0..=big_n {
        lhs += hahn_weight(x, &low)? * hahn_value(n, &int(x as i64), hp)?;
    }
    let rhs = kappa_n_low / kappa_n * h_low_n / &hn_at;
    r.compare(|| "summed".into(), lhs, rhs);
    Ok(r)
}

/// The chain under `xi = -beta-n`, `eta = alpha+beta`, followed by its
/// specialisations: the closed form of `H_n(-xi; xi-1)`, the rewriting of the
/// summed left side as a rational moment, and the diagonal moment itself.
pub fn christoffel_chain_glued(n: u64, p: &ParameterSet) -> Result<IdentityReport> {
    let hp = HahnParameterSet::glued(p, n)?;
    let mut r = christoffel_chain_check(n, &hp)?;
    r.params = p.into();
    let low = hp.lowered(n + 1)?;
    let big_n = p.big_n();
    let big = int(big_n as i64);

    let closed = pochhammer(&(-&big - p.alpha()), n) / pochhammer(&-&big, n);
    r.compare(
        || "closed H_n(-xi; xi-1)".into(),
        hahn_value(n, &-hp.xi(), &low)?,
        closed,
    );

    let mut lhs = Rational::zero();
    for x in 0..=big_n {
        lhs += hahn_weight(x, &low)? * hahn_value(n, &int(x as i64), &hp)?;
    }
    let moment = rational_moment_sum(n, n, p)?;
    let pre = pochhammer(&(p.alpha() + int(1)), big_n) * pochhammer(&(p.beta() + int(1)), n)
        / factorial(big_n);
    r.compare(|| "summed side as moment".into(), lhs, pre * &moment);

    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let ni = int(n as i64);
    let rhs = sign * pochhammer(&(p.alpha() + p.beta() + int(1)), n) * factorial(n)
        / (pochhammer(p.beta(), n)
            * pochhammer(&(-&big - p.alpha()), n)
            * pochhammer(&(-p.beta() - &ni), n));
    r.compare(|| "diagonal moment".into(), moment, rhs);
    Ok(r)
}
