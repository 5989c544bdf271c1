//! Classical Hahn weights, norms and orthogonality.

use num::Zero;

use crate::error::{Error, Result};
use crate::families::hahn_grid;
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{factorial, int, Rational};
use crate::kernel::HahnParameterSet;
use crate::report::GramReport;

/// `w^H_x = (1+eta)_N / N! * (-N)_x (1+xi)_x / (x! (-eta-N)_x)`.
pub fn hahn_weight(x: u64, hp: &HahnParameterSet) -> Result<Rational> {
    let big_n = hp.big_n();
    if x > big_n {
        return Err(Error::IndexOutOfRange {
            index: x as usize,
            max: big_n as usize,
        });
    }
    let big = int(big_n as i64);
    let pre = pochhammer(&(hp.eta() + int(1)), big_n) / factorial(big_n);
    let num = pochhammer(&-&big, x) * pochhammer(&(hp.xi() + int(1)), x);
    let den = factorial(x) * pochhammer(&(-hp.eta() - &big), x);
    Ok(pre * num / den)
}

pub fn hahn_weights(hp: &HahnParameterSet) -> Result<Vec<Rational>> {
    (0..=hp.big_n()).map(|x| hahn_weight(x, hp)).collect()
}

/// `h^H_n = (-1)^n (n+xi+eta+1)_{N+1} (eta+1)_n n! / ((2n+xi+eta+1) (xi+1)_n (-N)_n N!)`.
///
/// With `c = n+xi+eta+1` the quotient `(c)_{N+1} / (c+n)` is evaluated as the
/// product of `c + j` over `j = 0..=N`, `j != n`, which stays finite when
/// `c + n = 0`.
pub fn hahn_norm(n: u64, hp: &HahnParameterSet) -> Result<Rational> {
    hp.check_degree(n)?;
    let big_n = hp.big_n();
    let c = int(n as i64) + hp.xi() + hp.eta() + int(1);
    let mut cut = Rational::from_integer(1.into());
    for j in (0..=big_n).filter(|&j| j != n) {
        cut *= &c + int(j as i64);
    }
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let num = sign * cut * pochhammer(&(hp.eta() + int(1)), n) * factorial(n);
    let den = pochhammer(&(hp.xi() + int(1)), n)
        * pochhammer(&int(-(big_n as i64)), n)
        * factorial(big_n);
    if den.is_zero() {
        return Err(Error::ZeroDivisor(format!(
            "Hahn norm denominator vanishes at n = {n}"
        )));
    }
    Ok(num / den)
}

/// `kappa_n = (-N)_n (xi+1)_n / (n+xi+eta+1)_n`, the monic renormalisation.
pub fn hahn_kappa(n: u64, hp: &HahnParameterSet) -> Result<Rational> {
    let ni = int(n as i64);
    let den = pochhammer(&(&ni + hp.xi() + hp.eta() + int(1)), n);
    if den.is_zero() {
        return Err(Error::ZeroDivisor(format!(
            "(n+xi+eta+1)_n vanishes at n = {n}, xi = {}, eta = {}",
            hp.xi(),
            hp.eta()
        )));
    }
    Ok(pochhammer(&int(-(hp.big_n() as i64)), n) * pochhammer(&(hp.xi() + int(1)), n) / den)
}

/// Orthogonality matrix over degrees `0..=max_degree`.
pub fn hahn_gram(hp: &HahnParameterSet) -> Result<GramReport> {
    let top = hp.max_degree().min(hp.big_n());
    let w = hahn_weights(hp)?;
    let hs = (0..=top)
        .map(|n| hahn_grid(n, hp))
        .collect::<Result<Vec<_>>>()?;
    let gram = hs
        .iter()
        .map(|hn| {
            hs.iter()
                .map(|hm| {
                    w.iter()
                        .enumerate()
                        .map(|(x, wx)| wx * &hn[x] * &hm[x])
                        .sum()
                })
                .collect()
        })
        .collect();
    let expected = (0..=top)
        .map(|n| hahn_norm(n, hp))
        .collect::<Result<Vec<_>>>()?;
    Ok(GramReport::assemble(hp.into(), gram, expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;

    #[test]
    fn orthogonality_on_a_small_set() {
        let hp = HahnParameterSet::new(rat(1, 3), rat(1, 4), 3).unwrap();
        let r = hahn_gram(&hp).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.gram[1][0].is_zero());
        let total: Rational = hahn_weights(&hp).unwrap().iter().sum();
        assert_eq!(total, hahn_norm(0, &hp).unwrap());
    }

    #[test]
    fn product_form_matches_quotient_form() {
        let hp = HahnParameterSet::new(rat(2, 7), rat(-5, 3), 4).unwrap();
        for n in 0..=4u64 {
            let c = int(n as i64) + hp.xi() + hp.eta() + int(1);
            let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
            let quotient =
                sign * pochhammer(&c, 5) * pochhammer(&(hp.eta() + int(1)), n) * factorial(n)
                    / ((&c + int(n as i64))
                        * pochhammer(&(hp.xi() + int(1)), n)
                        * pochhammer(&int(-4), n)
                        * factorial(4));
            assert_eq!(hahn_norm(n, &hp).unwrap(), quotient);
        }
    }

    #[test]
    fn kappa_makes_monic() {
        use crate::kernel::linalg::solve;
        let hp = HahnParameterSet::new(rat(1, 3), rat(1, 4), 3).unwrap();
        // leading coefficient of H_n from interpolation through x = 0..=n
        for n in 0..=3u64 {
            let rows = (0..=n)
                .map(|x| {
                    (0..=n)
                        .map(|k| num::pow::pow(int(x as i64), k as usize))
                        .collect()
                })
                .collect();
            let rhs = (0..=n)
                .map(|x| crate::families::hahn_value(n, &int(x as i64), &hp).unwrap())
                .collect();
            let coeffs = solve(rows, rhs).unwrap();
            assert_eq!(&coeffs[n as usize] * hahn_kappa(n, &hp).unwrap(), int(1));
        }
    }
}
