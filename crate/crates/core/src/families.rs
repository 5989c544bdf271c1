//! Closed-form evaluation of the polynomial family `P_n`, its rational partners
//! `V_n`, the classical Hahn polynomials, the monic renormalisation and the
//! continuous Askey limit.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gevp::solve_p_coefficients;
use crate::grid::GridFunction;
use crate::kernel::hypergeometric::hyp_terminating;
use crate::kernel::linalg::{mul_linear, solve};
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{int, serde_str, Rational};
use crate::kernel::{HahnParameterSet, ParameterSet};

/// `P_n(x) = 3F2(-n, -x, alpha+1; -N, 1-beta-n; 1)` at any rational `x`.
pub fn p_value(n: u64, x: &Rational, p: &ParameterSet) -> Result<Rational> {
    p.check_degree(n)?;
    let ni = int(n as i64);
    hyp_terminating(
        &[-&ni, -x, p.alpha() + int(1)],
        &[int(-(p.big_n() as i64)), int(1) - p.beta() - &ni],
        &Rational::one(),
    )
}

/// `V_n(x) = 3F2(-n, -x, -alpha-N; -N, 1+beta-x; 1)`.
pub fn v_value(n: u64, x: &Rational, p: &ParameterSet) -> Result<Rational> {
    p.check_degree(n)?;
    let big = int(p.big_n() as i64);
    hyp_terminating(
        &[-int(n as i64), -x, -p.alpha() - &big],
        &[-big, int(1) + p.beta() - x],
        &Rational::one(),
    )
}

/// `H_n(x) = 3F2(-n, -x, n+xi+eta+1; -N, xi+1; 1)`.
pub fn hahn_value(n: u64, x: &Rational, hp: &HahnParameterSet) -> Result<Rational> {
    hp.check_degree(n)?;
    let ni = int(n as i64);
    hyp_terminating(
        &[-&ni, -x, &ni + hp.xi() + hp.eta() + int(1)],
        &[int(-(hp.big_n() as i64)), hp.xi() + int(1)],
        &Rational::one(),
    )
}

pub fn p_grid(n: u64, p: &ParameterSet) -> Result<GridFunction> {
    GridFunction::try_from_fn(p.big_n(), |x| p_value(n, &int(x as i64), p))
}

pub fn v_grid(n: u64, p: &ParameterSet) -> Result<GridFunction> {
    GridFunction::try_from_fn(p.big_n(), |x| v_value(n, &int(x as i64), p))
}

pub fn hahn_grid(n: u64, hp: &HahnParameterSet) -> Result<GridFunction> {
    GridFunction::try_from_fn(hp.big_n(), |x| hahn_value(n, &int(x as i64), hp))
}

/// Coefficients of `P_n` in powers of `x`, lowest degree first.
pub fn p_monomial_coeffs(n: u64, p: &ParameterSet) -> Result<Vec<Rational>> {
    let c = solve_p_coefficients(n, p)?.coefficients;
    let mut out = vec![Rational::zero(); n as usize + 1];
    // (-x)_k = prod_{j<k} (j - x)
    let mut falling = vec![Rational::one()];
    for (k, ck) in c.iter().enumerate().take(n as usize + 1) {
        for (o, a) in out.iter_mut().zip(&falling) {
            *o += ck * a;
        }
        falling = mul_linear(&falling, &-int(k as i64))
            .into_iter()
            .map(|v| -v)
            .collect();
    }
    Ok(out)
}

/// `mu_n = (-N)_n (1-beta-n)_n / (alpha+1)_n`, making `mu_n P_n` monic.
pub fn monic_mu(n: u64, p: &ParameterSet) -> Result<Rational> {
    p.check_degree(n)?;
    let ni = int(n as i64);
    let num = pochhammer(&int(-(p.big_n() as i64)), n) * pochhammer(&(int(1) - p.beta() - &ni), n);
    Ok(num / pochhammer(&(p.alpha() + int(1)), n))
}

pub fn monic_p(n: u64, x: &Rational, p: &ParameterSet) -> Result<Rational> {
    Ok(monic_mu(n, p)? * p_value(n, x, p)?)
}

/// `2F1(-n, alpha+1; 1-beta-n; x)`.
pub fn askey_p(n: u64, x: &Rational, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let ni = int(n as i64);
    hyp_terminating(&[-&ni, alpha + int(1)], &[int(1) - beta - &ni], x)
}

/// `|P_n(N x; alpha, beta, N) - askey_P(n, x)|` for each `N` in `sizes`.
pub fn askey_limit_deltas(
    n: u64,
    x: &Rational,
    alpha: &Rational,
    beta: &Rational,
    sizes: &[u64],
) -> Result<Vec<Rational>> {
    let target = askey_p(n, x, alpha, beta)?;
    sizes
        .iter()
        .map(|&big_n| {
            let p = ParameterSet::new(alpha.clone(), beta.clone(), big_n)?;
            let at = p_value(n, &(x * int(big_n as i64)), &p)?;
            Ok((at - &target).abs())
        })
        .collect()
}

/// A sequence of errors is accepted as converging at rate `O(1/N)` under
/// doubling when it is identically zero (exact agreement) or strictly
/// decreasing with every consecutive ratio in `[1/4, 3/4]`.
pub fn converges_under_doubling(deltas: &[Rational]) -> bool {
    if deltas.iter().all(Zero::is_zero) {
        return true;
    }
    let (lo, hi) = (
        Rational::new(1.into(), 4.into()),
        Rational::new(3.into(), 4.into()),
    );
    deltas.windows(2).all(|w| {
        !w[0].is_zero() && w[1] < w[0] && {
            let r = &w[1] / &w[0];
            r >= lo && r <= hi
        }
    })
}

/// Coefficients `u_k` with `f(x) = sum_{k<=n} u_k / (1+beta-x)_k` on the grid,
/// fitted on `x = 0..=n` and then checked at the remaining grid points.
pub fn expand_in_rational_monomials(
    f: &GridFunction,
    n: u64,
    beta: &Rational,
) -> Result<Vec<Rational>> {
    let big_n = f.big_n();
    if n > big_n {
        return Err(Error::IndexOutOfRange {
            index: n as usize,
            max: big_n as usize,
        });
    }
    let monomial = |k: u64, x: u64| -> Result<Rational> {
        let d = pochhammer(&(int(1) + beta - int(x as i64)), k);
        if d.is_zero() {
            return Err(Error::PoleInDenominator(format!(
                "(1+beta-x)_{k} vanishes at x = {x}"
            )));
        }
        Ok(d.recip())
    };
    let rows = (0..=n)
        .map(|x| (0..=n).map(|k| monomial(k, x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let rhs = (0..=n as usize).map(|x| f[x].clone()).collect();
    let u = solve(rows, rhs)?;
    for x in 0..=big_n {
        let mut acc = Rational::zero();
        for (k, uk) in u.iter().enumerate() {
            acc += uk * monomial(k as u64, x)?;
        }
        if acc != f[x as usize] {
            return Err(Error::Inconsistent(format!(
                "degree-{n} rational-monomial fit misses the value at x = {x}"
            )));
        }
    }
    Ok(u)
}

pub fn expand_rho_in_rational_monomials(n: u64, p: &ParameterSet) -> Result<Vec<Rational>> {
    expand_in_rational_monomials(&crate::grid::rho_basis(n, p)?, n, p.beta())
}

pub fn expand_v_in_rational_monomials(n: u64, p: &ParameterSet) -> Result<Vec<Rational>> {
    expand_in_rational_monomials(&v_grid(n, p)?, n, p.beta())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    P,
    V,
    Hahn,
    Monic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyParams {
    Biorthogonal(ParameterSet),
    Hahn(HahnParameterSet),
}

/// Entry `(n, x)` is family member `n` at grid point `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTable {
    pub family: Family,
    pub params: FamilyParams,
    #[serde(with = "serde_str::matrix")]
    pub values: Vec<Vec<Rational>>,
}

impl FamilyTable {
    pub fn build(family: Family, p: &ParameterSet) -> Result<Self> {
        let values = (0..=p.big_n())
            .map(|n| {
                let row = match family {
                    Family::P => p_grid(n, p)?,
                    Family::V => v_grid(n, p)?,
                    Family::Monic => p_grid(n, p)?.scale(&monic_mu(n, p)?),
                    Family::Hahn => {
                        return Err(Error::InvalidParameters(
                            "hahn tables need (xi, eta, N)".into(),
                        ))
                    }
                };
                Ok(row.into_values())
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            family,
            params: FamilyParams::Biorthogonal(p.clone()),
            values,
        })
    }

    pub fn build_hahn(hp: &HahnParameterSet) -> Result<Self> {
        let top = hp.max_degree().min(hp.big_n());
        let values = (0..=top)
            .map(|n| Ok(hahn_grid(n, hp)?.into_values()))
            .collect::<Result<_>>()?;
        Ok(Self {
            family: Family::Hahn,
            params: FamilyParams::Hahn(hp.clone()),
            values,
        })
    }

    /// Header `n, x=0, ..., x=N` followed by one row per degree.
    pub fn csv_records(&self) -> Vec<Vec<String>> {
        let width = self.values.first().map_or(0, Vec::len);
        let mut header = vec!["n".to_string()];
        header.extend((0..width).map(|x| x.to_string()));
        let mut out = vec![header];
        for (n, row) in self.values.iter().enumerate() {
            let mut rec = vec![n.to_string()];
            rec.extend(row.iter().map(ToString::to_string));
            out.push(rec);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::linalg::{degree, eval_poly};
    use crate::kernel::rational::rat;
    use crate::sampling::{random_parameter_set, random_rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p2() -> ParameterSet {
        ParameterSet::new(int(1), rat(1, 2), 2).unwrap()
    }

    #[test]
    fn small_values() {
        let p = p2();
        assert_eq!(p_value(1, &int(1), &p).unwrap(), int(3));
        assert_eq!(p_value(1, &int(2), &p).unwrap(), int(5));
        assert_eq!(v_value(1, &int(1), &p).unwrap(), int(4));
        assert_eq!(v_value(1, &int(2), &p).unwrap(), int(-5));
        for n in 0..=2 {
            assert_eq!(p_value(n, &int(0), &p).unwrap(), int(1));
            assert_eq!(v_value(n, &int(0), &p).unwrap(), int(1));
        }
        assert_eq!(p_value(0, &rat(7, 3), &p).unwrap(), int(1));
    }

    #[test]
    fn monomial_coefficients_and_degree() {
        let p = p2();
        assert_eq!(p_monomial_coeffs(1, &p).unwrap(), vec![int(1), int(2)]);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for big_n in 1..7 {
            let p = random_parameter_set(&mut rng, big_n);
            for n in 0..=big_n {
                let c = p_monomial_coeffs(n, &p).unwrap();
                assert_eq!(degree(&c), Some(n as usize));
                let x = random_rational(&mut rng);
                assert_eq!(eval_poly(&c, &x), p_value(n, &x, &p).unwrap());
                let mu = monic_mu(n, &p).unwrap();
                assert_eq!(&c[n as usize] * mu, int(1));
            }
        }
    }

    #[test]
    fn monic_example() {
        let p = p2();
        assert_eq!(monic_mu(0, &p).unwrap(), int(1));
        assert_eq!(monic_mu(1, &p).unwrap(), rat(1, 2));
        assert_eq!(monic_p(1, &int(3), &p).unwrap(), rat(7, 2));
    }

    #[test]
    fn hahn_matches_glued_family() {
        let p = p2();
        for n in 0..=2 {
            let hp = HahnParameterSet::glued(&p, n).unwrap();
            assert_eq!(hahn_grid(n, &hp).unwrap(), p_grid(n, &p).unwrap());
        }
    }

    #[test]
    fn askey_values() {
        let (a, b) = (int(1), rat(1, 2));
        assert_eq!(askey_p(0, &rat(2, 3), &a, &b).unwrap(), int(1));
        assert_eq!(askey_p(3, &int(0), &a, &b).unwrap(), int(1));
        assert_eq!(askey_p(1, &int(1), &a, &b).unwrap(), int(5));
    }

    #[test]
    fn askey_limit_rate() {
        let sizes = [8, 16, 32, 64];
        for n in 0..=4 {
            let d = askey_limit_deltas(n, &rat(1, 3), &int(1), &rat(1, 2), &sizes).unwrap();
            assert!(converges_under_doubling(&d), "n={n} {d:?}");
        }
        assert!(!converges_under_doubling(&[int(1), int(1)]));
        assert!(!converges_under_doubling(&[int(1), rat(1, 10)]));
    }

    #[test]
    fn rational_monomial_tops() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..3 {
            let p = random_parameter_set(&mut rng, 5);
            for n in 0..=5 {
                let top = pochhammer(&(-p.beta() - int(n as i64)), n);
                let u = expand_rho_in_rational_monomials(n, &p).unwrap();
                assert_eq!(u[n as usize], top);
                let d = crate::gevp::solve_v_coefficients(n, &p)
                    .unwrap()
                    .coefficients;
                let uv = expand_v_in_rational_monomials(n, &p).unwrap();
                assert_eq!(uv[n as usize], &d[n as usize] * top);
            }
        }
        assert_eq!(
            expand_v_in_rational_monomials(0, &p2()).unwrap(),
            vec![int(1)]
        );
    }

    #[test]
    fn table_rows() {
        let t = FamilyTable::build(Family::P, &p2()).unwrap();
        let recs = t.csv_records();
        assert_eq!(recs[0], vec!["n", "0", "1", "2"]);
        assert_eq!(recs[1], vec!["0", "1", "1", "1"]);
        assert_eq!(recs[2], vec!["1", "1", "3", "5"]);
    }
}
