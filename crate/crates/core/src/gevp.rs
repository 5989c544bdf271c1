//! The pencil `M P = lambda L P` in the `phi` basis and the eigenvalue problem
//! `Z* V = n V` in the `rho` basis, both solved by two-term recurrences.
//!
//! Every solve also evaluates the closed-form coefficients and fails with
//! [`Error::Inconsistent`] if the two disagree.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::p_grid;
use crate::grid::matrix::phi_coeffs;
use crate::grid::{make_l, make_m, matrix_in_rho_basis, BasisTag, GridFunction, RhoOperator};
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{factorial, int, serde_str, Rational};
use crate::kernel::ParameterSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GEVPSolution {
    pub n: u64,
    #[serde(with = "serde_str")]
    pub eigenvalue: Rational,
    pub basis_tag: BasisTag,
    /// Length `N + 1`, normalised so the first entry is one.
    #[serde(with = "serde_str::vec")]
    pub coefficients: Vec<Rational>,
}

/// Ratios of the diagonals of the two bidiagonal matrices; always `0..=N`.
pub fn bidiagonal_gevp_eigenvalues(p: &ParameterSet) -> Vec<Rational> {
    (0..=p.big_n())
        .map(|n| phi_coeffs::m_diag(n, p) / phi_coeffs::l_diag(n, p))
        .collect()
}

/// `(-n)_k (alpha+1)_k / (k! (-N)_k (1-beta-n)_k)`.
pub fn p_coefficient_closed(n: u64, k: u64, p: &ParameterSet) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let ni = int(n as i64);
    let num = pochhammer(&-&ni, k) * pochhammer(&(p.alpha() + int(1)), k);
    let den = factorial(k)
        * pochhammer(&int(-(p.big_n() as i64)), k)
        * pochhammer(&(int(1) - p.beta() - &ni), k);
    num / den
}

/// `(-n)_k (-alpha-N)_k / (k! (-N)_k)`.
pub fn v_coefficient_closed(n: u64, k: u64, p: &ParameterSet) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let big = int(p.big_n() as i64);
    let num = pochhammer(&-int(n as i64), k) * pochhammer(&(-p.alpha() - &big), k);
    num / (factorial(k) * pochhammer(&-big, k))
}

fn cross_check(
    n: u64,
    tag: BasisTag,
    recurrence: Vec<Rational>,
    closed: impl Fn(u64) -> Rational,
) -> Result<GEVPSolution> {
    for (k, c) in recurrence.iter().enumerate() {
        if *c != closed(k as u64) {
            return Err(Error::Inconsistent(format!(
                "{tag} coefficient {k} of degree {n}: recurrence gives {c}, closed form {}",
                closed(k as u64)
            )));
        }
    }
    Ok(GEVPSolution {
        n,
        eigenvalue: int(n as i64),
        basis_tag: tag,
        coefficients: recurrence,
    })
}

/// Solves `(k+1)(k-N)(k+1-beta-n) c_{k+1} = (k-n)(k+alpha+1) c_k`, `c_0 = 1`.
pub fn solve_p_coefficients(n: u64, p: &ParameterSet) -> Result<GEVPSolution> {
    p.check_degree(n)?;
    let big = p.big_n() as i64;
    let mut c = vec![Rational::one()];
    for k in 0..big {
        let next = if k as u64 >= n {
            Rational::zero()
        } else {
            let kk = int(k);
            let num = (&kk - int(n as i64)) * (&kk + p.alpha() + int(1));
            let den = int((k + 1) * (k - big)) * (&kk + int(1) - p.beta() - int(n as i64));
            num * &c[k as usize] / den
        };
        c.push(next);
    }
    cross_check(n, BasisTag::Phi, c, |k| p_coefficient_closed(n, k, p))
}

/// Solves `(k-n) d_k = (k+1)(k-N)/(k-alpha-N) d_{k+1}`, `d_0 = 1`.
pub fn solve_v_coefficients(n: u64, p: &ParameterSet) -> Result<GEVPSolution> {
    p.check_degree(n)?;
    let big = p.big_n() as i64;
    let mut d = vec![Rational::one()];
    for k in 0..big {
        let kk = int(k);
        let num = (&kk - int(n as i64)) * (&kk - p.alpha() - int(big));
        let den = int((k + 1) * (k - big));
        d.push(num * &d[k as usize] / den);
    }
    cross_check(n, BasisTag::Rho, d, |k| v_coefficient_closed(n, k, p))
}

/// `M P_n - n L P_n` on the grid.
pub fn gevp_residual(n: u64, p: &ParameterSet) -> Result<GridFunction> {
    let pn = p_grid(n, p)?;
    let mp = make_m(p)?.apply(&pn)?;
    let lp = make_l(p)?.apply(&pn)?;
    mp.sub(&lp.scale(&int(n as i64)))
}

/// `rho`-coefficients of the adjoint eigenfunction `u` with `L* u = V_n`,
/// by forward substitution through the lower bidiagonal `L*`.
pub fn adjoint_eigenfunction_coefficients(n: u64, p: &ParameterSet) -> Result<Vec<Rational>> {
    let d = solve_v_coefficients(n, p)?.coefficients;
    let ls = matrix_in_rho_basis(RhoOperator::LStar, p);
    let mut u: Vec<Rational> = Vec::with_capacity(d.len());
    for (k, dk) in d.iter().enumerate() {
        let mut rest = dk.clone();
        if k > 0 {
            rest -= ls.get(k, k - 1) * &u[k - 1];
        }
        let diag = ls.get(k, k);
        if diag.is_zero() {
            return Err(Error::ZeroDivisor(format!("L* diagonal vanishes at {k}")));
        }
        u.push(rest / diag);
    }
    Ok(u)
}

/// `(M* - n L*) u` with `u` the adjoint eigenfunction of degree `n`.
pub fn adjoint_gevp_residual(n: u64, p: &ParameterSet) -> Result<Vec<Rational>> {
    let u = adjoint_eigenfunction_coefficients(n, p)?;
    let ms = matrix_in_rho_basis(RhoOperator::MStar, p);
    let ls = matrix_in_rho_basis(RhoOperator::LStar, p);
    ms.sub_scaled(&ls, &int(n as i64))?.mul_vec(&u)
}

/// `Z* d - n d`.
pub fn adjoint_eigen_residual(n: u64, p: &ParameterSet) -> Result<Vec<Rational>> {
    let d = solve_v_coefficients(n, p)?.coefficients;
    let zd = matrix_in_rho_basis(RhoOperator::ZStar, p).mul_vec(&d)?;
    let ni = int(n as i64);
    Ok(zd.iter().zip(&d).map(|(a, b)| a - b * &ni).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::v_grid;
    use crate::grid::{phi_basis, rho_basis};
    use crate::kernel::rational::rat;
    use crate::sampling::random_parameter_set;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p2() -> ParameterSet {
        ParameterSet::new(int(1), rat(1, 2), 2).unwrap()
    }

    #[test]
    fn eigenvalues_are_degrees() {
        let p = ParameterSet::new(rat(1, 3), rat(2, 5), 5).unwrap();
        assert_eq!(
            bidiagonal_gevp_eigenvalues(&p),
            (0..=5).map(int).collect::<Vec<_>>()
        );
    }

    #[test]
    fn small_coefficients() {
        let p = p2();
        assert_eq!(
            solve_p_coefficients(0, &p).unwrap().coefficients,
            vec![int(1), int(0), int(0)]
        );
        assert_eq!(
            solve_p_coefficients(1, &p).unwrap().coefficients[1],
            int(-2)
        );
        assert_eq!(
            solve_v_coefficients(0, &p).unwrap().coefficients,
            vec![int(1), int(0), int(0)]
        );
        assert_eq!(
            solve_v_coefficients(1, &p).unwrap().coefficients[1],
            rat(-3, 2)
        );
    }

    #[test]
    fn residuals_vanish_and_families_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for big_n in [1, 3, 6] {
            let p = random_parameter_set(&mut rng, big_n);
            let phis: Vec<_> = (0..=big_n).map(|k| phi_basis(k, big_n).unwrap()).collect();
            let rhos: Vec<_> = (0..=big_n).map(|k| rho_basis(k, &p).unwrap()).collect();
            for n in 0..=big_n {
                assert!(gevp_residual(n, &p).unwrap().is_zero());
                assert!(adjoint_gevp_residual(n, &p)
                    .unwrap()
                    .iter()
                    .all(Zero::is_zero));
                assert!(adjoint_eigen_residual(n, &p)
                    .unwrap()
                    .iter()
                    .all(Zero::is_zero));
                let c = solve_p_coefficients(n, &p).unwrap().coefficients;
                assert_eq!(
                    GridFunction::combination(&c, &phis).unwrap(),
                    p_grid(n, &p).unwrap()
                );
                let d = solve_v_coefficients(n, &p).unwrap().coefficients;
                assert_eq!(
                    GridFunction::combination(&d, &rhos).unwrap(),
                    v_grid(n, &p).unwrap()
                );
            }
        }
    }

    #[test]
    fn integer_beta_at_the_top_of_the_range() {
        // beta = N makes (k+1-beta) vanish at k = N-1 for n = 0, past the support
        let p = ParameterSet::new(rat(1, 2), int(1), 1).unwrap();
        assert_eq!(
            solve_p_coefficients(0, &p).unwrap().coefficients,
            vec![int(1), int(0)]
        );
    }

    #[test]
    fn json_shape() {
        let s = solve_p_coefficients(1, &p2()).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["basis_tag"], "phi");
        assert_eq!(v["eigenvalue"], "1");
        assert_eq!(v["coefficients"][1], "-2");
    }
}
