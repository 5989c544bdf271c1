//! The polynomial basis `phi_n(x) = (-x)_n` and the rational basis
//! `rho_n(x) = (-x)_n / (1+beta-x)_n`.
//!
//! Both vanish at the grid points `x < n`, so expanding a grid function onto
//! either one is a forward substitution over `x`.

use num::Zero;

use super::function::GridFunction;
use crate::error::{Error, Result};
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{int, Rational};
use crate::kernel::ParameterSet;

/// `(-x)_n` at any rational `x`.
pub fn phi_value(n: u64, x: &Rational) -> Rational {
    pochhammer(&-x, n)
}

/// `(-x)_n / (1+beta-x)_n` at any rational `x`.
pub fn rho_value(n: u64, x: &Rational, beta: &Rational) -> Result<Rational> {
    let den = pochhammer(&(int(1) + beta - x), n);
    if den.is_zero() {
        return Err(Error::PoleInDenominator(format!(
            "(1+beta-x)_{n} vanishes at x = {x}"
        )));
    }
    Ok(phi_value(n, x) / den)
}

pub fn phi_basis(n: u64, big_n: u64) -> Result<GridFunction> {
    if n > big_n {
        return Err(Error::IndexOutOfRange {
            index: n as usize,
            max: big_n as usize,
        });
    }
    Ok(GridFunction::from_fn(big_n, |x| {
        phi_value(n, &int(x as i64))
    }))
}

pub fn rho_basis(n: u64, p: &ParameterSet) -> Result<GridFunction> {
    p.check_degree(n)?;
    GridFunction::try_from_fn(p.big_n(), |x| rho_value(n, &int(x as i64), p.beta()))
}

/// Coefficients `a_k` with `f = sum_k a_k b_k`, for a basis whose `k`-th
/// member vanishes at `x < k` and not at `x = k`.
pub fn expand_triangular(f: &GridFunction, basis: &[GridFunction]) -> Result<Vec<Rational>> {
    let len = f.len();
    if basis.len() != len {
        return Err(Error::DimensionMismatch {
            expected: len,
            actual: basis.len(),
        });
    }
    let mut coeffs: Vec<Rational> = Vec::with_capacity(len);
    for x in 0..len {
        let mut rest = f[x].clone();
        for (k, c) in coeffs.iter().enumerate() {
            rest -= c * &basis[k][x];
        }
        let pivot = &basis[x][x];
        if pivot.is_zero() {
            return Err(Error::ZeroDivisor(format!(
                "basis member {x} vanishes at x = {x}"
            )));
        }
        coeffs.push(rest / pivot);
    }
    Ok(coeffs)
}

pub fn phi_family(big_n: u64) -> Vec<GridFunction> {
    (0..=big_n)
        .map(|n| phi_basis(n, big_n).expect("n <= N"))
        .collect()
}

pub fn rho_family(p: &ParameterSet) -> Result<Vec<GridFunction>> {
    (0..=p.big_n()).map(|n| rho_basis(n, p)).collect()
}

pub fn expand_in_phi(f: &GridFunction) -> Result<Vec<Rational>> {
    expand_triangular(f, &phi_family(f.big_n()))
}

pub fn expand_in_rho(f: &GridFunction, p: &ParameterSet) -> Result<Vec<Rational>> {
    expand_triangular(f, &rho_family(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;
    use crate::sampling::random_grid_function;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn first_members() {
        let p = ParameterSet::new(int(1), rat(1, 2), 2).unwrap();
        assert_eq!(phi_basis(0, 2).unwrap(), GridFunction::constant(2, int(1)));
        assert_eq!(rho_basis(0, &p).unwrap(), GridFunction::constant(2, int(1)));
        assert_eq!(
            phi_basis(1, 2).unwrap().values(),
            &[int(0), int(-1), int(-2)]
        );
        assert_eq!(rho_basis(1, &p).unwrap()[1], int(-2));
    }

    #[test]
    fn expansions_reconstruct() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = ParameterSet::new(rat(1, 3), rat(2, 5), 6).unwrap();
        for _ in 0..5 {
            let f = random_grid_function(&mut rng, 6);
            let a = expand_in_phi(&f).unwrap();
            assert_eq!(GridFunction::combination(&a, &phi_family(6)).unwrap(), f);
            let b = expand_in_rho(&f, &p).unwrap();
            assert_eq!(
                GridFunction::combination(&b, &rho_family(&p).unwrap()).unwrap(),
                f
            );
        }
    }
}
