use std::ops::Index;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::rational::{int, serde_str, Rational};

/// Values `f(0), ..., f(N)` on the linear grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GridFunction {
    #[serde(with = "serde_str::vec")]
    values: Vec<Rational>,
}

impl GridFunction {
    /// Wraps values for a grid of size `N`; requires exactly `N + 1` entries.
    pub fn new(values: Vec<Rational>, big_n: u64) -> Result<Self> {
        let expected = big_n as usize + 1;
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: values.len(),
            });
        }
        Ok(Self { values })
    }

    pub fn from_fn(big_n: u64, mut f: impl FnMut(u64) -> Rational) -> Self {
        Self {
            values: (0..=big_n).map(&mut f).collect(),
        }
    }

    pub fn try_from_fn(big_n: u64, mut f: impl FnMut(u64) -> Result<Rational>) -> Result<Self> {
        Ok(Self {
            values: (0..=big_n).map(&mut f).collect::<Result<_>>()?,
        })
    }

    pub fn constant(big_n: u64, c: Rational) -> Self {
        Self {
            values: vec![c; big_n as usize + 1],
        }
    }

    pub fn zeros(big_n: u64) -> Self {
        Self::constant(big_n, Rational::zero())
    }

    pub fn big_n(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            Err(Error::DimensionMismatch {
                expected: self.len(),
                actual: other.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Pointwise product with `x`.
    pub fn times_x(&self) -> Self {
        Self {
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(x, v)| v * int(x as i64))
                .collect(),
        }
    }

    /// `sum_x f(x) g(x)`, unweighted.
    pub fn dot(&self, other: &Self) -> Result<Rational> {
        self.check_len(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Linear combination `sum_k c_k f_k`.
    pub fn combination(coeffs: &[Rational], basis: &[GridFunction]) -> Result<Self> {
        let first = basis.first().ok_or(Error::DimensionMismatch {
            expected: 1,
            actual: 0,
        })?;
        if coeffs.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                actual: coeffs.len(),
            });
        }
        let mut acc = Self::zeros(first.big_n());
        for (c, f) in coeffs.iter().zip(basis) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c))?;
            }
        }
        Ok(acc)
    }
}

impl Index<usize> for GridFunction {
    type Output = Rational;

    fn index(&self, x: usize) -> &Rational {
        &self.values[x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;

    #[test]
    fn length_is_enforced() {
        assert!(GridFunction::new(vec![int(1); 3], 2).is_ok());
        assert!(GridFunction::new(vec![int(1); 2], 2).is_err());
        let f = GridFunction::zeros(2);
        let g = GridFunction::zeros(3);
        assert!(f.add(&g).is_err());
    }

    #[test]
    fn arithmetic() {
        let f = GridFunction::from_fn(2, |x| int(x as i64));
        let g = GridFunction::constant(2, rat(1, 2));
        assert_eq!(
            f.add(&g).unwrap().values(),
            &[rat(1, 2), rat(3, 2), rat(5, 2)]
        );
        assert_eq!(f.times_x().values(), &[int(0), int(1), int(4)]);
        assert_eq!(f.dot(&g).unwrap(), rat(3, 2));
    }
}
