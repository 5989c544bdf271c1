use serde::{Deserialize, Serialize};

use super::pochhammer::pochhammer;
use super::rational::{as_integer, int, serde_str, Rational};
use crate::error::{Error, Result};

/// `(alpha, beta, N)` for the R_I Hahn family.
///
/// Validity excludes every integer configuration that puts a zero in some
/// denominator used anywhere in the library:
///
/// - `beta` not an integer in `[-N, N-1]`
/// - `alpha` not an integer in `[-N-1, -1]`
/// - `alpha + beta` not an integer in `[-N, -1]`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSet {
    #[serde(with = "serde_str")]
    alpha: Rational,
    #[serde(with = "serde_str")]
    beta: Rational,
    #[serde(rename = "N")]
    big_n: u64,
}

fn integer_in(r: &Rational, lo: i64, hi: i64) -> bool {
    matches!(as_integer(r), Some(v) if v >= lo && v <= hi)
}

impl ParameterSet {
    pub fn new(alpha: Rational, beta: Rational, big_n: u64) -> Result<Self> {
        if let Some(reason) = Self::violation(&alpha, &beta, big_n) {
            return Err(Error::InvalidParameters(reason));
        }
        Ok(Self { alpha, beta, big_n })
    }

    /// The violated pole condition, if any.
    pub fn violation(alpha: &Rational, beta: &Rational, big_n: u64) -> Option<String> {
        let n = big_n as i64;
        if integer_in(beta, -n, n - 1) {
            return Some(format!(
                "beta = {beta} is an integer in [-N, N-1] = [{}, {}]",
                -n,
                n - 1
            ));
        }
        if integer_in(alpha, -n - 1, -1) {
            return Some(format!(
                "alpha = {alpha} is an integer in [-N-1, -1] = [{}, -1]",
                -n - 1
            ));
        }
        let sum = alpha + beta;
        if integer_in(&sum, -n, -1) {
            return Some(format!(
                "alpha + beta = {sum} is an integer in [-N, -1] = [{}, -1]",
                -n
            ));
        }
        None
    }

    pub fn is_valid(alpha: &Rational, beta: &Rational, big_n: u64) -> bool {
        Self::violation(alpha, beta, big_n).is_none()
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Grid size `N`; the grid is `x = 0..=N`.
    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    pub fn grid_len(&self) -> usize {
        self.big_n as usize + 1
    }

    /// `(alpha + 1, beta - 1, N)`, the target of the parameter-shift relations.
    pub fn shifted(&self) -> Result<Self> {
        Self::new(&self.alpha + int(1), &self.beta - int(1), self.big_n)
    }

    pub fn check_degree(&self, n: u64) -> Result<()> {
        if n > self.big_n {
            Err(Error::IndexOutOfRange {
                index: n as usize,
                max: self.big_n as usize,
            })
        } else {
            Ok(())
        }
    }
}

/// `(xi, eta, N)` for classical Hahn polynomials, validated for degrees up to
/// `max_degree`.
///
/// The weight needs `(-eta-N)_x != 0` for `x <= N`; degrees up to `max_degree`
/// need `(xi+1)_k != 0` for `k <= max_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HahnParameterSet {
    #[serde(with = "serde_str")]
    xi: Rational,
    #[serde(with = "serde_str")]
    eta: Rational,
    #[serde(rename = "N")]
    big_n: u64,
    max_degree: u64,
}

impl HahnParameterSet {
    pub fn new(xi: Rational, eta: Rational, big_n: u64) -> Result<Self> {
        Self::with_max_degree(xi, eta, big_n, big_n)
    }

    pub fn with_max_degree(
        xi: Rational,
        eta: Rational,
        big_n: u64,
        max_degree: u64,
    ) -> Result<Self> {
        if pochhammer(&(-&eta - int(big_n as i64)), big_n) == int(0) {
            return Err(Error::InvalidParameters(format!(
                "eta = {eta} is an integer in [-N, -1]; (-eta-N)_x vanishes"
            )));
        }
        if pochhammer(&(&xi + int(1)), max_degree) == int(0) {
            return Err(Error::InvalidParameters(format!(
                "xi = {xi}: (xi+1)_k vanishes for some k <= {max_degree}"
            )));
        }
        Ok(Self {
            xi,
            eta,
            big_n,
            max_degree,
        })
    }

    /// The glued parameters `xi = -beta - n`, `eta = alpha + beta`.
    pub fn glued(p: &ParameterSet, n: u64) -> Result<Self> {
        Self::with_max_degree(
            -p.beta() - int(n as i64),
            p.alpha() + p.beta(),
            p.big_n(),
            n,
        )
    }

    pub fn xi(&self) -> &Rational {
        &self.xi
    }

    pub fn eta(&self) -> &Rational {
        &self.eta
    }

    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    pub fn max_degree(&self) -> u64 {
        self.max_degree
    }

    /// Same `eta` and `N`, with `xi` lowered by one.
    pub fn lowered(&self, max_degree: u64) -> Result<Self> {
        Self::with_max_degree(&self.xi - int(1), self.eta.clone(), self.big_n, max_degree)
    }

    pub fn check_degree(&self, n: u64) -> Result<()> {
        if n > self.max_degree || n > self.big_n {
            Err(Error::IndexOutOfRange {
                index: n as usize,
                max: self.max_degree.min(self.big_n) as usize,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;

    #[test]
    fn boundary_sweep_matches_enumerated_pole_sets() {
        for big_n in 0..6i64 {
            for b in (-big_n - 2)..=big_n {
                for a in (-big_n - 2)..=big_n {
                    let expect_bad = (b >= -big_n && b < big_n)
                        || (a >= -big_n - 1 && a <= -1)
                        || (a + b >= -big_n && a + b <= -1);
                    assert_eq!(
                        ParameterSet::is_valid(&int(a), &int(b), big_n as u64),
                        !expect_bad,
                        "a={a} b={b} N={big_n}"
                    );
                }
            }
        }
    }

    #[test]
    fn non_integers_are_valid() {
        assert!(ParameterSet::new(rat(1, 3), rat(2, 5), 5).is_ok());
        assert!(ParameterSet::new(rat(-7, 2), rat(-1, 3), 8).is_ok());
    }

    #[test]
    fn violation_names_condition() {
        let err = ParameterSet::new(int(1), int(0), 2).unwrap_err();
        assert!(err.to_string().contains("beta"));
        let err = ParameterSet::new(int(-2), rat(1, 2), 2).unwrap_err();
        assert!(err.to_string().contains("alpha"));
        let err = ParameterSet::new(rat(-5, 2), rat(1, 2), 2).unwrap_err();
        assert!(err.to_string().contains("alpha + beta"));
    }

    #[test]
    fn hahn_validity() {
        assert!(HahnParameterSet::new(rat(1, 3), rat(1, 4), 3).is_ok());
        assert!(HahnParameterSet::new(int(-2), rat(1, 4), 3).is_err());
        assert!(HahnParameterSet::new(rat(1, 3), int(-1), 3).is_err());
        // glued parameters only need the degrees actually used
        let p = ParameterSet::new(int(1), int(2), 2).unwrap();
        assert!(HahnParameterSet::glued(&p, 0).is_ok());
    }
}
