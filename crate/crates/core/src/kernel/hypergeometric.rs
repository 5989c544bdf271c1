//! Terminating generalized hypergeometric series `rFs`.

use num::{One, Zero};

use super::rational::{as_nonpositive_integer, int, Rational};
use crate::error::{Error, Result};

/// Smallest `m` such that some numerator parameter equals `-m`.
pub fn termination_index(num: &[Rational]) -> Option<u64> {
    num.iter().filter_map(as_nonpositive_integer).min()
}

/// Evaluates
///
/// ```text
/// rFs(a_1..a_r; d_1..d_s; z) = sum_{k=0}^{m} prod (a_i)_k / prod (d_j)_k * z^k / k!
/// ```
///
/// where `m` is the termination index of the numerator parameters.
pub fn hyp_terminating(num: &[Rational], den: &[Rational], z: &Rational) -> Result<Rational> {
    let m = termination_index(num).ok_or(Error::NonTerminating)?;
    for d in den {
        if let Some(j) = as_nonpositive_integer(d) {
            if j < m {
                return Err(Error::PoleInDenominator(format!(
                    "({d})_k vanishes for k = {} <= {m}",
                    j + 1
                )));
            }
        }
    }
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for k in 0..m {
        let kr = int(k as i64);
        for a in num {
            term *= a + &kr;
        }
        if term.is_zero() {
            break;
        }
        for d in den {
            term /= d + &kr;
        }
        term *= z;
        term /= &kr + Rational::one();
        sum += &term;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::pochhammer::pochhammer;
    use crate::kernel::rational::{factorial, rat};

    // Direct summation straight from the definition, one Pochhammer per factor.
    fn naive(num: &[Rational], den: &[Rational], z: &Rational, m: u64) -> Rational {
        (0..=m)
            .map(|k| {
                let mut t = num::pow::pow(z.clone(), k as usize) / factorial(k);
                for a in num {
                    t *= pochhammer(a, k);
                }
                for d in den {
                    t /= pochhammer(d, k);
                }
                t
            })
            .sum()
    }

    #[test]
    fn zero_parameter_gives_one() {
        let v = hyp_terminating(&[int(0), rat(3, 2)], &[rat(1, 3)], &int(5)).unwrap();
        assert_eq!(v, int(1));
    }

    #[test]
    fn chu_vandermonde_example() {
        let v = hyp_terminating(&[int(-2), int(1)], &[int(3)], &int(1)).unwrap();
        assert_eq!(v, rat(1, 2));
    }

    #[test]
    fn three_f_two_example() {
        let v =
            hyp_terminating(&[int(-1), int(-1), int(2)], &[int(-2), rat(-1, 2)], &int(1)).unwrap();
        assert_eq!(v, int(3));
    }

    #[test]
    fn agrees_with_naive_sum() {
        let num = [int(-4), rat(2, 3), rat(-5, 7)];
        let den = [rat(1, 5), rat(9, 2)];
        let z = rat(-3, 4);
        assert_eq!(
            hyp_terminating(&num, &den, &z).unwrap(),
            naive(&num, &den, &z, 4)
        );
    }

    #[test]
    fn errors() {
        assert_eq!(
            hyp_terminating(&[rat(1, 2)], &[int(3)], &int(1)),
            Err(Error::NonTerminating)
        );
        assert!(matches!(
            hyp_terminating(&[int(-3)], &[int(-1)], &int(1)),
            Err(Error::PoleInDenominator(_))
        ));
        // a denominator pole beyond the termination index is harmless
        assert!(hyp_terminating(&[int(-1)], &[int(-1)], &int(1)).is_ok());
    }

    #[test]
    fn zero_argument_gives_one() {
        let v = hyp_terminating(&[int(-3), rat(1, 2)], &[rat(5, 2)], &int(0)).unwrap();
        assert_eq!(v, int(1));
    }
}
