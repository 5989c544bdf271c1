//! Small exact dense helpers: linear solves and polynomial coefficient lists.

use num::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Solves `a * u = b` by Gauss-Jordan elimination. `a` is square.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: b.len(),
        });
    }
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: row.len(),
        });
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::ZeroDivisor(format!("singular system at column {col}")))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        let (prow, pb) = (a[col].clone(), b[col].clone());
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for (dst, src) in a[r].iter_mut().zip(&prow) {
                *dst -= &f * src;
            }
            b[r] -= &f * &pb;
        }
    }
    Ok(b)
}

/// Coefficients (lowest degree first) of `poly * (x + c)`.
pub fn mul_linear(poly: &[Rational], c: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); poly.len() + 1];
    for (i, a) in poly.iter().enumerate() {
        out[i + 1] += a;
        out[i] += a * c;
    }
    out
}

/// Horner evaluation, lowest degree first.
pub fn eval_poly(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter()
        .rev()
        .fold(Rational::zero(), |acc, a| acc * x + a)
}

/// Degree of the coefficient list, ignoring trailing zeros.
pub fn degree(poly: &[Rational]) -> Option<usize> {
    poly.iter().rposition(|a| !a.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, rat};

    #[test]
    fn solves_small_system() {
        let a = vec![vec![int(0), int(2)], vec![int(3), int(1)]];
        let u = solve(a, vec![int(4), int(5)]).unwrap();
        assert_eq!(u, vec![int(1), int(2)]);
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(solve(singular, vec![int(1), int(1)]).is_err());
    }

    #[test]
    fn polynomial_helpers() {
        // (x + 1)(x - 1/2) = x^2 + x/2 - 1/2
        let p = mul_linear(&mul_linear(&[int(1)], &int(1)), &rat(-1, 2));
        assert_eq!(p, vec![rat(-1, 2), rat(1, 2), int(1)]);
        assert_eq!(eval_poly(&p, &int(2)), rat(9, 2));
        assert_eq!(degree(&p), Some(2));
        assert_eq!(degree(&[int(0)]), None);
    }
}
