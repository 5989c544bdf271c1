use num::{One, Zero};

use super::rational::{int, pow_signed, Rational};
use crate::error::{Error, Result};

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Rising factorial extended to negative indices by `(a)_{-m} = 1 / (a-m)_m`.
pub fn pochhammer_signed(a: &Rational, n: i64) -> Result<Rational> {
    if n >= 0 {
        return Ok(pochhammer(a, n as u64));
    }
    let m = n.unsigned_abs();
    let den = pochhammer(&(a - int(m as i64)), m);
    if den.is_zero() {
        Err(Error::PoleInDenominator(format!(
            "({a})_{{{n}}} has a vanishing denominator"
        )))
    } else {
        Ok(den.recip())
    }
}

/// `(a; q)_n = prod_{i<n} (1 - a q^i)`, with `(a; q)_0 = 1`.
pub fn q_pochhammer(a: &Rational, q: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= Rational::one() - &term;
        term *= q;
    }
    acc
}

/// Checks `(z;q)_{n-k} = (z;q)_n / (q^{1-n}/z;q)_k * (-q/z)^k * q^{k(k-1)/2 - nk}`
/// exactly. Requires `0 <= k <= n`, `z != 0`, `q != 0` and a nonzero
/// `(q^{1-n}/z; q)_k`.
pub fn q_poch_shift_identity_check(z: &Rational, q: &Rational, n: u64, k: u64) -> Result<bool> {
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    if z.is_zero() || q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (ni, ki) = (n as i64, k as i64);
    let lhs = q_pochhammer(z, q, n - k);
    let shifted = pow_signed(q, 1 - ni).ok_or(Error::DivisionByZero)? / z;
    let den = q_pochhammer(&shifted, q, k);
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let sign_part = pow_signed(&(-(q / z)), ki).ok_or(Error::DivisionByZero)?;
    let q_part = pow_signed(q, ki * (ki - 1) / 2 - ni * ki).ok_or(Error::DivisionByZero)?;
    let rhs = q_pochhammer(z, q, n) / den * sign_part * q_part;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(-2), 2), int(2));
        assert_eq!(pochhammer(&int(1), 4), int(24));
        assert_eq!(pochhammer(&int(-3), 5), int(0));
    }

    #[test]
    fn negative_index() {
        // (a)_{-1} = 1/(a-1)
        assert_eq!(pochhammer_signed(&rat(3, 2), -1).unwrap(), int(2));
        assert_eq!(pochhammer_signed(&int(3), -2).unwrap(), rat(1, 2));
        assert!(pochhammer_signed(&int(1), -1).is_err());
    }

    #[test]
    fn q_pochhammer_values() {
        let q = rat(1, 3);
        assert_eq!(q_pochhammer(&rat(5, 7), &q, 0), int(1));
        assert_eq!(q_pochhammer(&int(1), &q, 3), int(0));
        assert_eq!(q_pochhammer(&rat(1, 2), &rat(1, 2), 2), rat(3, 8));
    }

    #[test]
    fn shift_identity_examples() {
        let q = rat(1, 2);
        assert!(q_poch_shift_identity_check(&rat(1, 3), &q, 3, 0).unwrap());
        assert!(q_poch_shift_identity_check(&rat(1, 3), &q, 3, 1).unwrap());
        assert!(q_poch_shift_identity_check(&rat(1, 3), &q, 3, 3).unwrap());
        assert!(q_poch_shift_identity_check(&rat(1, 3), &q, 2, 3).is_err());
    }
}
