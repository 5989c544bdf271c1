//! q-Pochhammer symbols and terminating basic hypergeometric series `r phi s`.
//!
//! Parameters are monomials `c * q^r` with rational `c` and `r`. A fractional
//! exponent `r` needs `q^(1/L)`, so evaluation goes through a [`QContext`]:
//!
//! - [`RootedQ`] fixes a rational root `s` and sets `q = s^L`; every value is
//!   then a plain rational and can be compared by magnitude.
//! - [`RadicalQ`] keeps `q` itself rational and computes in `Q(q^(1/L))`.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::radical::{Radical, RadicalModulus};
use super::rational::{as_nonpositive_integer, int, pow_signed, serde_str, Rational};
use crate::error::{Error, Result};

/// Exact field used for q-series evaluation.
pub trait QField:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn is_zero_elem(&self) -> bool;
    fn checked_div(&self, rhs: &Self) -> Result<Self>;
}

impl QField for Rational {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
}

impl QField for Radical {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Radical::checked_div(self, rhs)
    }
}

/// A choice of `q` together with the field its powers live in.
pub trait QContext {
    type Elem: QField;

    fn embed(&self, r: &Rational) -> Self::Elem;

    /// `q^exponent`; fails if the exponent is not a multiple of `1/L`.
    fn q_power(&self, exponent: &Rational) -> Result<Self::Elem>;

    /// Denominator `L` of the admissible exponents.
    fn exponent_denominator(&self) -> u64;

    fn zero(&self) -> Self::Elem {
        self.embed(&Rational::zero())
    }

    fn one(&self) -> Self::Elem {
        self.embed(&Rational::one())
    }

    fn q(&self) -> Self::Elem {
        self.q_power(&Rational::one())
            .expect("q^1 is always representable")
    }

    fn monomial(&self, m: &QMonomial) -> Result<Self::Elem> {
        Ok(self.embed(&m.coeff) * self.q_power(&m.exponent)?)
    }
}

fn scaled_exponent(exponent: &Rational, denominator: u64) -> Result<i64> {
    let m = exponent * int(denominator as i64);
    if !m.is_integer() {
        return Err(Error::InvalidParameters(format!(
            "exponent {exponent} is not a multiple of 1/{denominator}"
        )));
    }
    i64::try_from(m.to_integer())
        .map_err(|_| Error::InvalidParameters(format!("exponent {exponent} too large")))
}

/// `q = root^degree` with a rational root in (0, 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedQ {
    root: Rational,
    degree: u64,
}

impl RootedQ {
    pub fn new(root: Rational, degree: u64) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameters(
                "root degree must be positive".into(),
            ));
        }
        if !(root.is_positive() && root < Rational::one()) {
            return Err(Error::InvalidParameters(format!(
                "q root {root} is not in (0, 1)"
            )));
        }
        Ok(Self { root, degree })
    }

    /// Rational `q` with integer exponents only.
    pub fn exact(q: Rational) -> Result<Self> {
        Self::new(q, 1)
    }

    pub fn root(&self) -> &Rational {
        &self.root
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// The value of `q` itself.
    pub fn q_value(&self) -> Rational {
        num::pow::pow(self.root.clone(), self.degree as usize)
    }
}

impl QContext for RootedQ {
    type Elem = Rational;

    fn embed(&self, r: &Rational) -> Rational {
        r.clone()
    }

    fn q_power(&self, exponent: &Rational) -> Result<Rational> {
        let m = scaled_exponent(exponent, self.degree)?;
        pow_signed(&self.root, m).ok_or(Error::DivisionByZero)
    }

    fn exponent_denominator(&self) -> u64 {
        self.degree
    }
}

/// Rational `q` in (0, 1), with fractional powers taken in `Q(q^(1/L))`.
#[derive(Debug, Clone)]
pub struct RadicalQ {
    modulus: Arc<RadicalModulus>,
}

impl RadicalQ {
    pub fn new(q: Rational, degree: u64) -> Result<Self> {
        if !(q.is_positive() && q < Rational::one()) {
            return Err(Error::InvalidParameters(format!(
                "q = {q} is not in (0, 1)"
            )));
        }
        Ok(Self {
            modulus: RadicalModulus::new(q, degree as usize)?,
        })
    }

    pub fn q_value(&self) -> &Rational {
        self.modulus.q()
    }
}

impl QContext for RadicalQ {
    type Elem = Radical;

    fn embed(&self, r: &Rational) -> Radical {
        Radical::from_rational(r, &self.modulus)
    }

    fn q_power(&self, exponent: &Rational) -> Result<Radical> {
        let m = scaled_exponent(exponent, self.modulus.degree() as u64)?;
        Ok(Radical::generator_power(m, &self.modulus))
    }

    fn exponent_denominator(&self) -> u64 {
        self.modulus.degree() as u64
    }
}

/// `coeff * q^exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMonomial {
    #[serde(with = "serde_str")]
    pub coeff: Rational,
    #[serde(with = "serde_str")]
    pub exponent: Rational,
}

impl QMonomial {
    pub fn power(exponent: Rational) -> Self {
        Self {
            coeff: Rational::one(),
            exponent,
        }
    }

    pub fn scaled(coeff: Rational, exponent: Rational) -> Self {
        Self { coeff, exponent }
    }

    /// `Some(m)` when the monomial is exactly `q^{-m}`.
    pub fn termination(&self) -> Option<u64> {
        if self.coeff.is_one() {
            as_nonpositive_integer(&self.exponent)
        } else {
            None
        }
    }
}

/// `(a; q)_n` in the context's field.
pub fn q_pochhammer_in<C: QContext>(ctx: &C, a: &C::Elem, n: u64) -> C::Elem {
    let q = ctx.q();
    let mut acc = ctx.one();
    let mut term = a.clone();
    for _ in 0..n {
        acc = acc * (ctx.one() - term.clone());
        term = term * q.clone();
    }
    acc
}

/// `prod_i (a_i; q)_n / prod_j (b_j; q)_n`, dividing one factor at a time.
pub fn q_pochhammer_ratio<C: QContext>(
    ctx: &C,
    num: &[C::Elem],
    den: &[C::Elem],
    n: u64,
) -> Result<C::Elem> {
    let q = ctx.q();
    let mut acc = ctx.one();
    let mut num_terms: Vec<C::Elem> = num.to_vec();
    let mut den_terms: Vec<C::Elem> = den.to_vec();
    for i in 0..n {
        for t in num_terms.iter_mut() {
            acc = acc * (ctx.one() - t.clone());
            *t = t.clone() * q.clone();
        }
        for t in den_terms.iter_mut() {
            let factor = ctx.one() - t.clone();
            if factor.is_zero_elem() {
                return Err(Error::PoleInDenominator(format!(
                    "q-Pochhammer denominator factor {i} vanishes"
                )));
            }
            acc = acc.checked_div(&factor)?;
            *t = t.clone() * q.clone();
        }
    }
    Ok(acc)
}

/// Terminating `r phi s` with the standard factor `[(-1)^k q^{k(k-1)/2}]^{1+s-r}`:
///
/// ```text
/// sum_k (a_1..a_r; q)_k / (q, b_1..b_s; q)_k * [(-1)^k q^{k(k-1)/2}]^{1+s-r} z^k
/// ```
pub fn basic_hyp_terminating<C: QContext>(
    ctx: &C,
    upper: &[QMonomial],
    lower: &[QMonomial],
    z: &QMonomial,
) -> Result<C::Elem> {
    let m = upper
        .iter()
        .filter_map(QMonomial::termination)
        .min()
        .ok_or(Error::NonTerminating)?;
    let q = ctx.q();
    let a: Vec<C::Elem> = upper
        .iter()
        .map(|p| ctx.monomial(p))
        .collect::<Result<_>>()?;
    let b: Vec<C::Elem> = lower
        .iter()
        .map(|p| ctx.monomial(p))
        .collect::<Result<_>>()?;
    let z = ctx.monomial(z)?;
    let excess = 1 + lower.len() as i64 - upper.len() as i64;

    let mut sum = ctx.one();
    let mut term = ctx.one();
    let mut q_k = ctx.one();
    for k in 0..m {
        for ai in &a {
            term = term * (ctx.one() - ai.clone() * q_k.clone());
        }
        if term.is_zero_elem() {
            break;
        }
        for bj in &b {
            let factor = ctx.one() - bj.clone() * q_k.clone();
            if factor.is_zero_elem() {
                return Err(Error::PoleInDenominator(format!(
                    "lower q-Pochhammer vanishes at k = {}",
                    k + 1
                )));
            }
            term = term.checked_div(&factor)?;
        }
        let q_next = q_k.clone() * q.clone();
        term = term.checked_div(&(ctx.one() - q_next.clone()))?;
        term = term * z.clone();
        if excess != 0 {
            // ratio of [(-1)^k q^{k(k-1)/2}]^excess from k to k+1 is (-q^k)^excess
            let step = -q_k.clone();
            if excess > 0 {
                for _ in 0..excess {
                    term = term * step.clone();
                }
            } else {
                for _ in 0..(-excess) {
                    term = term.checked_div(&step)?;
                }
            }
        }
        sum = sum + term.clone();
        q_k = q_next;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::pochhammer::q_pochhammer;
    use crate::kernel::rational::rat;

    #[test]
    fn contexts_reject_bad_q() {
        assert!(RootedQ::exact(int(1)).is_err());
        assert!(RootedQ::exact(int(0)).is_err());
        assert!(RadicalQ::new(rat(3, 2), 2).is_err());
    }

    #[test]
    fn rooted_powers() {
        let ctx = RootedQ::new(rat(1, 2), 3).unwrap();
        assert_eq!(ctx.q(), rat(1, 8));
        assert_eq!(ctx.q_power(&rat(2, 3)).unwrap(), rat(1, 4));
        assert_eq!(ctx.q_power(&rat(-1, 3)).unwrap(), int(2));
        assert!(ctx.q_power(&rat(1, 2)).is_err());
    }

    #[test]
    fn generic_q_pochhammer_matches_rational() {
        let ctx = RootedQ::exact(rat(1, 3)).unwrap();
        let a = rat(5, 4);
        assert_eq!(
            q_pochhammer_in(&ctx, &a, 4),
            q_pochhammer(&a, &rat(1, 3), 4)
        );
    }

    #[test]
    fn leading_unit_parameter_gives_one() {
        let ctx = RootedQ::exact(rat(1, 2)).unwrap();
        let v = basic_hyp_terminating(
            &ctx,
            &[QMonomial::power(int(0)), QMonomial::power(rat(3, 1))],
            &[QMonomial::power(int(2))],
            &QMonomial::power(int(1)),
        )
        .unwrap();
        assert_eq!(v, int(1));
    }

    #[test]
    fn q_chu_vandermonde() {
        // 2phi1(q^{-n}, b; c; q, q) = (c/b; q)_n / (c; q)_n * b^n
        let q = rat(1, 3);
        let ctx = RootedQ::exact(q.clone()).unwrap();
        let (b, c) = (rat(2, 5), rat(7, 4));
        for n in 0..6u64 {
            let v = basic_hyp_terminating(
                &ctx,
                &[
                    QMonomial::power(int(-(n as i64))),
                    QMonomial::scaled(b.clone(), int(0)),
                ],
                &[QMonomial::scaled(c.clone(), int(0))],
                &QMonomial::power(int(1)),
            )
            .unwrap();
            let expected = q_pochhammer(&(&c / &b), &q, n) / q_pochhammer(&c, &q, n)
                * num::pow::pow(b.clone(), n as usize);
            assert_eq!(v, expected, "n = {n}");
        }
    }

    #[test]
    fn nonterminating_and_pole() {
        let ctx = RootedQ::exact(rat(1, 2)).unwrap();
        assert_eq!(
            basic_hyp_terminating(
                &ctx,
                &[QMonomial::power(int(1))],
                &[],
                &QMonomial::power(int(1))
            ),
            Err(Error::NonTerminating)
        );
        let r = basic_hyp_terminating(
            &ctx,
            &[QMonomial::power(int(-3))],
            &[QMonomial::power(int(-1))],
            &QMonomial::power(int(1)),
        );
        assert!(matches!(r, Err(Error::PoleInDenominator(_))));
    }

    #[test]
    fn radical_and_rooted_agree_on_integer_exponents() {
        let q = rat(3, 4);
        let rooted = RootedQ::exact(q.clone()).unwrap();
        let radical = RadicalQ::new(q, 1).unwrap();
        let upper = [
            QMonomial::power(int(-3)),
            QMonomial::scaled(rat(2, 7), int(1)),
        ];
        let lower = [QMonomial::power(int(4))];
        let z = QMonomial::power(int(1));
        let a = basic_hyp_terminating(&rooted, &upper, &lower, &z).unwrap();
        let b = basic_hyp_terminating(&radical, &upper, &lower, &z).unwrap();
        assert_eq!(b.to_rational(), Some(a));
    }
}
