//! Exact arithmetic in `Q(t)` with `t^L = q`, i.e. the field generated by
//! `q^(1/L)` for a rational `q > 0`.
//!
//! Elements are stored as reduced polynomials `c_0 + c_1 t + ... + c_{L-1} t^{L-1}`,
//! so equality is coefficientwise. Inverses of binomials `u + v t^j`, which is
//! all the q-Pochhammer factors ever need, use the geometric-series identity
//! `(1 - m) (1 + m + ... + m^{r-1}) = 1 - m^r` with `m^r` rational. Anything
//! else falls back to solving with the multiplication matrix.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::integer::{gcd, Integer};
use num::{BigInt, One, Zero};

use super::rational::{pow_signed, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalModulus {
    q: Rational,
    degree: usize,
}

impl RadicalModulus {
    pub fn new(q: Rational, degree: usize) -> Result<Arc<Self>> {
        if degree == 0 {
            return Err(Error::InvalidParameters(
                "radical degree must be positive".into(),
            ));
        }
        if q.is_zero() {
            return Err(Error::InvalidParameters("radical of zero".into()));
        }
        Ok(Arc::new(Self { q, degree }))
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

#[derive(Clone)]
pub struct Radical {
    coeffs: Vec<Rational>,
    modulus: Arc<RadicalModulus>,
}

impl Radical {
    pub fn from_rational(r: &Rational, modulus: &Arc<RadicalModulus>) -> Self {
        let mut coeffs = vec![Rational::zero(); modulus.degree];
        coeffs[0] = r.clone();
        Self {
            coeffs,
            modulus: modulus.clone(),
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>, modulus: &Arc<RadicalModulus>) -> Result<Self> {
        if coeffs.len() != modulus.degree {
            return Err(Error::DimensionMismatch {
                expected: modulus.degree,
                actual: coeffs.len(),
            });
        }
        Ok(Self {
            coeffs,
            modulus: modulus.clone(),
        })
    }

    /// `t^m` for any integer `m`, reduced with `t^L = q`.
    pub fn generator_power(m: i64, modulus: &Arc<RadicalModulus>) -> Self {
        let l = modulus.degree as i64;
        let quot = m.div_euclid(l);
        let rem = m.rem_euclid(l) as usize;
        let mut coeffs = vec![Rational::zero(); modulus.degree];
        coeffs[rem] = pow_signed(&modulus.q, quot).expect("modulus q is nonzero");
        Self {
            coeffs,
            modulus: modulus.clone(),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn modulus(&self) -> &Arc<RadicalModulus> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The element as a rational, if it has no irrational part.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus,
            "radical elements from different fields"
        );
    }

    fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
            modulus: self.modulus.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let support: Vec<usize> = (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect();
        match support.as_slice() {
            [] => Err(Error::DivisionByZero),
            [j] => {
                let c = &self.coeffs[*j];
                Ok(Self::generator_power(-(*j as i64), &self.modulus).scale(&c.recip()))
            }
            [i, j] => {
                // t^i (u + v t^{j-i})
                let shift = Self::generator_power(-(*i as i64), &self.modulus);
                match self.binomial_inverse(&self.coeffs[*i], &self.coeffs[*j], j - i) {
                    Some(inv) => Ok(inv * shift),
                    None => self.solve_inverse(),
                }
            }
            _ => self.solve_inverse(),
        }
    }

    // Inverse of u + v t^j, or None if the geometric trick degenerates.
    fn binomial_inverse(&self, u: &Rational, v: &Rational, j: usize) -> Option<Self> {
        let l = self.modulus.degree;
        let order = l / gcd(j, l);
        // m = -(v/u) t^j, m^order = (-(v/u))^order q^{j*order/l}
        let c = -(v / u);
        let m_pow =
            pow_signed(&c, order as i64)? * pow_signed(&self.modulus.q, (j * order / l) as i64)?;
        let den = Rational::one() - m_pow;
        if den.is_zero() {
            return None;
        }
        // m^k = c^k t^{jk} is a monomial, so the series fills one slot per term
        let mut coeffs = vec![Rational::zero(); l];
        let mut ck = Rational::one();
        for k in 0..order {
            let e = j * k;
            coeffs[e % l] += &ck * pow_signed(&self.modulus.q, (e / l) as i64)?;
            ck *= &c;
        }
        Some(
            Self {
                coeffs,
                modulus: self.modulus.clone(),
            }
            .scale(&(u * den).recip()),
        )
    }

    fn solve_inverse(&self) -> Result<Self> {
        let l = self.modulus.degree;
        // column i of the multiplication matrix holds self * t^i
        let mut cols = Vec::with_capacity(l);
        let mut cur = self.clone();
        let t = Self::generator_power(1, &self.modulus);
        for _ in 0..l {
            cols.push(cur.coeffs.clone());
            cur = cur * t.clone();
        }
        let mut aug: Vec<Vec<Rational>> = (0..l)
            .map(|r| {
                let mut row: Vec<Rational> = (0..l).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                row
            })
            .collect();
        for col in 0..l {
            let pivot = (col..l).find(|&r| !aug[r][col].is_zero()).ok_or_else(|| {
                Error::ZeroDivisor("element is not invertible in the radical extension".into())
            })?;
            aug.swap(col, pivot);
            let inv = aug[col][col].recip();
            for v in aug[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..l {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    let pivot_row = aug[col].clone();
                    for (dst, src) in aug[r].iter_mut().zip(pivot_row.iter()) {
                        *dst -= &f * src;
                    }
                }
            }
        }
        let coeffs = aug.into_iter().map(|mut row| row.pop().unwrap()).collect();
        Ok(Self {
            coeffs,
            modulus: self.modulus.clone(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs);
        Ok(self.clone() * rhs.inverse()?)
    }
}

impl PartialEq for Radical {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for Radical {
    type Output = Radical;
    fn add(mut self, rhs: Radical) -> Radical {
        self.check_same(&rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl Sub for Radical {
    type Output = Radical;
    fn sub(mut self, rhs: Radical) -> Radical {
        self.check_same(&rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl Neg for Radical {
    type Output = Radical;
    fn neg(mut self) -> Radical {
        for a in self.coeffs.iter_mut() {
            *a = -a.clone();
        }
        self
    }
}

// Coefficients over one common denominator.
fn integer_form(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

impl Mul for Radical {
    type Output = Radical;
    // Convolution in integers, reduced by t^L = q, then one normalisation per
    // coefficient; BigRational would take a gcd per partial product.
    fn mul(self, rhs: Radical) -> Radical {
        self.check_same(&rhs);
        let l = self.modulus.degree;
        let (a, da) = integer_form(&self.coeffs);
        let (b, db) = integer_form(&rhs.coeffs);
        let mut low = vec![BigInt::zero(); l];
        let mut high = vec![BigInt::zero(); l];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = i + j;
                if k < l {
                    low[k] += x * y;
                } else {
                    high[k - l] += x * y;
                }
            }
        }
        let (qn, qd) = (self.modulus.q.numer(), self.modulus.q.denom());
        let den = da * db * qd;
        let coeffs = low
            .into_iter()
            .zip(high)
            .map(|(lo, hi)| Rational::new(lo * qd + hi * qn, den.clone()))
            .collect();
        Radical {
            coeffs,
            modulus: self.modulus,
        }
    }
}
