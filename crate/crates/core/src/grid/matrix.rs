//! Tridiagonal matrices of the operators in the `phi` and `rho` bases.
//!
//! Column `n` holds the expansion of the operator applied to the `n`-th basis
//! member. `sub[n]` is entry `(n+1, n)` and `sup[n]` is entry `(n, n+1)`.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::rational::{int, serde_str, Rational};
use crate::kernel::ParameterSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisTag {
    Phi,
    Rho,
    Monomial,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisTag::Phi => "phi",
            BasisTag::Rho => "rho",
            BasisTag::Monomial => "monomial",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiOperator {
    L,
    M,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoOperator {
    LStar,
    MStar,
    ZStar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMatrix {
    pub order: usize,
    pub basis_tag: BasisTag,
    #[serde(with = "serde_str::vec")]
    pub sub: Vec<Rational>,
    #[serde(with = "serde_str::vec")]
    pub main: Vec<Rational>,
    #[serde(rename = "super", with = "serde_str::vec")]
    pub sup: Vec<Rational>,
}

impl BasisMatrix {
    pub fn zeros(order: usize, basis_tag: BasisTag) -> Self {
        let off = order.saturating_sub(1);
        Self {
            order,
            basis_tag,
            sub: vec![Rational::zero(); off],
            main: vec![Rational::zero(); order],
            sup: vec![Rational::zero(); off],
        }
    }

    /// Entry `(row, col)`; zero outside the band.
    pub fn get(&self, row: usize, col: usize) -> Rational {
        if row >= self.order || col >= self.order {
            return Rational::zero();
        }
        if row == col {
            self.main[row].clone()
        } else if row == col + 1 {
            self.sub[col].clone()
        } else if col == row + 1 {
            self.sup[row].clone()
        } else {
            Rational::zero()
        }
    }

    /// Sets an entry; fails if it lies outside the band and is nonzero.
    pub fn set(&mut self, row: usize, col: usize, value: Rational) -> Result<()> {
        if row >= self.order || col >= self.order {
            return Err(Error::IndexOutOfRange {
                index: row.max(col),
                max: self.order.saturating_sub(1),
            });
        }
        if row == col {
            self.main[row] = value;
        } else if row == col + 1 {
            self.sub[col] = value;
        } else if col == row + 1 {
            self.sup[row] = value;
        } else if !value.is_zero() {
            return Err(Error::BandOverflow { row, col });
        }
        Ok(())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.order)
            .map(|r| (0..self.order).map(|c| self.get(r, c)).collect())
            .collect()
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.order).map(|r| self.get(r, col)).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                actual: v.len(),
            });
        }
        Ok((0..self.order)
            .map(|r| {
                let lo = r.saturating_sub(1);
                let hi = (r + 1).min(self.order - 1);
                (lo..=hi).map(|c| self.get(r, c) * &v[c]).sum()
            })
            .collect())
    }

    /// `self * rhs`, required to stay tridiagonal.
    pub fn mul(&self, rhs: &BasisMatrix) -> Result<BasisMatrix> {
        if rhs.order != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                actual: rhs.order,
            });
        }
        let n = self.order;
        let mut out = BasisMatrix::zeros(n, self.basis_tag);
        for r in 0..n {
            for c in r.saturating_sub(2)..(r + 3).min(n) {
                let lo = r.saturating_sub(1).max(c.saturating_sub(1));
                let hi = (r + 1).min(c + 1).min(n - 1);
                let mut acc = Rational::zero();
                for k in lo..=hi {
                    acc += self.get(r, k) * rhs.get(k, c);
                }
                out.set(r, c, acc)?;
            }
        }
        Ok(out)
    }

    pub fn sub_scaled(&self, rhs: &BasisMatrix, c: &Rational) -> Result<BasisMatrix> {
        if rhs.order != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                actual: rhs.order,
            });
        }
        let diff =
            |a: &[Rational], b: &[Rational]| a.iter().zip(b).map(|(x, y)| x - y * c).collect();
        Ok(BasisMatrix {
            order: self.order,
            basis_tag: self.basis_tag,
            sub: diff(&self.sub, &rhs.sub),
            main: diff(&self.main, &rhs.main),
            sup: diff(&self.sup, &rhs.sup),
        })
    }
}

/// Coefficients of the operators on `phi_n`, as functions of `n`.
pub mod phi_coeffs {
    use super::*;

    /// `-(n+alpha+1)`
    pub fn l_diag(n: u64, p: &ParameterSet) -> Rational {
        -(int(n as i64) + p.alpha() + int(1))
    }

    /// `n(n-N-1)`
    pub fn l_lower(n: u64, p: &ParameterSet) -> Rational {
        let n = n as i64;
        int(n * (n - p.big_n() as i64 - 1))
    }

    /// `-n(n+alpha+1)`
    pub fn m_diag(n: u64, p: &ParameterSet) -> Rational {
        int(n as i64) * l_diag(n, p)
    }

    /// `n(n-beta)(n-N-1)`
    pub fn m_lower(n: u64, p: &ParameterSet) -> Rational {
        (int(n as i64) - p.beta()) * l_lower(n, p)
    }

    /// `-n(2n+alpha-N)`
    pub fn y_diag(n: u64, p: &ParameterSet) -> Rational {
        let ni = int(n as i64);
        -(&ni * (int(2) * &ni + p.alpha() - int(p.big_n() as i64)))
    }

    /// `n(n-1)(n-N-1)`
    pub fn y_lower(n: u64, p: &ParameterSet) -> Rational {
        int(n as i64 - 1) * l_lower(n, p)
    }
}

/// Coefficients of the adjoint operators on `rho_n`, as functions of `n`.
pub mod rho_coeffs {
    use super::*;

    /// `alpha+N-n`
    pub fn ls_raise(n: u64, p: &ParameterSet) -> Rational {
        p.alpha() + int(p.big_n() as i64 - n as i64)
    }

    /// `-(1+alpha+N-n)`
    pub fn ls_diag(n: u64, p: &ParameterSet) -> Rational {
        -(ls_raise(n, p) + int(1))
    }

    /// `(alpha+N-n)(1+n)`
    pub fn ms_raise(n: u64, p: &ParameterSet) -> Rational {
        ls_raise(n, p) * int(n as i64 + 1)
    }

    /// `-N(2n+1) + n(2n-alpha)`
    pub fn ms_diag(n: u64, p: &ParameterSet) -> Rational {
        let ni = int(n as i64);
        let big = int(p.big_n() as i64);
        -(big * (int(2) * &ni + int(1))) + &ni * (int(2) * &ni - p.alpha())
    }

    /// `n(1+N-n)`
    pub fn ms_lower(n: u64, p: &ParameterSet) -> Rational {
        let n = n as i64;
        int(n * (1 + p.big_n() as i64 - n))
    }

    /// `-n(1+N-n)/(1+alpha+N-n)`
    pub fn zs_lower(n: u64, p: &ParameterSet) -> Rational {
        -ms_lower(n, p) / (ls_raise(n, p) + int(1))
    }
}

pub fn matrix_in_phi_basis(which: PhiOperator, p: &ParameterSet) -> BasisMatrix {
    use phi_coeffs::*;
    let order = p.grid_len();
    let mut m = BasisMatrix::zeros(order, BasisTag::Phi);
    for n in 0..order {
        let k = n as u64;
        let (diag, lower) = match which {
            PhiOperator::L => (l_diag(k, p), l_lower(k, p)),
            PhiOperator::M => (m_diag(k, p), m_lower(k, p)),
            PhiOperator::Y => (y_diag(k, p), y_lower(k, p)),
        };
        m.main[n] = diag;
        if n > 0 {
            m.sup[n - 1] = lower;
        }
        if which == PhiOperator::Y && n + 1 < order {
            m.sub[n] = -l_diag(k, p);
        }
    }
    m
}

pub fn matrix_in_rho_basis(which: RhoOperator, p: &ParameterSet) -> BasisMatrix {
    use rho_coeffs::*;
    let order = p.grid_len();
    let mut m = BasisMatrix::zeros(order, BasisTag::Rho);
    for n in 0..order {
        let k = n as u64;
        match which {
            RhoOperator::LStar => {
                m.main[n] = ls_diag(k, p);
                if n + 1 < order {
                    m.sub[n] = ls_raise(k, p);
                }
            }
            RhoOperator::MStar => {
                m.main[n] = ms_diag(k, p);
                if n + 1 < order {
                    m.sub[n] = ms_raise(k, p);
                }
                if n > 0 {
                    m.sup[n - 1] = ms_lower(k, p);
                }
            }
            RhoOperator::ZStar => {
                m.main[n] = int(n as i64);
                if n > 0 {
                    m.sup[n - 1] = zs_lower(k, p);
                }
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::basis::{expand_in_phi, expand_in_rho, phi_basis, rho_basis};
    use crate::grid::operator::{make_adjoint_l, make_adjoint_m, make_l, make_m, make_y};
    use crate::kernel::rational::rat;

    fn sets() -> Vec<ParameterSet> {
        vec![
            ParameterSet::new(int(1), rat(1, 2), 2).unwrap(),
            ParameterSet::new(rat(1, 3), rat(2, 5), 5).unwrap(),
            ParameterSet::new(rat(7, 2), rat(-1, 3), 8).unwrap(),
        ]
    }

    #[test]
    fn phi_matrices_match_operator_action() {
        for p in sets() {
            let ops = [
                (PhiOperator::L, make_l(&p).unwrap()),
                (PhiOperator::M, make_m(&p).unwrap()),
                (PhiOperator::Y, make_y(&p).unwrap()),
            ];
            for (which, op) in ops {
                let mat = matrix_in_phi_basis(which, &p);
                for n in 0..=p.big_n() {
                    let image = op.apply(&phi_basis(n, p.big_n()).unwrap()).unwrap();
                    assert_eq!(
                        expand_in_phi(&image).unwrap(),
                        mat.column(n as usize),
                        "{which:?} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn rho_matrices_match_operator_action() {
        for p in sets() {
            let ops = [
                (RhoOperator::LStar, make_adjoint_l(&p).unwrap()),
                (RhoOperator::MStar, make_adjoint_m(&p).unwrap()),
            ];
            for (which, op) in ops {
                let mat = matrix_in_rho_basis(which, &p);
                for n in 0..=p.big_n() {
                    let image = op.apply(&rho_basis(n, &p).unwrap()).unwrap();
                    assert_eq!(
                        expand_in_rho(&image, &p).unwrap(),
                        mat.column(n as usize),
                        "{which:?} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn adjoint_m_factorizes() {
        for p in sets() {
            let zs = matrix_in_rho_basis(RhoOperator::ZStar, &p);
            let ls = matrix_in_rho_basis(RhoOperator::LStar, &p);
            assert_eq!(
                zs.mul(&ls).unwrap(),
                matrix_in_rho_basis(RhoOperator::MStar, &p)
            );
        }
    }

    #[test]
    fn displayed_entries() {
        let p = &sets()[0];
        assert_eq!(matrix_in_phi_basis(PhiOperator::L, p).main[0], int(-2));
        assert_eq!(matrix_in_rho_basis(RhoOperator::LStar, p).sub[0], int(3));
        assert!(matrix_in_rho_basis(RhoOperator::ZStar, p)
            .column(0)
            .iter()
            .all(Zero::is_zero));
        // M entry (1, 2) = 2 (2 - 1/2)(2 - 3)
        assert_eq!(matrix_in_phi_basis(PhiOperator::M, p).get(1, 2), int(-3));
    }

    #[test]
    fn band_overflow_is_reported() {
        let mut a = BasisMatrix::zeros(4, BasisTag::Phi);
        a.sup = vec![int(1); 3];
        assert!(matches!(a.mul(&a), Err(Error::BandOverflow { .. })));
        assert!(a.set(0, 3, int(1)).is_err());
    }

    #[test]
    fn json_shape() {
        let m = matrix_in_phi_basis(PhiOperator::L, &sets()[0]);
        let v: serde_json::Value = serde_json::to_value(&m).unwrap();
        assert_eq!(v["basis_tag"], "phi");
        assert_eq!(v["order"], 3);
        assert_eq!(v["main"][0], "-2");
        assert_eq!(v["super"][0], "-2");
        let back: BasisMatrix = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
    }
}
