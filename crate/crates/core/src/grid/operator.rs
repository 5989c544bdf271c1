//! Difference operators `A+ T+ + A- T- + A0 I` on the grid `x = 0..=N`.

use std::fmt;

use num::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::function::GridFunction;
use crate::biorth::scalar_product;
use crate::error::{Error, Result};
use crate::kernel::rational::{int, Rational};
use crate::kernel::ParameterSet;
use crate::sampling::random_grid_function;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperatorKind {
    L,
    M,
    Y,
    LStar,
    MStar,
    Custom,
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OperatorKind::L => "L",
            OperatorKind::M => "M",
            OperatorKind::Y => "Y",
            OperatorKind::LStar => "L*",
            OperatorKind::MStar => "M*",
            OperatorKind::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// Coefficients are stored as their values on the grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceOperator {
    kind: OperatorKind,
    big_n: u64,
    plus: Vec<Rational>,
    minus: Vec<Rational>,
    id: Vec<Rational>,
}

impl DifferenceOperator {
    /// Builds an operator from its coefficient values. `plus[N]` and
    /// `minus[0]` must vanish.
    pub fn from_coefficients(
        kind: OperatorKind,
        plus: Vec<Rational>,
        minus: Vec<Rational>,
        id: Vec<Rational>,
    ) -> Result<Self> {
        let len = plus.len();
        if len == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        for v in [&minus, &id] {
            if v.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    actual: v.len(),
                });
            }
        }
        if !plus[len - 1].is_zero() {
            return Err(Error::BoundaryLeak(len as i64));
        }
        if !minus[0].is_zero() {
            return Err(Error::BoundaryLeak(-1));
        }
        Ok(Self {
            kind,
            big_n: len as u64 - 1,
            plus,
            minus,
            id,
        })
    }

    fn tabulate(
        kind: OperatorKind,
        p: &ParameterSet,
        f: impl Fn(&Rational) -> (Rational, Rational, Rational),
    ) -> Result<Self> {
        let mut plus = Vec::with_capacity(p.grid_len());
        let mut minus = Vec::with_capacity(p.grid_len());
        let mut id = Vec::with_capacity(p.grid_len());
        for x in 0..=p.big_n() {
            let (a, b, c) = f(&int(x as i64));
            plus.push(a);
            minus.push(b);
            id.push(c);
        }
        Self::from_coefficients(kind, plus, minus, id)
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    pub fn coeff_plus(&self, x: u64) -> &Rational {
        &self.plus[x as usize]
    }

    pub fn coeff_minus(&self, x: u64) -> &Rational {
        &self.minus[x as usize]
    }

    pub fn coeff_id(&self, x: u64) -> &Rational {
        &self.id[x as usize]
    }

    /// Copy with one coefficient replaced; used to probe checkers.
    pub fn with_coeff_id(&self, x: u64, value: Rational) -> Self {
        let mut out = self.clone();
        out.id[x as usize] = value;
        out.kind = OperatorKind::Custom;
        out
    }

    /// `g(x) = A+(x) f(x+1) + A-(x) f(x-1) + A0(x) f(x)`.
    ///
    /// Off-grid neighbours are never read; a nonzero coefficient pointing at
    /// one is reported as a boundary leak.
    pub fn apply(&self, f: &GridFunction) -> Result<GridFunction> {
        let len = self.plus.len();
        if f.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                actual: f.len(),
            });
        }
        let mut out = Vec::with_capacity(len);
        for x in 0..len {
            let mut g = &self.id[x] * &f[x];
            if !self.plus[x].is_zero() {
                if x + 1 >= len {
                    return Err(Error::BoundaryLeak(len as i64));
                }
                g += &self.plus[x] * &f[x + 1];
            }
            if !self.minus[x].is_zero() {
                if x == 0 {
                    return Err(Error::BoundaryLeak(-1));
                }
                g += &self.minus[x] * &f[x - 1];
            }
            out.push(g);
        }
        GridFunction::new(out, self.big_n)
    }
}

/// Grid-level apply, free-function form.
pub fn apply_operator(op: &DifferenceOperator, f: &GridFunction) -> Result<GridFunction> {
    op.apply(f)
}

/// `A(x) = (N-x)(x-beta+1)`.
pub fn coeff_a(x: &Rational, p: &ParameterSet) -> Rational {
    let n = int(p.big_n() as i64);
    (&n - x) * (x - p.beta() + int(1))
}

/// `B(x) = x(alpha+beta+N+1-x)`.
pub fn coeff_b(x: &Rational, p: &ParameterSet) -> Rational {
    let n = int(p.big_n() as i64);
    x * (p.alpha() + p.beta() + n + int(1) - x)
}

/// `C(x) = -(A(x) + B(x))`.
pub fn coeff_c(x: &Rational, p: &ParameterSet) -> Rational {
    -(coeff_a(x, p) + coeff_b(x, p))
}

/// `L = (N-x) T+ + (x-N-alpha-1) I`.
pub fn make_l(p: &ParameterSet) -> Result<DifferenceOperator> {
    let n = int(p.big_n() as i64);
    DifferenceOperator::tabulate(OperatorKind::L, p, |x| {
        (&n - x, Rational::zero(), x - &n - p.alpha() - int(1))
    })
}

/// `M = A(x) T+ + B(x) T- + C(x) I`.
pub fn make_m(p: &ParameterSet) -> Result<DifferenceOperator> {
    DifferenceOperator::tabulate(OperatorKind::M, p, |x| {
        (coeff_a(x, p), coeff_b(x, p), coeff_c(x, p))
    })
}

/// `Y = x(N-x) T+ + x(x-N-alpha-1) I`, i.e. `x L`.
pub fn make_y(p: &ParameterSet) -> Result<DifferenceOperator> {
    let n = int(p.big_n() as i64);
    DifferenceOperator::tabulate(OperatorKind::Y, p, |x| {
        (
            x * (&n - x),
            Rational::zero(),
            x * (x - &n - p.alpha() - int(1)),
        )
    })
}

/// Adjoint of `L` under the weighted scalar product:
/// `L* = -x(1+alpha+beta+N-x)/(1+beta-x) T- + (x-N-alpha-1) I`.
pub fn make_adjoint_l(p: &ParameterSet) -> Result<DifferenceOperator> {
    let n = int(p.big_n() as i64);
    let (a, b) = (p.alpha(), p.beta());
    DifferenceOperator::tabulate(OperatorKind::LStar, p, |x| {
        let minus = -(x * (int(1) + a + b + &n - x)) / (int(1) + b - x);
        (Rational::zero(), minus, x - &n - a - int(1))
    })
}

/// Adjoint of `M`:
/// `M* = x(beta-x)(1+alpha+beta+N-x)/(1+beta-x) T- + (N-x)(x-beta) T+
///       + (2x^2 - (2N+2beta+alpha)x + (beta-1)N) I`.
pub fn make_adjoint_m(p: &ParameterSet) -> Result<DifferenceOperator> {
    let n = int(p.big_n() as i64);
    let (a, b) = (p.alpha(), p.beta());
    DifferenceOperator::tabulate(OperatorKind::MStar, p, |x| {
        let minus = x * (b - x) * (int(1) + a + b + &n - x) / (int(1) + b - x);
        let plus = (&n - x) * (x - b);
        let id = int(2) * x * x - (int(2) * &n + int(2) * b + a) * x + (b - int(1)) * &n;
        (plus, minus, id)
    })
}

/// Checks `(f, X g) = (X* f, g)` on `trials` random pairs.
pub fn adjoint_check<R: Rng>(
    op: &DifferenceOperator,
    op_star: &DifferenceOperator,
    p: &ParameterSet,
    trials: usize,
    rng: &mut R,
) -> Result<bool> {
    for _ in 0..trials {
        let f = random_grid_function(rng, p.big_n());
        let g = random_grid_function(rng, p.big_n());
        let lhs = scalar_product(&f, &op.apply(&g)?, p)?;
        let rhs = scalar_product(&op_star.apply(&f)?, &g, p)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p2() -> ParameterSet {
        ParameterSet::new(int(1), rat(1, 2), 2).unwrap()
    }

    #[test]
    fn l_coefficients() {
        let l = make_l(&p2()).unwrap();
        assert_eq!(l.coeff_plus(2), &int(0));
        assert_eq!(l.coeff_id(0), &int(-4));
        let l3 = make_l(&ParameterSet::new(rat(1, 2), rat(1, 3), 3).unwrap()).unwrap();
        assert_eq!(l3.coeff_plus(1), &int(2));
    }

    #[test]
    fn m_coefficients() {
        let p = p2();
        let m = make_m(&p).unwrap();
        assert_eq!(m.coeff_minus(0), &int(0));
        assert_eq!(m.coeff_plus(2), &int(0));
        assert_eq!(m.coeff_plus(1), &rat(3, 2));
        for x in 0..=2 {
            assert!((m.coeff_plus(x) + m.coeff_minus(x) + m.coeff_id(x)).is_zero());
        }
    }

    #[test]
    fn y_coefficients() {
        let p3 = ParameterSet::new(rat(1, 2), rat(1, 3), 3).unwrap();
        let y = make_y(&p3).unwrap();
        assert_eq!(y.coeff_plus(0), &int(0));
        assert_eq!(y.coeff_id(0), &int(0));
        assert_eq!(y.coeff_plus(2), &int(2));
    }

    #[test]
    fn adjoint_coefficients() {
        let p = p2();
        let ls = make_adjoint_l(&p).unwrap();
        assert_eq!(ls.coeff_minus(0), &int(0));
        assert_eq!(ls.coeff_id(1), &int(-3));
        let ms = make_adjoint_m(&p).unwrap();
        assert_eq!(ms.coeff_plus(2), &int(0));
        assert_eq!(ms.coeff_minus(0), &int(0));
    }

    #[test]
    fn apply_to_constants() {
        let p = p2();
        let one = GridFunction::constant(2, int(1));
        let g = make_l(&p).unwrap().apply(&one).unwrap();
        assert!(g.values().iter().all(|v| *v == int(-2)));
        assert!(make_m(&p).unwrap().apply(&one).unwrap().is_zero());
    }

    #[test]
    fn y_is_x_times_l() {
        let p = ParameterSet::new(rat(1, 3), rat(2, 5), 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (l, y) = (make_l(&p).unwrap(), make_y(&p).unwrap());
        for _ in 0..10 {
            let f = random_grid_function(&mut rng, 5);
            assert_eq!(y.apply(&f).unwrap(), l.apply(&f).unwrap().times_x());
        }
    }

    #[test]
    fn boundary_leaks_are_rejected() {
        let z = vec![int(0); 3];
        let mut plus = z.clone();
        plus[2] = int(1);
        assert_eq!(
            DifferenceOperator::from_coefficients(OperatorKind::Custom, plus, z.clone(), z.clone()),
            Err(Error::BoundaryLeak(3))
        );
        let mut minus = z.clone();
        minus[0] = int(1);
        assert_eq!(
            DifferenceOperator::from_coefficients(OperatorKind::Custom, z.clone(), minus, z),
            Err(Error::BoundaryLeak(-1))
        );
    }

    #[test]
    fn adjoint_pairs() {
        let p = ParameterSet::new(rat(1, 3), rat(2, 5), 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (l, ls) = (make_l(&p).unwrap(), make_adjoint_l(&p).unwrap());
        let (m, ms) = (make_m(&p).unwrap(), make_adjoint_m(&p).unwrap());
        assert!(adjoint_check(&l, &ls, &p, 20, &mut rng).unwrap());
        assert!(adjoint_check(&m, &ms, &p, 20, &mut rng).unwrap());
        let broken = ls.with_coeff_id(2, ls.coeff_id(2) + int(1));
        assert!(!adjoint_check(&l, &broken, &p, 5, &mut rng).unwrap());
    }
}
