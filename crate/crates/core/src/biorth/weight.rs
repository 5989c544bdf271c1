use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridFunction;
use crate::kernel::pochhammer::pochhammer;
use crate::kernel::rational::{factorial, int, serde_str, Rational};
use crate::kernel::ParameterSet;

/// `(-alpha-beta-N)_N / (-alpha-N)_N`, the factor normalising the weights to sum 1.
pub fn weight_prefactor(p: &ParameterSet) -> Rational {
    let n = int(p.big_n() as i64);
    let top = pochhammer(&(-p.alpha() - p.beta() - &n), p.big_n());
    let bottom = pochhammer(&(-p.alpha() - &n), p.big_n());
    top / bottom
}

/// The same factor written as `(alpha+beta+1)_N / (alpha+1)_N`.
pub fn weight_prefactor_reflected(p: &ParameterSet) -> Rational {
    let top = pochhammer(&(p.alpha() + p.beta() + int(1)), p.big_n());
    let bottom = pochhammer(&(p.alpha() + int(1)), p.big_n());
    top / bottom
}

/// `w_x = pre * (-N)_x (-beta)_x / (x! (-alpha-beta-N)_x)`. May be negative.
pub fn weight(x: u64, p: &ParameterSet) -> Result<Rational> {
    if x > p.big_n() {
        return Err(Error::IndexOutOfRange {
            index: x as usize,
            max: p.big_n() as usize,
        });
    }
    let n = int(p.big_n() as i64);
    let num = pochhammer(&(-&n), x) * pochhammer(&(-p.beta()), x);
    let den = factorial(x) * pochhammer(&(-p.alpha() - p.beta() - &n), x);
    Ok(weight_prefactor(p) * num / den)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVector {
    pub params: ParameterSet,
    #[serde(with = "serde_str::vec")]
    pub values: Vec<Rational>,
}

impl WeightVector {
    pub fn new(p: &ParameterSet) -> Self {
        let values = (0..=p.big_n())
            .map(|x| weight(x, p).expect("x is on the grid"))
            .collect();
        Self {
            params: p.clone(),
            values,
        }
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    /// `sum_x w_x f(x) g(x)`.
    pub fn pair(&self, f: &GridFunction, g: &GridFunction) -> Result<Rational> {
        let len = self.values.len();
        for h in [f, g] {
            if h.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    actual: h.len(),
                });
            }
        }
        Ok(self
            .values
            .iter()
            .enumerate()
            .map(|(x, w)| w * &f[x] * &g[x])
            .sum())
    }
}

/// `(f, g) = sum_x w_x f(x) g(x)`.
pub fn scalar_product(f: &GridFunction, g: &GridFunction, p: &ParameterSet) -> Result<Rational> {
    WeightVector::new(p).pair(f, g)
}

/// `h_n = n! (1+alpha+beta)_n / ((-N)_n (beta)_n)`.
pub fn normalization_h(n: u64, p: &ParameterSet) -> Result<Rational> {
    p.check_degree(n)?;
    let num = factorial(n) * pochhammer(&(p.alpha() + p.beta() + int(1)), n);
    let den = pochhammer(&int(-(p.big_n() as i64)), n) * pochhammer(p.beta(), n);
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;
    use crate::sampling::{random_grid_function, random_parameter_set, random_rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p2() -> ParameterSet {
        ParameterSet::new(int(1), rat(1, 2), 2).unwrap()
    }

    #[test]
    fn small_weights() {
        let w = WeightVector::new(&p2());
        assert_eq!(w.values, vec![rat(35, 24), rat(-5, 12), rat(-1, 24)]);
        assert_eq!(w.total(), int(1));
    }

    #[test]
    fn weights_sum_to_one_and_prefactor_reflects() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 0..9 {
            let p = random_parameter_set(&mut rng, n);
            assert_eq!(WeightVector::new(&p).total(), int(1));
            assert_eq!(weight_prefactor(&p), weight_prefactor_reflected(&p));
        }
    }

    #[test]
    fn norms() {
        let p = p2();
        assert_eq!(normalization_h(0, &p).unwrap(), int(1));
        assert_eq!(normalization_h(1, &p).unwrap(), rat(-5, 2));
        assert_eq!(normalization_h(2, &p).unwrap(), rat(35, 3));
        assert!(normalization_h(3, &p).is_err());
    }

    #[test]
    fn scalar_product_is_bilinear() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let p = ParameterSet::new(rat(1, 3), rat(2, 5), 5).unwrap();
        let one = GridFunction::constant(5, int(1));
        assert_eq!(scalar_product(&one, &one, &p).unwrap(), int(1));
        for _ in 0..10 {
            let (f, g, h) = (
                random_grid_function(&mut rng, 5),
                random_grid_function(&mut rng, 5),
                random_grid_function(&mut rng, 5),
            );
            let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
            let lhs = scalar_product(&f.scale(&a).add(&g.scale(&b)).unwrap(), &h, &p).unwrap();
            let rhs =
                a * scalar_product(&f, &h, &p).unwrap() + b * scalar_product(&g, &h, &p).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
