//! Seeded random inputs for property sweeps.

use rand::Rng;

use crate::grid::GridFunction;
use crate::kernel::rational::{rat, Rational};
use crate::kernel::ParameterSet;

/// Numerator in `[-span, span]`, denominator in `[1, span]`.
pub fn random_rational_in<R: Rng>(rng: &mut R, span: i64) -> Rational {
    let p = rng.gen_range(-span..=span);
    let q = rng.gen_range(1..=span);
    rat(p, q)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    random_rational_in(rng, 9)
}

pub fn random_grid_function<R: Rng>(rng: &mut R, big_n: u64) -> GridFunction {
    GridFunction::from_fn(big_n, |_| random_rational(rng))
}

/// A valid parameter set with the given `N`, resampling until no pole condition
/// is hit.
pub fn random_parameter_set<R: Rng>(rng: &mut R, big_n: u64) -> ParameterSet {
    loop {
        let alpha = random_rational_in(rng, 12);
        let beta = random_rational_in(rng, 12);
        if let Ok(p) = ParameterSet::new(alpha, beta, big_n) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_sampling_is_reproducible() {
        let a: Vec<_> = {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            (0..5).map(|_| random_rational(&mut rng)).collect()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b: Vec<_> = (0..5).map(|_| random_rational(&mut rng)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn sampled_parameters_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 0..8 {
            let p = random_parameter_set(&mut rng, n);
            assert!(ParameterSet::is_valid(p.alpha(), p.beta(), n));
        }
    }
}
