//! Seeded integer-coefficient sampling.
//!
//! Small integer coefficients keep every product and sum exact in `f64`,
//! which is what lets the sieve and derivation checks compare with `==`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expr::Assignment;
use crate::octonion::Octonion;

/// Coefficient bound used when no other bound is given. Products of up to
/// eight factors stay below 2^53.
pub const DEFAULT_COEFF_BOUND: i64 = 16;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Octonion with coefficients drawn uniformly from `-bound..=bound`.
pub fn random_integer_octonion<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Octonion {
    Octonion::from_ints(std::array::from_fn(|_| rng.random_range(-bound..=bound)))
}

/// Binds each name, in the given order, to a fresh random octonion.
pub fn random_assignment<R: Rng + ?Sized>(names: &[String], rng: &mut R, bound: i64) -> Assignment {
    names
        .iter()
        .map(|name| (name.clone(), random_integer_octonion(rng, bound)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_values() {
        let a = random_integer_octonion(&mut seeded_rng(7), 10);
        let b = random_integer_octonion(&mut seeded_rng(7), 10);
        assert_eq!(a, b);
        assert!(a
            .coeffs()
            .iter()
            .all(|c| c.fract() == 0.0 && c.abs() <= 10.0));
    }
}
