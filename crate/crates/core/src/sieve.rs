//! The variance sieve: a 16-point Hadamard transform between the values of a
//! polynomial under each multiplication rule (the function family) and the
//! "distances" `g[k] = 1/4 * sum_j b[j][k] f[j]`.
//!
//! The sign matrix is `b[j][k] = (-1)^popcount(j & k)`. With the 1/4 scale
//! the transform is its own inverse. A polynomial is an algebraic invariant
//! when every distance except `g[0]` vanishes, i.e. its value does not depend
//! on the rule.

use serde::Serialize;

use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::expr::{eval, free_vars, Assignment, Expr};
use crate::octonion::Octonion;
use crate::sampling::{random_assignment, seeded_rng, DEFAULT_COEFF_BOUND};

/// Trials used by [`is_invariant`] callers that do not pick a count.
pub const DEFAULT_TRIALS: usize = 64;

/// Row generators `T0^b..T3^b`; row `k` of the sign matrix is the pointwise
/// product of the generators whose bit is set in `k` (`T0^b` is bit 8).
pub const GENERATOR_ROWS: [[i8; 16]; 4] = [
    [1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1],
    [1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1],
    [1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1],
    [1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1],
];

/// `(-1)^popcount(j & k)`.
///
/// # Panics
/// If either index is 16 or more.
pub fn sign_entry(j: usize, k: usize) -> i8 {
    assert!(j < 16 && k < 16, "sign matrix index out of range");
    if (j & k).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMatrix {
    entries: [[i8; 16]; 16],
}

impl SignMatrix {
    pub fn new() -> Self {
        SignMatrix {
            entries: std::array::from_fn(|j| std::array::from_fn(|k| sign_entry(j, k))),
        }
    }

    /// Builds every row as a product of [`GENERATOR_ROWS`].
    pub fn from_generators() -> Self {
        SignMatrix {
            entries: std::array::from_fn(|k| {
                let mut row = [1i8; 16];
                for (n, gen) in GENERATOR_ROWS.iter().enumerate() {
                    if k & (8 >> n) != 0 {
                        for (r, g) in row.iter_mut().zip(gen) {
                            *r *= g;
                        }
                    }
                }
                row
            }),
        }
    }

    pub fn get(&self, j: usize, k: usize) -> i8 {
        self.entries[j][k]
    }

    pub fn row(&self, k: usize) -> &[i8; 16] {
        &self.entries[k]
    }

    pub fn entries(&self) -> &[[i8; 16]; 16] {
        &self.entries
    }
}

impl Default for SignMatrix {
    fn default() -> Self {
        Self::new()
    }
}

/// `f[N]` for `N = 0..16`: one value per multiplication rule.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct FunctionFamily {
    values: [Octonion; 16],
}

/// `g[k]` for `k = 0..16`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct DistanceFamily {
    values: [Octonion; 16],
}

impl FunctionFamily {
    pub fn new(values: [Octonion; 16]) -> Self {
        FunctionFamily { values }
    }

    /// Evaluates `e` under each of the 16 rules.
    pub fn evaluate(e: &Expr, env: &Assignment) -> Result<Self> {
        let mut values = [Octonion::ZERO; 16];
        for n in AlgebraId::all() {
            values[n.index()] = eval(e, env, n)?;
        }
        Ok(FunctionFamily { values })
    }

    pub fn values(&self) -> &[Octonion; 16] {
        &self.values
    }

    pub fn get(&self, n: AlgebraId) -> Octonion {
        self.values[n.index()]
    }

    /// Relabels rules by `j -> j ^ mask`: entry `j` of the result is entry
    /// `j ^ mask` of `self`.
    pub fn permuted_by(&self, mask: u8) -> Self {
        let m = usize::from(mask & 15);
        FunctionFamily {
            values: std::array::from_fn(|j| self.values[j ^ m]),
        }
    }
}

impl DistanceFamily {
    pub fn new(values: [Octonion; 16]) -> Self {
        DistanceFamily { values }
    }

    pub fn values(&self) -> &[Octonion; 16] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Octonion {
        self.values[k]
    }

    /// `g[0] / 4`, the average of the function family.
    pub fn mean_function_value(&self) -> Octonion {
        self.values[0].scale(0.25)
    }

    /// First `k > 0` with a nonzero distance.
    pub fn first_nonzero_variance(&self) -> Option<usize> {
        (1..16).find(|&k| !self.values[k].is_zero())
    }

    pub fn is_invariant(&self) -> bool {
        self.first_nonzero_variance().is_none()
    }
}

/// In-place Walsh-Hadamard butterflies followed by the 1/4 scale.
fn hadamard(values: &[Octonion; 16]) -> [Octonion; 16] {
    let mut v = *values;
    let mut h = 1;
    while h < 16 {
        for block in (0..16).step_by(2 * h) {
            for i in block..block + h {
                let (x, y) = (v[i], v[i + h]);
                v[i] = x + y;
                v[i + h] = x - y;
            }
        }
        h *= 2;
    }
    v.map(|o| o.scale(0.25))
}

pub fn sieve(fam: &FunctionFamily) -> DistanceFamily {
    DistanceFamily {
        values: hadamard(&fam.values),
    }
}

pub fn unsieve(dist: &DistanceFamily) -> FunctionFamily {
    FunctionFamily {
        values: hadamard(&dist.values),
    }
}

/// A counterexample to invariance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub trial: usize,
    pub assignment: Assignment,
    pub distance_index: usize,
    pub distance: Octonion,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// No counterexample in `trials` random assignments.
    Invariant {
        trials: usize,
    },
    NotInvariant(Witness),
}

impl Verdict {
    pub fn is_invariant(&self) -> bool {
        matches!(self, Verdict::Invariant { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::NotInvariant(w) => Some(w),
            Verdict::Invariant { .. } => None,
        }
    }
}

/// Randomized refutation of invariance with integer coefficients in
/// `-DEFAULT_COEFF_BOUND..=DEFAULT_COEFF_BOUND`.
pub fn is_invariant(e: &Expr, trials: usize, seed: u64) -> Result<Verdict> {
    is_invariant_with_bound(e, trials, seed, DEFAULT_COEFF_BOUND)
}

pub fn is_invariant_with_bound(e: &Expr, trials: usize, seed: u64, bound: i64) -> Result<Verdict> {
    if trials == 0 {
        return Err(Error::PreconditionViolation(
            "invariance check needs at least one trial".into(),
        ));
    }
    let names = free_vars(e);
    let mut rng = seeded_rng(seed);
    for trial in 0..trials {
        let env = random_assignment(&names, &mut rng, bound);
        let dist = sieve(&FunctionFamily::evaluate(e, &env)?);
        if let Some(k) = dist.first_nonzero_variance() {
            return Ok(Verdict::NotInvariant(Witness {
                trial,
                assignment: env,
                distance_index: k,
                distance: dist.get(k),
            }));
        }
    }
    Ok(Verdict::Invariant { trials })
}
