//! Computations over the 16 equivalent octonion multiplication rules.
//!
//! * [`algebra`]: octonions under rule `O[N]`, tables, identification.
//! * [`automorphism`]: the parity-flip group `Z2^4` and its orbit.
//! * [`expr`]: a small polynomial language evaluated under any rule.
//! * [`sieve`]: the 16-point Hadamard transform and the invariance check.
//! * [`derivation`]: inner derivations and their cross-rule comparisons.
//! * [`verify`]: the built-in check suite behind `octosieve verify`.
//!
//! ```
//! use octosieve::{multiply, AlgebraId, Octonion};
//!
//! let (i1, i2) = (Octonion::basis(1), Octonion::basis(2));
//! let n = AlgebraId::new(0).unwrap();
//! assert_eq!(multiply(&i1, &i2, n), Octonion::basis(3));
//! ```

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod automorphism;
pub mod cli;
pub mod derivation;
pub mod error;
pub mod expr;
pub mod octonion;
pub mod rank;
pub mod sampling;
pub mod sieve;
pub mod verify;

pub use algebra::{
    identify_algebra, inverse, mul_table, multiply, triplet_set, AlgebraId, MulTable, ParityWord,
    SignedUnit, Triplet, TripletSet,
};
pub use automorphism::{
    apply, chirality, compose, fano_lines, flip_pattern, orbit, Automorphism, Chirality,
    FlipPattern,
};
pub use derivation::{
    antiassoc_closed_form, cross_algebra_equal, derivation_span_rank, derive,
    expr_cross_algebra_equal, leibniz_check, AlgebraSet, LinearMap7,
};
pub use error::{Error, ParseError, Result};
pub use expr::{eval, free_vars, parse, Assignment, Expr};
pub use octonion::Octonion;
pub use sieve::{
    is_invariant, sieve, sign_entry, unsieve, DistanceFamily, FunctionFamily, SignMatrix, Verdict,
};
