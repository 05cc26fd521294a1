//! Octonion values as 8-tuples of real coefficients over `{1, i1, ..., i7}`.
//!
//! Multiplication depends on which of the 16 rules is in use, so it lives in
//! [`crate::algebra`]; this module only carries the vector-space structure,
//! conjugation and the norm.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion {
    coeffs: [f64; 8],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { coeffs: [0.0; 8] };
    pub const ONE: Octonion = Octonion {
        coeffs: [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    };

    pub const fn new(coeffs: [f64; 8]) -> Self {
        Octonion { coeffs }
    }

    /// Like [`Octonion::new`] but rejects NaN and infinite coefficients.
    pub fn try_new(coeffs: [f64; 8]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(Octonion { coeffs })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn from_ints(coeffs: [i64; 8]) -> Self {
        Octonion {
            coeffs: coeffs.map(|c| c as f64),
        }
    }

    pub const fn real(x: f64) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[0] = x;
        Octonion { coeffs }
    }

    /// Basis element `i_k` (`k = 0` is the real unit).
    ///
    /// # Panics
    /// If `k > 7`.
    pub fn basis(k: usize) -> Self {
        assert!(k < 8, "basis index {k} out of range");
        let mut coeffs = [0.0; 8];
        coeffs[k] = 1.0;
        Octonion { coeffs }
    }

    pub fn coeffs(&self) -> &[f64; 8] {
        &self.coeffs
    }

    pub fn real_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// True when every imaginary coefficient is zero.
    pub fn is_real(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0.0)
    }

    pub fn conjugate(&self) -> Self {
        let mut out = self.coeffs.map(|c| -c);
        out[0] = self.coeffs[0];
        Octonion { coeffs: out }
    }

    /// Squared Euclidean length; exact for small integer coefficients.
    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Octonion {
            coeffs: self.coeffs.map(|c| c * s),
        }
    }
}

impl From<[f64; 8]> for Octonion {
    fn from(coeffs: [f64; 8]) -> Self {
        Octonion::new(coeffs)
    }
}

impl Index<usize> for Octonion {
    type Output = f64;

    fn index(&self, k: usize) -> &f64 {
        &self.coeffs[k]
    }
}

impl Add for Octonion {
    type Output = Octonion;

    fn add(mut self, rhs: Octonion) -> Octonion {
        self += rhs;
        self
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;

    fn sub(mut self, rhs: Octonion) -> Octonion {
        self -= rhs;
        self
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        Octonion {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;

    fn mul(self, s: f64) -> Octonion {
        self.scale(s)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            // adding 0.0 turns -0 into 0
            write!(f, "{}", c + 0.0)?;
        }
        write!(f, ")")
    }
}
