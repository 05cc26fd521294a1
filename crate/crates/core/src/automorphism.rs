//! Duality automorphisms `T0..T3` acting on triplet parities.
//!
//! Each generator swaps the parity of a fixed subset of the seven reference
//! triplets. Composition is XOR of 4-bit masks, so the generated group is
//! `Z2^4`. Bit weights follow [`AlgebraId`]: `T0 = 8`, `T1 = 4`, `T2 = 2`,
//! `T3 = 1`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{triplet_set, AlgebraId, ParityWord, TripletSet};
use crate::error::{Error, Result};

/// Generator flip patterns indexed by `T_j`; bit `k` set swaps triplet `k`.
const GENERATOR_FLIPS: [[bool; 7]; 4] = [
    [false, false, false, false, true, true, true],
    [true, true, true, true, false, false, false],
    [false, true, false, true, true, false, true],
    [false, false, true, true, false, true, true],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Automorphism(u8);

impl Automorphism {
    pub const IDENTITY: Automorphism = Automorphism(0);
    pub const T0: Automorphism = Automorphism(8);
    pub const T1: Automorphism = Automorphism(4);
    pub const T2: Automorphism = Automorphism(2);
    pub const T3: Automorphism = Automorphism(1);

    pub fn from_mask(mask: u8) -> Result<Self> {
        if mask < 16 {
            Ok(Automorphism(mask))
        } else {
            Err(Error::PreconditionViolation(format!(
                "automorphism mask {mask} exceeds 4 bits"
            )))
        }
    }

    /// `T_j` for `j` in `0..4`.
    pub fn generator(j: usize) -> Self {
        assert!(j < 4, "generator index {j} out of range");
        Automorphism(8 >> j)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Automorphism> {
        (0..16).map(Automorphism)
    }

    /// True if generator `T_j` participates.
    pub fn uses(self, j: usize) -> bool {
        self.0 & (8 >> j) != 0
    }

    pub fn compose(self, other: Automorphism) -> Automorphism {
        Automorphism(self.0 ^ other.0)
    }

    /// The rule reached from the reference rule through `self`.
    pub fn algebra(self) -> AlgebraId {
        AlgebraId::new(self.0).expect("mask < 16")
    }
}

/// Product word such as `T1*T3`; the identity prints as `id`.
impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("id");
        }
        let mut first = true;
        for j in 0..4 {
            if self.uses(j) {
                if !first {
                    f.write_str("*")?;
                }
                write!(f, "T{j}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Which of the seven triplets have their parity swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FlipPattern(u8);

impl FlipPattern {
    pub fn from_flags(flags: [bool; 7]) -> Self {
        FlipPattern(
            flags
                .iter()
                .enumerate()
                .fold(0, |acc, (k, &f)| acc | (u8::from(f) << k)),
        )
    }

    pub fn flags(self) -> [bool; 7] {
        std::array::from_fn(|k| self.0 >> k & 1 == 1)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn flip_count(self) -> u32 {
        self.0.count_ones()
    }
}

pub fn flip_pattern(a: Automorphism) -> FlipPattern {
    (0..4)
        .filter(|&j| a.uses(j))
        .map(|j| FlipPattern::from_flags(GENERATOR_FLIPS[j]).0)
        .fold(FlipPattern(0), |acc, bits| FlipPattern(acc.0 ^ bits))
}

pub fn compose(a: Automorphism, b: Automorphism) -> Automorphism {
    a.compose(b)
}

/// Swaps the parity of every triplet flagged by `a`.
pub fn apply(a: Automorphism, t: &TripletSet) -> TripletSet {
    let bits = t.parity().bits() ^ flip_pattern(a).bits();
    TripletSet::from_parity(ParityWord::from_bits(bits).expect("7-bit word"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    pub algebra: AlgebraId,
    #[serde(serialize_with = "serialize_display")]
    pub automorphism: Automorphism,
    pub parity: ParityWord,
}

fn serialize_display<S: serde::Serializer>(
    a: &Automorphism,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(a)
}

/// The 16 images of the reference triplet set, in algebra-id order.
pub fn orbit() -> Vec<OrbitEntry> {
    AlgebraId::all()
        .map(|n| {
            let a = n.automorphism();
            OrbitEntry {
                algebra: n,
                automorphism: a,
                parity: apply(a, &TripletSet::reference()).parity(),
            }
        })
        .collect()
}

/// Lines `{a, b, a*b}` of the Fano plane formed by the seven non-identity
/// elements of `<T1, T2, T3>`. Each line is sorted by mask and the lines are
/// listed in ascending order.
pub fn fano_lines() -> Vec<[Automorphism; 3]> {
    let mut lines = Vec::with_capacity(7);
    for a in 1..8u8 {
        for b in (a + 1)..8 {
            let c = a ^ b;
            if c > b {
                lines.push([Automorphism(a), Automorphism(b), Automorphism(c)]);
            }
        }
    }
    lines
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Left,
    Right,
}

pub fn chirality(n: AlgebraId) -> Chirality {
    if n.get() < 8 {
        Chirality::Left
    } else {
        Chirality::Right
    }
}

/// For triplet `k`, which generators `(T0, T1, T2, T3)` swap its parity.
pub fn flip_signature(k: usize) -> [bool; 4] {
    std::array::from_fn(|j| GENERATOR_FLIPS[j][k])
}

/// Parity word of rule `n`, shortcut for `triplet_set(n).1`.
pub fn parity_word(n: AlgebraId) -> ParityWord {
    triplet_set(n).1
}
