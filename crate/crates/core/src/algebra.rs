//! The 16 equivalent octonion multiplication rules.
//!
//! Every rule uses the same seven Fano lines; they differ only in the
//! orientation (parity) of each line. A rule is identified by an
//! [`AlgebraId`] `n = 8*x0 + 4*x1 + 2*x2 + x3`, where `x_j = 1` means the
//! duality automorphism `T_j` was applied to the reference triplet set.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::automorphism::{flip_pattern, Automorphism};
use crate::error::{Error, Result};
use crate::octonion::Octonion;

/// Reference triplet set, all seven lines with positive parity.
pub const REFERENCE_TRIPLETS: [[u8; 3]; 7] = [
    [1, 2, 3],
    [7, 6, 1],
    [5, 7, 2],
    [6, 5, 3],
    [1, 4, 5],
    [2, 4, 6],
    [3, 4, 7],
];

/// Index of one of the 16 multiplication rules, `0..=15`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct AlgebraId(u8);

impl AlgebraId {
    pub const COUNT: usize = 16;
    pub const REFERENCE: AlgebraId = AlgebraId(0);

    pub fn new(n: u8) -> Result<Self> {
        if n < 16 {
            Ok(AlgebraId(n))
        } else {
            Err(Error::InvalidAlgebraId(n.into()))
        }
    }

    pub fn all() -> impl Iterator<Item = AlgebraId> + Clone {
        (0..16).map(AlgebraId)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The automorphism that maps the reference rule onto this one.
    pub fn automorphism(self) -> Automorphism {
        Automorphism::from_mask(self.0).expect("algebra id is a 4-bit mask")
    }

    pub(crate) fn from_index(n: usize) -> Self {
        debug_assert!(n < 16);
        AlgebraId(n as u8)
    }
}

impl TryFrom<i64> for AlgebraId {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        u8::try_from(n)
            .ok()
            .filter(|&n| n < 16)
            .map(AlgebraId)
            .ok_or(Error::InvalidAlgebraId(n))
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An ordered triple of distinct imaginary basis indices `(l, m, k)`
/// meaning `i_l i_m = i_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Triplet([u8; 3]);

impl Triplet {
    pub fn new(indices: [u8; 3]) -> Result<Self> {
        let [l, m, k] = indices;
        let in_range = indices.iter().all(|i| (1..=7).contains(i));
        if !in_range || l == m || m == k || l == k {
            return Err(Error::InvalidTriplet(indices));
        }
        Ok(Triplet(indices))
    }

    pub fn indices(&self) -> [u8; 3] {
        self.0
    }

    /// Odd permutation keeping the first index in place.
    pub fn flipped(&self) -> Triplet {
        let [l, m, k] = self.0;
        Triplet([l, k, m])
    }

    pub fn contains(&self, i: u8) -> bool {
        self.0.contains(&i)
    }

    fn sorted(&self) -> [u8; 3] {
        let mut s = self.0;
        s.sort_unstable();
        s
    }

    /// `Some(true)` if `other` is an even permutation of `self`, `Some(false)`
    /// if odd, `None` if the two triplets are different sets.
    fn relative_parity(&self, other: &Triplet) -> Option<bool> {
        if self.sorted() != other.sorted() {
            return None;
        }
        let [a, b, c] = self.0;
        let even = [[a, b, c], [b, c, a], [c, a, b]];
        Some(even.contains(&other.0))
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [l, m, k] = self.0;
        write!(f, "{{{l},{m},{k}}}")
    }
}

/// Orientation of each of the seven reference triplets; bit `k` set means
/// triplet `k` has odd parity (`-`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityWord(u8);

impl ParityWord {
    pub const ALL_EVEN: ParityWord = ParityWord(0);

    pub fn from_bits(bits: u8) -> Result<Self> {
        if bits < 0x80 {
            Ok(ParityWord(bits))
        } else {
            Err(Error::InvalidParityWord(format!("{bits:#b}")))
        }
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// True if triplet `k` carries odd parity.
    pub fn is_odd(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn signs(self) -> [bool; 7] {
        std::array::from_fn(|k| !self.is_odd(k))
    }

    pub fn odd_count(self) -> u32 {
        self.0.count_ones()
    }
}

impl fmt::Display for ParityWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..7 {
            f.write_str(if self.is_odd(k) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl FromStr for ParityWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u8;
        let mut count = 0;
        for (k, ch) in s.chars().enumerate() {
            match ch {
                '+' | '\u{FF0B}' => {}
                '-' | '\u{2212}' => {
                    if k < 7 {
                        bits |= 1 << k;
                    }
                }
                _ => return Err(Error::InvalidParityWord(s.to_string())),
            }
            count += 1;
        }
        if count != 7 {
            return Err(Error::InvalidParityWord(s.to_string()));
        }
        Ok(ParityWord(bits))
    }
}

impl Serialize for ParityWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Seven oriented associative triplets, stored as a parity word over the
/// reference ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripletSet {
    parity: ParityWord,
}

impl TripletSet {
    pub fn reference() -> Self {
        TripletSet {
            parity: ParityWord::ALL_EVEN,
        }
    }

    pub fn from_parity(parity: ParityWord) -> Self {
        TripletSet { parity }
    }

    /// Builds a triplet set from seven oriented triplets given in any order.
    ///
    /// Every unordered pair of imaginary indices must appear in exactly one
    /// triplet, and the lines must be the reference Fano lines.
    pub fn from_triplets(triplets: &[Triplet]) -> Result<Self> {
        if triplets.len() != 7 {
            return Err(Error::InvalidTripletSet(format!(
                "expected 7 triplets, got {}",
                triplets.len()
            )));
        }
        let mut pair_seen = [[false; 8]; 8];
        for t in triplets {
            let [l, m, k] = t.indices().map(usize::from);
            for (a, b) in [(l, m), (m, k), (l, k)] {
                let (a, b) = (a.min(b), a.max(b));
                if pair_seen[a][b] {
                    return Err(Error::InvalidTripletSet(format!(
                        "pair {{{a},{b}}} occurs in more than one triplet"
                    )));
                }
                pair_seen[a][b] = true;
            }
        }
        let mut bits = 0u8;
        for (k, reference) in REFERENCE_TRIPLETS.iter().enumerate() {
            let reference = Triplet(*reference);
            let even = triplets
                .iter()
                .find_map(|t| reference.relative_parity(t))
                .ok_or_else(|| {
                    Error::InvalidTripletSet(format!("missing reference line {reference}"))
                })?;
            if !even {
                bits |= 1 << k;
            }
        }
        Ok(TripletSet {
            parity: ParityWord(bits),
        })
    }

    pub fn parity(&self) -> ParityWord {
        self.parity
    }

    /// Oriented triplets in reference order; odd lines have their last two
    /// indices swapped.
    pub fn triplets(&self) -> [Triplet; 7] {
        std::array::from_fn(|k| {
            let t = Triplet(REFERENCE_TRIPLETS[k]);
            if self.parity.is_odd(k) {
                t.flipped()
            } else {
                t
            }
        })
    }

    /// Returns the oriented triplet that contains both `a` and `b`, if any.
    pub fn line_through(&self, a: u8, b: u8) -> Option<Triplet> {
        self.triplets()
            .into_iter()
            .find(|t| t.contains(a) && t.contains(b))
    }

    /// True if `{a, b, c}` (all imaginary, pairwise distinct) is one of the
    /// associative triplets.
    pub fn is_associative(&self, a: u8, b: u8, c: u8) -> bool {
        a != b && b != c && a != c && {
            let mut s = [a, b, c];
            s.sort_unstable();
            self.triplets().iter().any(|t| t.sorted() == s)
        }
    }
}

impl Serialize for TripletSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TripletSet", 2)?;
        st.serialize_field("triplets", &self.triplets())?;
        st.serialize_field("parity", &self.parity)?;
        st.end()
    }
}

/// `t[n]` together with its parity word.
pub fn triplet_set(n: AlgebraId) -> (TripletSet, ParityWord) {
    let parity = ParityWord(flip_pattern(n.automorphism()).bits());
    (TripletSet::from_parity(parity), parity)
}

/// Signed basis element `sign * i_index` (`index 0` is the real unit).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedUnit {
    pub sign: i8,
    pub index: u8,
}

impl SignedUnit {
    pub const fn pos(index: u8) -> Self {
        SignedUnit { sign: 1, index }
    }

    pub const fn neg(index: u8) -> Self {
        SignedUnit { sign: -1, index }
    }

    pub fn negated(self) -> Self {
        SignedUnit {
            sign: -self.sign,
            index: self.index,
        }
    }

    pub fn to_octonion(self) -> Octonion {
        Octonion::basis(self.index.into()).scale(self.sign.into())
    }
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { '-' } else { '+' };
        if self.index == 0 {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}i{}", self.index)
        }
    }
}

impl Serialize for SignedUnit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Product table of basis elements: `entries[l][m] = i_l * i_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MulTable {
    entries: [[SignedUnit; 8]; 8],
}

impl MulTable {
    /// Validates identity row/column, `i_n^2 = -1`, anticommutation and
    /// closure.
    pub fn from_entries(entries: [[SignedUnit; 8]; 8]) -> Result<Self> {
        let bad = |msg: String| Err(Error::NotAnEquivalentAlgebra(msg));
        for (l, row) in entries.iter().enumerate() {
            for (m, e) in row.iter().enumerate() {
                if e.sign.abs() != 1 || e.index > 7 {
                    return bad(format!("entry [{l}][{m}] is not a signed basis element"));
                }
            }
        }
        for k in 0..8u8 {
            let ku = k as usize;
            if entries[0][ku] != SignedUnit::pos(k) || entries[ku][0] != SignedUnit::pos(k) {
                return bad(format!("real unit does not act as identity on i{k}"));
            }
        }
        for n in 1..8 {
            if entries[n][n] != SignedUnit::neg(0) {
                return bad(format!("i{n}^2 is not -1"));
            }
        }
        for l in 1..8 {
            for m in 1..8 {
                if l != m && entries[l][m] != entries[m][l].negated() {
                    return bad(format!("i{l} and i{m} do not anticommute"));
                }
            }
        }
        Ok(MulTable { entries })
    }

    /// Converts a dense structure tensor (`tensor[l][m][k]` = coefficient of
    /// `i_k` in `i_l i_m`) into a table. Every product must be a single signed
    /// basis element.
    pub fn from_structure_tensor(tensor: &[[[f64; 8]; 8]; 8]) -> Result<Self> {
        let mut entries = [[SignedUnit::pos(0); 8]; 8];
        for l in 0..8 {
            for m in 0..8 {
                let mut found = None;
                for (k, &c) in tensor[l][m].iter().enumerate() {
                    if c == 0.0 {
                        continue;
                    }
                    if found.is_some() || (c != 1.0 && c != -1.0) {
                        return Err(Error::NotAnEquivalentAlgebra(format!(
                            "product i{l}*i{m} is not a signed basis element"
                        )));
                    }
                    found = Some(SignedUnit {
                        sign: c as i8,
                        index: k as u8,
                    });
                }
                entries[l][m] = found.ok_or_else(|| {
                    Error::NotAnEquivalentAlgebra(format!("product i{l}*i{m} is zero"))
                })?;
            }
        }
        MulTable::from_entries(entries)
    }

    pub fn to_structure_tensor(&self) -> [[[f64; 8]; 8]; 8] {
        let mut t = [[[0.0; 8]; 8]; 8];
        for l in 0..8 {
            for m in 0..8 {
                let e = self.entries[l][m];
                t[l][m][e.index as usize] = e.sign.into();
            }
        }
        t
    }

    pub fn entries(&self) -> &[[SignedUnit; 8]; 8] {
        &self.entries
    }

    pub fn get(&self, l: usize, m: usize) -> SignedUnit {
        self.entries[l][m]
    }

    /// Bilinear extension of the basis table.
    pub fn multiply(&self, a: &Octonion, b: &Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for (l, &x) in a.coeffs().iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            for (m, &y) in b.coeffs().iter().enumerate() {
                if y == 0.0 {
                    continue;
                }
                let e = self.entries[l][m];
                let p = x * y;
                if e.sign > 0 {
                    out[e.index as usize] += p;
                } else {
                    out[e.index as usize] -= p;
                }
            }
        }
        Octonion::new(out)
    }

    fn build(set: &TripletSet) -> MulTable {
        let mut entries = [[SignedUnit::neg(0); 8]; 8];
        for k in 0..8u8 {
            entries[0][k as usize] = SignedUnit::pos(k);
            entries[k as usize][0] = SignedUnit::pos(k);
        }
        for t in set.triplets() {
            let [l, m, k] = t.indices();
            for (x, y, z) in [(l, m, k), (m, k, l), (k, l, m)] {
                entries[x as usize][y as usize] = SignedUnit::pos(z);
                entries[y as usize][x as usize] = SignedUnit::neg(z);
            }
        }
        MulTable { entries }
    }
}

impl fmt::Display for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>5}", "*")?;
        for m in 0..8 {
            let head = if m == 0 {
                "1".to_string()
            } else {
                format!("i{m}")
            };
            write!(f, "{head:>5}")?;
        }
        writeln!(f)?;
        for l in 0..8 {
            let head = if l == 0 {
                "1".to_string()
            } else {
                format!("i{l}")
            };
            write!(f, "{head:>5}")?;
            for m in 0..8 {
                write!(f, "{:>5}", self.entries[l][m].to_string())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn tables() -> &'static [MulTable; 16] {
    static TABLES: OnceLock<[MulTable; 16]> = OnceLock::new();
    TABLES.get_or_init(|| {
        std::array::from_fn(|n| MulTable::build(&triplet_set(AlgebraId::from_index(n)).0))
    })
}

pub fn mul_table(n: AlgebraId) -> MulTable {
    tables()[n.index()]
}

/// Product `a * b` under rule `n`.
pub fn multiply(a: &Octonion, b: &Octonion, n: AlgebraId) -> Octonion {
    tables()[n.index()].multiply(a, b)
}

/// `conj(a) / |a|^2`. The result is the same under every rule, but `n` is
/// kept so the call mirrors [`multiply`].
pub fn inverse(a: &Octonion, _n: AlgebraId) -> Result<Octonion> {
    let d = a.norm_sqr();
    if d == 0.0 {
        return Err(Error::DivisionByZero);
    }
    Ok(a.conjugate().scale(1.0 / d))
}

/// Finds the rule whose table equals `table`.
pub fn identify_algebra(table: &MulTable) -> Result<AlgebraId> {
    AlgebraId::all()
        .find(|&n| &tables()[n.index()] == table)
        .ok_or_else(|| {
            Error::NotAnEquivalentAlgebra("table matches none of the 16 rules".to_string())
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(n: u8) -> AlgebraId {
        AlgebraId::new(n).unwrap()
    }

    #[test]
    fn algebra_id_range() {
        assert!(AlgebraId::new(15).is_ok());
        assert_eq!(AlgebraId::new(16), Err(Error::InvalidAlgebraId(16)));
        assert_eq!(AlgebraId::try_from(-1), Err(Error::InvalidAlgebraId(-1)));
        assert_eq!(AlgebraId::all().count(), 16);
    }

    #[test]
    fn reference_set_is_paper_listing() {
        let (set, parity) = triplet_set(id(0));
        assert_eq!(parity.to_string(), "+++++++");
        let listed: Vec<[u8; 3]> = set.triplets().iter().map(|t| t.indices()).collect();
        assert_eq!(listed, REFERENCE_TRIPLETS.to_vec());
    }

    #[test]
    fn flipped_triplets_swap_last_two() {
        let (set, parity) = triplet_set(id(1));
        assert_eq!(parity.to_string(), "++--+--");
        let listed: Vec<[u8; 3]> = set.triplets().iter().map(|t| t.indices()).collect();
        assert_eq!(
            listed,
            vec![
                [1, 2, 3],
                [7, 6, 1],
                [5, 2, 7],
                [6, 3, 5],
                [1, 4, 5],
                [2, 6, 4],
                [3, 7, 4]
            ]
        );
    }

    #[test]
    fn t0_t1_flips_everything() {
        assert_eq!(triplet_set(id(12)).1.to_string(), "-------");
    }

    #[test]
    fn parity_word_parses() {
        let p: ParityWord = "++--+--".parse().unwrap();
        assert_eq!(p, triplet_set(id(1)).1);
        assert!("++-".parse::<ParityWord>().is_err());
        assert!("++--+-x".parse::<ParityWord>().is_err());
    }

    #[test]
    fn triplet_set_from_rotated_triplets() {
        let ts: Vec<Triplet> = [
            [2, 3, 1],
            [6, 1, 7],
            [5, 2, 7],
            [3, 5, 6],
            [4, 5, 1],
            [2, 6, 4],
            [7, 4, 3],
        ]
        .iter()
        .map(|&t| Triplet::new(t).unwrap())
        .collect();
        let set = TripletSet::from_triplets(&ts).unwrap();
        assert_eq!(set.parity().to_string(), "++--+--");
    }

    #[test]
    fn triplet_set_rejects_repeated_pair() {
        let mut ts: Vec<Triplet> = REFERENCE_TRIPLETS
            .iter()
            .map(|&t| Triplet::new(t).unwrap())
            .collect();
        ts[0] = Triplet::new([1, 2, 4]).unwrap();
        assert!(matches!(
            TripletSet::from_triplets(&ts),
            Err(Error::InvalidTripletSet(_))
        ));
        assert!(TripletSet::from_triplets(&ts[..6]).is_err());
    }

    #[test]
    fn invalid_triplet() {
        assert!(Triplet::new([1, 1, 2]).is_err());
        assert!(Triplet::new([0, 1, 2]).is_err());
        assert!(Triplet::new([1, 2, 8]).is_err());
    }

    #[test]
    fn table_entries() {
        let t0 = mul_table(id(0));
        assert_eq!(t0.get(1, 2), SignedUnit::pos(3));
        assert_eq!(t0.get(3, 3), SignedUnit::neg(0));
        assert_eq!(mul_table(id(4)).get(1, 2), SignedUnit::neg(3));
    }

    #[test]
    fn every_table_passes_validation() {
        for n in AlgebraId::all() {
            let t = mul_table(n);
            assert_eq!(MulTable::from_entries(*t.entries()), Ok(t));
        }
    }

    #[test]
    fn multiply_basis() {
        let (i1, i2, i3) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(3));
        assert_eq!(multiply(&i1, &i2, id(0)), i3);
        assert_eq!(multiply(&i1, &i2, id(4)), -i3);
        let x = Octonion::from_ints([3, -1, 4, 1, -5, 9, 2, -6]);
        for n in AlgebraId::all() {
            assert_eq!(multiply(&Octonion::ONE, &x, n), x);
            assert_eq!(multiply(&x, &Octonion::ONE, n), x);
        }
    }

    #[test]
    fn norm_example() {
        let a = Octonion::from_ints([1, 1, 0, 0, 0, 0, 0, 0]);
        let b = Octonion::from_ints([0, 1, 1, 0, 0, 0, 0, 0]);
        for n in AlgebraId::all() {
            assert_eq!(multiply(&a, &b, n).norm(), 2.0);
        }
    }

    #[test]
    fn inverse_examples() {
        let i1 = Octonion::basis(1);
        assert_eq!(inverse(&i1, id(0)).unwrap(), -i1);
        assert_eq!(
            inverse(&Octonion::real(2.0), id(3)).unwrap(),
            Octonion::real(0.5)
        );
        assert_eq!(inverse(&Octonion::ZERO, id(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn identify_round_trip_and_reject() {
        for n in AlgebraId::all() {
            assert_eq!(identify_algebra(&mul_table(n)), Ok(n));
        }
        let mut e = *mul_table(id(0)).entries();
        e[1][2] = SignedUnit::pos(4);
        e[2][1] = SignedUnit::neg(4);
        let mutated = MulTable::from_entries(e).unwrap();
        assert!(matches!(
            identify_algebra(&mutated),
            Err(Error::NotAnEquivalentAlgebra(_))
        ));
    }

    #[test]
    fn table_validation_errors() {
        let mut e = *mul_table(id(0)).entries();
        e[2][1] = SignedUnit::pos(3);
        assert!(MulTable::from_entries(e).is_err());
        let mut e = *mul_table(id(0)).entries();
        e[5][5] = SignedUnit::pos(0);
        assert!(MulTable::from_entries(e).is_err());
        let mut e = *mul_table(id(0)).entries();
        e[0][3] = SignedUnit::pos(4);
        assert!(MulTable::from_entries(e).is_err());
        let mut e = *mul_table(id(0)).entries();
        e[4][6] = SignedUnit { sign: 2, index: 2 };
        assert!(MulTable::from_entries(e).is_err());
    }

    #[test]
    fn tensor_adapter() {
        for n in AlgebraId::all() {
            let t = mul_table(n);
            assert_eq!(
                MulTable::from_structure_tensor(&t.to_structure_tensor()),
                Ok(t)
            );
        }
        let mut tensor = mul_table(id(0)).to_structure_tensor();
        tensor[1][2][3] = 0.5;
        assert!(MulTable::from_structure_tensor(&tensor).is_err());
        let mut tensor = mul_table(id(0)).to_structure_tensor();
        tensor[1][2][4] = 1.0;
        assert!(MulTable::from_structure_tensor(&tensor).is_err());
    }

    #[test]
    fn serialization_forms() {
        let (set, _) = triplet_set(id(1));
        let json = serde_json::to_string(&set).unwrap();
        assert_eq!(
            json,
            r#"{"triplets":[[1,2,3],[7,6,1],[5,2,7],[6,3,5],[1,4,5],[2,6,4],[3,7,4]],"parity":"++--+--"}"#
        );
        let row: Vec<String> = mul_table(id(0)).entries()[1]
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(row, ["+i1", "-1", "+i3", "-i2", "+i5", "-i4", "-i7", "+i6"]);
    }
}
