//! Self-check suite run by `octosieve verify`.
//!
//! Each check is exact: integer-valued inputs keep all arithmetic exact, so
//! no check takes a tolerance.

use serde::Serialize;

use crate::algebra::{
    identify_algebra, mul_table, multiply, triplet_set, AlgebraId, MulTable, SignedUnit,
};
use crate::automorphism::{flip_pattern, flip_signature, Automorphism};
use crate::derivation::{
    all_basis_pairs, antiassoc_closed_form, cross_algebra_equal, derivation_span_rank,
    leibniz_check, on_common_line, restricted_span_rank,
};
use crate::expr::parse;
use crate::octonion::Octonion;
use crate::sampling::{random_integer_octonion, seeded_rng};
use crate::sieve::{is_invariant, sieve, sign_entry, unsieve, FunctionFamily, GENERATOR_ROWS};

/// Seed shared by every randomized check.
pub const VERIFY_SEED: u64 = 0x5eed_0c70;

/// Reference triplet listing, transcribed independently of
/// [`crate::algebra::REFERENCE_TRIPLETS`].
const LISTED_T0: [[u8; 3]; 7] = [
    [1, 2, 3],
    [7, 6, 1],
    [5, 7, 2],
    [6, 5, 3],
    [1, 4, 5],
    [2, 4, 6],
    [3, 4, 7],
];

/// Parity words of the eight left-handed rules as listed in the literature.
const LISTED_LEFT_WORDS: [&str; 8] = [
    "+++++++", "++--+--", "+-+--+-", "+--+--+", "----+++", "--+++--", "-+-+-+-", "-++---+",
];

/// Per-triplet `(T0, T1, T2, T3)` flip signatures.
const LISTED_SIGNATURES: [[u8; 4]; 7] = [
    [0, 1, 0, 0],
    [0, 1, 1, 0],
    [0, 1, 0, 1],
    [0, 1, 1, 1],
    [1, 0, 1, 0],
    [1, 0, 0, 1],
    [1, 0, 1, 1],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Sample counts for the randomized checks.
#[derive(Clone, Copy, Debug)]
pub struct Effort {
    pub norm_pairs: usize,
    pub involution_families: usize,
    pub sieve_trials: usize,
    pub equivariance_families: usize,
    pub leibniz_quadruples: usize,
}

impl Effort {
    pub const FULL: Effort = Effort {
        norm_pairs: 1000,
        involution_families: 100,
        sieve_trials: 64,
        equivariance_families: 20,
        leibniz_quadruples: 1000,
    };

    pub const QUICK: Effort = Effort {
        norm_pairs: 100,
        involution_families: 20,
        sieve_trials: 16,
        equivariance_families: 5,
        leibniz_quadruples: 100,
    };
}

fn result(id: u8, name: &'static str, failure: Option<String>, ok_detail: String) -> CheckResult {
    match failure {
        None => CheckResult {
            id,
            name,
            passed: true,
            detail: ok_detail,
        },
        Some(detail) => CheckResult {
            id,
            name,
            passed: false,
            detail,
        },
    }
}

fn id(n: usize) -> AlgebraId {
    AlgebraId::all().nth(n).expect("n < 16")
}

pub fn table_fidelity() -> CheckResult {
    let mut failure = None;
    let listed: Vec<[u8; 3]> = triplet_set(id(0))
        .0
        .triplets()
        .iter()
        .map(|t| t.indices())
        .collect();
    if listed != LISTED_T0 {
        failure = Some(format!("t[0] is {listed:?}"));
    }
    for (n, word) in LISTED_LEFT_WORDS.iter().enumerate() {
        let got = triplet_set(id(n)).1.to_string();
        if got != *word {
            failure.get_or_insert(format!("t[{n}] has parity {got}, expected {word}"));
        }
    }
    let t0 = flip_pattern(Automorphism::T0).bits();
    for n in 0..8 {
        let diff = triplet_set(id(n)).1.bits() ^ triplet_set(id(n + 8)).1.bits();
        if diff != t0 {
            failure.get_or_insert(format!("t[{n}] and t[{}] differ by {diff:07b}", n + 8));
        }
    }
    result(
        1,
        "table fidelity",
        failure,
        "t[0] listing, 8 parity words and 8 T0 pairs match".into(),
    )
}

fn exact_norm_sqr(a: &Octonion) -> i128 {
    a.coeffs().iter().map(|&c| (c as i128) * (c as i128)).sum()
}

pub fn norm_multiplicativity(pairs: usize) -> CheckResult {
    let mut rng = seeded_rng(VERIFY_SEED);
    let mut failure = None;
    'outer: for _ in 0..pairs {
        let a = random_integer_octonion(&mut rng, 1 << 10);
        let b = random_integer_octonion(&mut rng, 1 << 10);
        for n in AlgebraId::all() {
            let ab = multiply(&a, &b, n);
            if exact_norm_sqr(&ab) != exact_norm_sqr(&a) * exact_norm_sqr(&b) {
                failure = Some(format!("rule {n}: |ab|^2 != |a|^2 |b|^2 for a={a}, b={b}"));
                break 'outer;
            }
        }
    }
    result(
        2,
        "norm multiplicativity",
        failure,
        format!("{pairs} pairs x 16 rules exact"),
    )
}

fn random_family(rng: &mut rand_chacha::ChaCha8Rng) -> FunctionFamily {
    FunctionFamily::new(std::array::from_fn(|_| {
        random_integer_octonion(rng, 1 << 10)
    }))
}

pub fn hadamard_involution(families: usize) -> CheckResult {
    let mut rng = seeded_rng(VERIFY_SEED + 3);
    let mut failure = None;
    for t in 0..families {
        let fam = random_family(&mut rng);
        if unsieve(&sieve(&fam)) != fam {
            failure = Some(format!("round trip failed on family {t}"));
            break;
        }
    }
    result(
        3,
        "hadamard involution",
        failure,
        format!("{families} integer families round-trip exactly"),
    )
}

pub fn row_generators() -> CheckResult {
    let mut failure = None;
    for k in 0..16 {
        for j in 0..16 {
            let mut expected = 1i8;
            for (n, gen) in GENERATOR_ROWS.iter().enumerate() {
                if k & (8 >> n) != 0 {
                    expected *= gen[j];
                }
            }
            if sign_entry(j, k) != expected {
                failure.get_or_insert(format!("b[{j}][{k}] disagrees with generator product"));
            }
            if sign_entry(j, k) != sign_entry(k, j) {
                failure.get_or_insert(format!("b[{j}][{k}] != b[{k}][{j}]"));
            }
        }
    }
    result(
        4,
        "row generators",
        failure,
        "16 rows rebuilt from 4 generators; 256 entries symmetric".into(),
    )
}

pub fn sieve_invariance(trials: usize) -> CheckResult {
    let mut failure = None;
    for src in ["a+b", "a*a", "a*b+b*a"] {
        let e = parse(src).expect("literal expression parses");
        match is_invariant(&e, trials, VERIFY_SEED) {
            Ok(v) if v.is_invariant() => {}
            Ok(v) => {
                let w = v.witness().expect("non-invariant carries a witness");
                failure.get_or_insert(format!("{src}: g[{}] = {}", w.distance_index, w.distance));
            }
            Err(err) => {
                failure.get_or_insert(format!("{src}: {err}"));
            }
        }
    }
    let e = parse("a*b").expect("literal expression parses");
    let mut witness = String::new();
    match is_invariant(&e, trials, VERIFY_SEED) {
        Ok(v) => match v.witness() {
            Some(w) if w.distance_index > 0 && !w.distance.is_zero() => {
                witness = format!("a*b witness g[{}] = {}", w.distance_index, w.distance);
            }
            _ => {
                failure.get_or_insert("a*b reported invariant".into());
            }
        },
        Err(err) => {
            failure.get_or_insert(format!("a*b: {err}"));
        }
    }
    result(
        5,
        "sieve invariance",
        failure,
        format!("a+b, a*a, a*b+b*a invariant over {trials} trials; {witness}"),
    )
}

pub fn xor_equivariance(families: usize) -> CheckResult {
    let mut rng = seeded_rng(VERIFY_SEED + 6);
    let mut failure = None;
    'outer: for t in 0..families {
        let fam = random_family(&mut rng);
        let base = sieve(&fam);
        for m in 0..16u8 {
            let permuted = sieve(&fam.permuted_by(m));
            for k in 0..16 {
                let expected = base.get(k).scale(sign_entry(m.into(), k).into());
                if permuted.get(k) != expected {
                    failure = Some(format!("family {t}, mask {m}, k = {k}"));
                    break 'outer;
                }
            }
        }
    }
    result(
        6,
        "xor equivariance",
        failure,
        format!("16 masks x {families} families"),
    )
}

pub fn leibniz(quadruples: usize) -> CheckResult {
    let mut rng = seeded_rng(VERIFY_SEED + 7);
    let mut failure = None;
    'outer: for _ in 0..quadruples {
        let [u, v, a, b] = std::array::from_fn(|_| random_integer_octonion(&mut rng, 16));
        for n in AlgebraId::all() {
            let r = leibniz_check(&u, &v, &a, &b, n);
            if r != 0.0 {
                failure = Some(format!("rule {n}: residual {r}"));
                break 'outer;
            }
        }
    }
    result(
        7,
        "leibniz rule",
        failure,
        format!("{quadruples} quadruples x 16 rules, residual 0"),
    )
}

pub fn antiassociative_closed_form() -> CheckResult {
    let mut failure = None;
    let mut cases = 0;
    for n in AlgebraId::all() {
        for u in 1..=7u8 {
            for v in 1..=7u8 {
                for a in 1..=7u8 {
                    if u == v || v == a || u == a || on_common_line(u, v, a) {
                        continue;
                    }
                    match antiassoc_closed_form(u, v, a, n) {
                        Ok(r) if r.holds => cases += 1,
                        Ok(r) => {
                            failure.get_or_insert(format!(
                                "rule {n}, ({u},{v},{a}): D = {}, -2(uv)a = {}",
                                r.derivation, r.closed_form
                            ));
                        }
                        Err(err) => {
                            failure.get_or_insert(format!("rule {n}, ({u},{v},{a}): {err}"));
                        }
                    }
                }
            }
        }
    }
    if failure.is_none() && cases != 16 * (210 - 42) {
        failure = Some(format!("enumerated {cases} cases"));
    }
    result(
        8,
        "antiassociative closed form",
        failure,
        format!("{cases} cases hold"),
    )
}

pub fn flip_signature_distinctness() -> CheckResult {
    let sigs: Vec<[bool; 4]> = (0..7).map(flip_signature).collect();
    let mut failure = None;
    for (k, listed) in LISTED_SIGNATURES.iter().enumerate() {
        if sigs[k] != listed.map(|b| b == 1) {
            failure.get_or_insert(format!("triplet {k} signature {:?}", sigs[k]));
        }
    }
    for i in 0..7 {
        for j in (i + 1)..7 {
            if sigs[i] == sigs[j] {
                failure.get_or_insert(format!("triplets {i} and {j} share a signature"));
            }
        }
    }
    result(
        9,
        "flip-signature distinctness",
        failure,
        "7 signatures pairwise distinct".into(),
    )
}

pub fn dimensions() -> CheckResult {
    let mut failure = None;
    for n in AlgebraId::all() {
        match derivation_span_rank(&all_basis_pairs(), n) {
            Ok(14) => {}
            Ok(r) => {
                failure.get_or_insert(format!("rule {n}: full rank {r}"));
            }
            Err(err) => {
                failure.get_or_insert(format!("rule {n}: {err}"));
            }
        }
        for t in triplet_set(n).0.triplets() {
            let [a, b, c] = t.indices();
            match restricted_span_rank(&[(a, b), (a, c), (b, c)], n, &[a, b, c]) {
                Ok(3) => {}
                Ok(r) => {
                    failure.get_or_insert(format!("rule {n}, line {t}: rank {r}"));
                }
                Err(err) => {
                    failure.get_or_insert(format!("rule {n}, line {t}: {err}"));
                }
            }
        }
    }
    result(
        10,
        "derivation dimensions",
        failure,
        "rank 14 for all pairs, 3 per line, in all 16 rules".into(),
    )
}

pub fn equality_criterion() -> CheckResult {
    let mut failure = None;
    let mut full = 0;
    for u in 1..=7u8 {
        for v in 1..=7u8 {
            for a in 1..=7u8 {
                let set = cross_algebra_equal(
                    &Octonion::basis(u.into()),
                    &Octonion::basis(v.into()),
                    &Octonion::basis(a.into()),
                );
                if set.is_full() {
                    full += 1;
                }
                if set.is_full() != on_common_line(u, v, a) {
                    failure.get_or_insert(format!("({u},{v},{a}): equal in {} rules", set.len()));
                }
            }
        }
    }
    result(
        11,
        "cross-algebra equality criterion",
        failure,
        format!("343 ordered triples; {full} equal in all 16 rules"),
    )
}

pub fn identification() -> CheckResult {
    let mut failure = None;
    for n in AlgebraId::all() {
        if identify_algebra(&mul_table(n)) != Ok(n) {
            failure.get_or_insert(format!("rule {n} not recovered"));
        }
    }
    let mut e = *mul_table(id(0)).entries();
    e[1][2] = SignedUnit::pos(4);
    e[2][1] = SignedUnit::neg(4);
    match MulTable::from_entries(e).map(|t| identify_algebra(&t)) {
        Ok(Err(_)) | Err(_) => {}
        Ok(Ok(n)) => {
            failure.get_or_insert(format!("mutated table identified as rule {n}"));
        }
    }
    result(
        12,
        "algebra identification",
        failure,
        "16 tables round-trip; i1*i2 = i4 mutation rejected".into(),
    )
}

pub fn run(effort: Effort) -> Vec<CheckResult> {
    vec![
        table_fidelity(),
        norm_multiplicativity(effort.norm_pairs),
        hadamard_involution(effort.involution_families),
        row_generators(),
        sieve_invariance(effort.sieve_trials),
        xor_equivariance(effort.equivariance_families),
        leibniz(effort.leibniz_quadruples),
        antiassociative_closed_form(),
        flip_signature_distinctness(),
        dimensions(),
        equality_criterion(),
        identification(),
    ]
}
