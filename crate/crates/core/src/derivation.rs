//! Inner derivations `D_{u,v}(a) = [[u,v],a] - 3((uv)a - u(va))` under each
//! multiplication rule, and the checks that compare them across rules.
//!
//! When `u`, `v`, `a` are imaginary units on one associative line the
//! associator vanishes and the commutator term is the same in every rule.
//! Off the line, `D_{u,v}(a) = -2(uv)a`, whose sign depends on the rule.

use rand::Rng;
use serde::Serialize;

use crate::algebra::{multiply, triplet_set, AlgebraId};
use crate::error::{Error, Result};
use crate::expr::{eval, free_vars, Assignment, Expr};
use crate::octonion::Octonion;
use crate::rank::integer_rank;
use crate::sampling::{random_assignment, seeded_rng, DEFAULT_COEFF_BOUND};

pub fn commutator(a: &Octonion, b: &Octonion, n: AlgebraId) -> Octonion {
    multiply(a, b, n) - multiply(b, a, n)
}

/// `(ab)c - a(bc)`.
pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion, n: AlgebraId) -> Octonion {
    multiply(&multiply(a, b, n), c, n) - multiply(a, &multiply(b, c, n), n)
}

pub fn derive(u: &Octonion, v: &Octonion, a: &Octonion, n: AlgebraId) -> Octonion {
    commutator(&commutator(u, v, n), a, n) - associator(u, v, a, n).scale(3.0)
}

/// Norm of `D(ab) - D(a)b - aD(b)`.
pub fn leibniz_check(u: &Octonion, v: &Octonion, a: &Octonion, b: &Octonion, n: AlgebraId) -> f64 {
    let lhs = derive(u, v, &multiply(a, b, n), n);
    let rhs = multiply(&derive(u, v, a, n), b, n) + multiply(a, &derive(u, v, b, n), n);
    (lhs - rhs).norm()
}

fn check_basis_index(i: u8) -> Result<()> {
    if (1..=7).contains(&i) {
        Ok(())
    } else {
        Err(Error::InvalidBasisIndex(i))
    }
}

/// True if imaginary indices `a`, `b`, `c` (repeats allowed) all lie on one
/// associative line. The lines are the same for every rule.
pub fn on_common_line(a: u8, b: u8, c: u8) -> bool {
    let set = triplet_set(AlgebraId::REFERENCE).0;
    set.triplets().iter().any(|t| {
        let idx = t.indices();
        [a, b, c].iter().all(|x| idx.contains(x))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClosedFormReport {
    /// `D_{u,v}(a)`.
    pub derivation: Octonion,
    /// `-2 (uv) a`.
    pub closed_form: Octonion,
    pub holds: bool,
}

/// Compares `D_{i_u,i_v}(i_a)` with `-2 (i_u i_v) i_a` for a pairwise
/// distinct, non-associative triple of imaginary units.
pub fn antiassoc_closed_form(u: u8, v: u8, a: u8, n: AlgebraId) -> Result<ClosedFormReport> {
    for i in [u, v, a] {
        check_basis_index(i)?;
    }
    if u == v || v == a || u == a {
        return Err(Error::PreconditionViolation(format!(
            "indices ({u},{v},{a}) are not pairwise distinct"
        )));
    }
    if triplet_set(n).0.is_associative(u, v, a) {
        return Err(Error::PreconditionViolation(format!(
            "({u},{v},{a}) is an associative triplet"
        )));
    }
    let (iu, iv, ia) = (
        Octonion::basis(u.into()),
        Octonion::basis(v.into()),
        Octonion::basis(a.into()),
    );
    let derivation = derive(&iu, &iv, &ia, n);
    let closed_form = multiply(&multiply(&iu, &iv, n), &ia, n).scale(-2.0);
    Ok(ClosedFormReport {
        derivation,
        closed_form,
        holds: derivation == closed_form,
    })
}

/// A subset of the 16 rules.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraSet(u16);

impl AlgebraSet {
    pub const ALL: AlgebraSet = AlgebraSet(u16::MAX);

    pub fn insert(&mut self, n: AlgebraId) {
        self.0 |= 1 << n.get();
    }

    pub fn remove(&mut self, n: AlgebraId) {
        self.0 &= !(1 << n.get());
    }

    pub fn contains(&self, n: AlgebraId) -> bool {
        self.0 >> n.get() & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_full(&self) -> bool {
        self.0 == u16::MAX
    }

    pub fn iter(&self) -> impl Iterator<Item = AlgebraId> + '_ {
        AlgebraId::all().filter(|&n| self.contains(n))
    }
}

impl Serialize for AlgebraSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Rules in which `D_{u,v}(a)` equals its value in rule 0.
pub fn cross_algebra_equal(u: &Octonion, v: &Octonion, a: &Octonion) -> AlgebraSet {
    let reference = derive(u, v, a, AlgebraId::REFERENCE);
    let mut set = AlgebraSet::default();
    for n in AlgebraId::all() {
        if derive(u, v, a, n) == reference {
            set.insert(n);
        }
    }
    set
}

/// Action of a derivation on the imaginary subspace: column `c` holds the
/// coefficients 1..7 of the image of `i_{c+1}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearMap7 {
    entries: [[f64; 7]; 7],
}

impl LinearMap7 {
    /// Applies `D_{u,v}` to each imaginary basis element.
    pub fn from_derivation(u: &Octonion, v: &Octonion, n: AlgebraId) -> Self {
        let mut entries = [[0.0; 7]; 7];
        for c in 0..7 {
            let image = derive(u, v, &Octonion::basis(c + 1), n);
            for (r, row) in entries.iter_mut().enumerate() {
                row[c] = image[r + 1];
            }
        }
        LinearMap7 { entries }
    }

    /// Entry at row `r`, column `c` (both 0-based over `i1..i7`).
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.entries[r][c]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..7).all(|r| (0..7).all(|c| self.entries[r][c] == -self.entries[c][r]))
    }

    /// Entries at rows and columns in `basis` (1-based imaginary indices),
    /// flattened row-major, as exact integers.
    fn integer_block(&self, basis: &[u8]) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(basis.len() * basis.len());
        for &r in basis {
            for &c in basis {
                let x = self.entries[usize::from(r) - 1][usize::from(c) - 1];
                if x.fract() != 0.0 || x.abs() > 2f64.powi(62) {
                    return Err(Error::NonIntegerEntry(x));
                }
                out.push(x as i64);
            }
        }
        Ok(out)
    }
}

/// Dimension of the span of `D_{i_p, i_q}` over the given index pairs, as
/// maps on the full imaginary subspace.
pub fn derivation_span_rank(pairs: &[(u8, u8)], n: AlgebraId) -> Result<usize> {
    restricted_span_rank(pairs, n, &[1, 2, 3, 4, 5, 6, 7])
}

/// As [`derivation_span_rank`], but each map is cut down to the rows and
/// columns listed in `basis`.
pub fn restricted_span_rank(pairs: &[(u8, u8)], n: AlgebraId, basis: &[u8]) -> Result<usize> {
    for &i in basis {
        check_basis_index(i)?;
    }
    let rows = pairs
        .iter()
        .map(|&(p, q)| {
            check_basis_index(p)?;
            check_basis_index(q)?;
            let map = LinearMap7::from_derivation(
                &Octonion::basis(p.into()),
                &Octonion::basis(q.into()),
                n,
            );
            map.integer_block(basis)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(integer_rank(&rows))
}

/// All 21 unordered pairs of distinct imaginary indices.
pub fn all_basis_pairs() -> Vec<(u8, u8)> {
    (1..=7u8)
        .flat_map(|p| ((p + 1)..=7).map(move |q| (p, q)))
        .collect()
}

/// `D_{u,v}(f[N])` for every rule.
pub fn derive_expr_family(
    u: &Octonion,
    v: &Octonion,
    e: &Expr,
    env: &Assignment,
) -> Result<[Octonion; 16]> {
    let mut out = [Octonion::ZERO; 16];
    for n in AlgebraId::all() {
        out[n.index()] = derive(u, v, &eval(e, env, n)?, n);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivationWitness {
    pub trial: usize,
    pub assignment: Assignment,
    pub algebra: AlgebraId,
    pub reference: Octonion,
    pub value: Octonion,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegimeReport {
    pub trials: usize,
    /// True if every trial gave the same derivation value in all 16 rules.
    pub all_equal: bool,
    /// Rules that matched rule 0 in every trial.
    pub agreeing: AlgebraSet,
    /// First trial and rule that disagreed with rule 0.
    pub witness: Option<DerivationWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossAlgebraReport {
    /// Assignments drawn from span{1, u, v, uv}.
    pub quaternionic: RegimeReport,
    /// Assignments with all eight coefficients random.
    pub generic: RegimeReport,
}

fn run_regime<F>(
    u: &Octonion,
    v: &Octonion,
    e: &Expr,
    trials: usize,
    mut sample: F,
) -> Result<RegimeReport>
where
    F: FnMut() -> Assignment,
{
    let mut agreeing = AlgebraSet::ALL;
    let mut witness = None;
    for trial in 0..trials {
        let env = sample();
        let outputs = derive_expr_family(u, v, e, &env)?;
        let reference = outputs[0];
        for n in AlgebraId::all() {
            if outputs[n.index()] == reference {
                continue;
            }
            agreeing.remove(n);
            witness.get_or_insert_with(|| DerivationWitness {
                trial,
                assignment: env.clone(),
                algebra: n,
                reference,
                value: outputs[n.index()],
            });
        }
    }
    Ok(RegimeReport {
        trials,
        all_equal: witness.is_none(),
        agreeing,
        witness,
    })
}

/// Checks whether `D_{i_u,i_v}(f[N])` agrees across all rules, once with the
/// variables of `e` drawn from the quaternion subalgebra through `i_u`, `i_v`
/// and once with unrestricted integer octonions.
pub fn expr_cross_algebra_equal(
    u: u8,
    v: u8,
    e: &Expr,
    trials: usize,
    seed: u64,
) -> Result<CrossAlgebraReport> {
    check_basis_index(u)?;
    check_basis_index(v)?;
    if trials == 0 {
        return Err(Error::PreconditionViolation(
            "cross-algebra check needs at least one trial".into(),
        ));
    }
    let iu = Octonion::basis(u.into());
    let iv = Octonion::basis(v.into());
    let uv = multiply(&iu, &iv, AlgebraId::REFERENCE);
    let names = free_vars(e);
    let bound = DEFAULT_COEFF_BOUND;

    let mut rng = seeded_rng(seed);
    let quaternionic = run_regime(&iu, &iv, e, trials, || {
        names
            .iter()
            .map(|name| {
                let c: [f64; 4] = std::array::from_fn(|_| rng.random_range(-bound..=bound) as f64);
                let value = Octonion::real(c[0]) + iu.scale(c[1]) + iv.scale(c[2]) + uv.scale(c[3]);
                (name.clone(), value)
            })
            .collect()
    })?;

    let mut rng = seeded_rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let generic = run_regime(&iu, &iv, e, trials, || {
        random_assignment(&names, &mut rng, bound)
    })?;

    Ok(CrossAlgebraReport {
        quaternionic,
        generic,
    })
}
