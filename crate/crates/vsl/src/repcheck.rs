//! The decision layer for very simplicity.
//!
//! A module V is very simple when every unital subalgebra of End(V) stable
//! under conjugation by the group image is the scalars or everything. The
//! sufficient criterion implemented here has three legs: (i) absolute
//! simplicity, certified exactly by the enveloping-algebra rank reaching
//! dim(V)²; (ii) exclusion of induced structure through the minimal
//! proper-subgroup index (a cited fact) plus the absence of a cyclic
//! quotient of order dim(V) (computed from the abelianization); (iii)
//! exclusion of tensor factorizations through trace tests on Frobenius
//! twists and cited dimension lists. Condition (ii)'s index facts are never
//! computed; they come from a `FactsLedger` with citations, and any verdict
//! leaning on one is reported as `very_simple_modulo_ledger`.
//!
//! For tiny modules a brute-force definitional oracle closes the loop: it
//! enumerates every matrix r and checks that the conjugation-stable algebra
//! closure of {Id, r} is either the scalars or full.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2linalg::{algebra_closure, commutant_basis, commutant_dim, BitMatrix, SpanBasis};
use crate::ff::{FieldElement, FieldMatrix};
use crate::permgrp::{abelianization_exponent, is_perfect, transitivity, Bsgs, PermGroup, Transitivity};
use crate::permmod::F2Module;

#[derive(Debug, Error)]
pub enum RepcheckError {
    #[error("witness trace {0} is not primitive")]
    NonPrimitiveTrace(u64),
    #[error("no generator word of length <= {0} has a primitive trace")]
    WitnessSearchFailed(usize),
    #[error("brute force supports dim <= {max}, got {got}")]
    DimensionTooLarge { max: usize, got: usize },
    #[error(transparent)]
    Field(#[from] crate::ff::FfError),
    #[error(transparent)]
    F2(#[from] crate::f2linalg::F2Error),
}

/// Dimension of the F₂-span of the image matrices, enumerating group
/// elements by BSGS coset traversal with early exit at full rank dim².
/// Equal to dim² exactly when the module is absolutely simple.
pub fn enveloping_dim(module: &F2Module, bsgs: &Bsgs) -> usize {
    let n = module.dim;
    let nn = n * n;
    let mut span = SpanBasis::new(nn);
    let level_mats: Vec<Vec<BitMatrix>> = bsgs
        .transversals()
        .iter()
        .map(|lvl| lvl.iter().map(|u| module.rep_matrix(u)).collect())
        .collect();
    if level_mats.is_empty() {
        span.insert(&BitMatrix::identity(n).flatten()).unwrap();
        return span.rank();
    }
    fn walk(levels: &[Vec<BitMatrix>], acc: &BitMatrix, span: &mut SpanBasis, full: usize) -> bool {
        match levels {
            [] => {
                span.insert(&acc.flatten()).unwrap();
                span.rank() == full
            }
            [level, rest @ ..] => {
                for u in level {
                    let next = acc.mul(u).unwrap();
                    if walk(rest, &next, span, full) {
                        return true;
                    }
                }
                false
            }
        }
    }
    let id = BitMatrix::identity(n);
    walk(&level_mats, &id, &mut span, nn);
    span.rank()
}

pub fn is_absolutely_irreducible(module: &F2Module, bsgs: &Bsgs) -> bool {
    enveloping_dim(module, bsgs) == module.dim * module.dim
}

/// Largest power of 2 dividing n.
fn two_part(mut n: u64) -> u64 {
    let mut p = 1;
    while n % 2 == 0 {
        p *= 2;
        n /= 2;
    }
    p
}

/// The Brauer-Nesbitt/Steinberg dimension condition: a doubly transitive
/// action on an odd number of points whose heart dimension #B - 1 equals
/// the 2-part of the group order forces the heart to be absolutely simple.
pub fn brauer_nesbitt_check(group: &PermGroup, bsgs: &Bsgs) -> bool {
    let n = group.degree() as u64;
    n % 2 == 1
        && transitivity(group).map(|t| t == Transitivity::TwoTransitive).unwrap_or(false)
        && n - 1 == two_part(bsgs.order())
}

/// Outcome of one trace test: the trace of the twisted tensor product
/// rho_S(u) and whether it lies in F₂.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceOutcome {
    pub subset: Vec<u32>,
    /// the tensor dimension d^#S this subset's representation has
    pub dim: u64,
    /// M = sum of 2^i over the subset
    pub exponent: u64,
    /// index of tr(rho_S(u)) in the field enumeration
    pub trace_index: u64,
    pub in_f2: bool,
}

/// Evaluates the trace of rho_S(u) where u is the given word in the matrix
/// generators and rho_S is the tensor product of the Frobenius twists by
/// 2^i for i in the subset. Checks the analytic shortcut: the trace equals
/// alpha^M where alpha = tr(u) and M = sum 2^i. The trace of u must be
/// primitive.
pub fn trace_exclusion(
    gens: &[FieldMatrix],
    word: &[usize],
    subset: &[u32],
) -> Result<TraceOutcome, RepcheckError> {
    let field = gens[0].field().clone();
    let d = gens[0].rows();
    let mut u = FieldMatrix::identity(&field, d);
    for &i in word {
        u = gens[i].mul(&u)?;
    }
    let alpha = u.trace()?;
    if alpha.is_zero() || !alpha.is_primitive()? {
        return Err(RepcheckError::NonPrimitiveTrace(alpha.index()));
    }
    let mut sorted: Vec<u32> = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut rho: Option<FieldMatrix> = None;
    for &i in &sorted {
        let twist = u.frobenius_twist(i)?;
        rho = Some(match rho {
            None => twist,
            Some(prev) => prev.kron(&twist)?,
        });
    }
    let (trace, dim) = match rho {
        // empty S is the trivial representation
        None => (FieldElement::one(&field), 1),
        Some(m) => {
            let dim = m.rows() as u64;
            (m.trace()?, dim)
        }
    };
    let exponent: u64 = sorted.iter().map(|&i| 1u64 << i).sum();
    // analytic shortcut cross-check
    assert_eq!(
        trace,
        alpha.pow(exponent as u128),
        "twisted tensor trace must equal alpha^M"
    );
    let in_f2 = trace.is_zero() || trace.is_one();
    Ok(TraceOutcome {
        subset: sorted,
        dim,
        exponent,
        trace_index: trace.index(),
        in_f2,
    })
}

/// Deterministic BFS search for a generator word whose trace is primitive.
pub fn primitive_trace_witness(
    gens: &[FieldMatrix],
    max_len: usize,
) -> Result<Vec<usize>, RepcheckError> {
    let field = gens[0].field().clone();
    let d = gens[0].rows();
    let mut frontier: Vec<(Vec<usize>, FieldMatrix)> = vec![(vec![], FieldMatrix::identity(&field, d))];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (word, mat) in &frontier {
            for (gi, g) in gens.iter().enumerate() {
                let m = g.mul(mat)?;
                let mut w = word.clone();
                w.push(gi);
                let tr = m.trace()?;
                if !tr.is_zero() && tr.is_primitive()? {
                    return Ok(w);
                }
                next.push((w, m));
            }
        }
        frontier = next;
    }
    Err(RepcheckError::WitnessSearchFailed(max_len))
}

/// How a dimension came to be excluded as a possible absolutely simple
/// F₂-module dimension for the group.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionMethod {
    TraceLemma,
    Cited,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimExclusion {
    pub dim: u64,
    pub method: ExclusionMethod,
    /// producing operation for computed entries, literature citation for
    /// cited ones
    pub citation: String,
}

/// A value consumed from the literature rather than computed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CitedFact<T> {
    pub value: T,
    pub citation: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactSource {
    Computed,
    Cited,
}

/// External and computed facts feeding the verdict. Cited entries always
/// carry a nonempty citation string.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct FactsLedger {
    pub min_proper_subgroup_index: Option<CitedFact<u64>>,
    pub is_perfect: Option<(bool, FactSource)>,
    pub excluded_irreducible_dims: Vec<DimExclusion>,
    /// When present: by the cited classification, every absolutely simple
    /// module over the closure of F₂ has dimension a power of this base, so
    /// non-powers are excluded without an explicit entry.
    pub admissible_dim_base: Option<CitedFact<u64>>,
    pub notes: Vec<String>,
}

impl FactsLedger {
    fn dim_is_excluded(&self, d: u64) -> Option<(ExclusionMethod, bool)> {
        if let Some(e) = self.excluded_irreducible_dims.iter().find(|e| e.dim == d) {
            let cited = e.method == ExclusionMethod::Cited;
            return Some((e.method.clone(), cited));
        }
        if let Some(base) = &self.admissible_dim_base {
            let mut p = 1u64;
            let mut is_power = false;
            loop {
                if p == d {
                    is_power = true;
                    break;
                }
                if p > d / base.value {
                    break;
                }
                p *= base.value;
            }
            if !is_power {
                // ruled out by the classification of admissible dimensions;
                // counted as computed, the classification itself is a note
                return Some((ExclusionMethod::TraceLemma, false));
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    VerySimple,
    NotVerySimple,
    VerySimpleModuloLedger,
    Undecided,
}

/// Outcome of one criterion leg. `Fail` means the sufficient criterion's
/// condition could not be established (for condition (i) this is a true
/// disproof of very simplicity; for (ii)/(iii) it leaves the module
/// undecided unless a constructive witness is attached). `Skipped` means a
/// needed ledger fact was absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionOutcome {
    Pass,
    Fail,
    FromLedger,
    Skipped,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Conditions {
    pub absolute_simplicity: ConditionOutcome,
    pub induction_exclusion: ConditionOutcome,
    pub tensor_exclusion: ConditionOutcome,
}

/// A concrete conjugation-stable subalgebra witnessing failure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubalgebraWitness {
    pub description: String,
    pub dim: usize,
    /// hex rows of a non-scalar element generating it, when one was extracted
    pub element_hex: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub module_dim: usize,
    pub group_order: u64,
    pub enveloping_dim: usize,
    pub commutant_dim: Option<usize>,
    pub brauer_nesbitt: bool,
    pub excluded_dims: Vec<DimExclusion>,
    pub uncovered_factorizations: Vec<(u64, u64)>,
    pub ledger_citations: Vec<String>,
    pub witness: Option<SubalgebraWitness>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub conditions: Conditions,
    pub certificate: Certificate,
}

fn proper_divisor_pairs(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut a = 2;
    while a * a <= n {
        if n % a == 0 && n / a > 1 {
            out.push((a, n / a));
        }
        a += 1;
    }
    out
}

fn proper_divisors(n: u64) -> Vec<u64> {
    (2..n).filter(|d| n % d == 0).collect()
}

/// The three-condition very-simplicity verdict. Condition (i) is always
/// computed; a failure there is a genuine disproof (a very simple module is
/// absolutely simple) and yields `not_very_simple` together with a witness
/// subalgebra when one is cheaply extractable. Conditions (ii) and (iii)
/// are sufficient-only: their failure or a missing ledger fact yields
/// `undecided`, never a guess.
pub fn very_simple_verdict(
    module: &F2Module,
    group: &PermGroup,
    bsgs: &Bsgs,
    ledger: Option<&FactsLedger>,
) -> Verdict {
    let n = module.dim as u64;
    let nn = (n * n) as usize;
    let env = enveloping_dim(module, bsgs);
    let bn = brauer_nesbitt_check(group, bsgs);
    let mut notes: Vec<String> = Vec::new();
    let mut citations: Vec<String> = Vec::new();
    let mut witness = None;
    let mut commutant = None;

    let cond_i = if env == nn {
        ConditionOutcome::Pass
    } else {
        // extract a concrete stable subalgebra: a non-scalar commutant
        // element when the commutant exceeds the scalars, else an invariant
        // subspace found by spinning basis vectors
        let gens = &module.gen_matrices;
        let cdim = commutant_dim(gens).unwrap_or(0);
        commutant = Some(cdim);
        if cdim > 1 {
            if let Ok(basis) = commutant_basis(gens) {
                if let Some(elt) = basis.iter().find(|m| !m.is_identity() && !m.is_zero()) {
                    let closure = algebra_closure(std::slice::from_ref(elt), gens)
                        .map(|c| c.span.rank())
                        .unwrap_or(0);
                    witness = Some(SubalgebraWitness {
                        description: format!(
                            "commutant element generating a stable subalgebra of dimension {closure}"
                        ),
                        dim: closure,
                        element_hex: Some(elt.to_hex_rows()),
                    });
                }
            }
        } else if let Some(sub_dim) = invariant_subspace_dim(module) {
            let stab_dim = nn - sub_dim * (module.dim - sub_dim);
            witness = Some(SubalgebraWitness {
                description: format!(
                    "stabilizer algebra of an invariant subspace of dimension {sub_dim}"
                ),
                dim: stab_dim,
                element_hex: None,
            });
        }
        ConditionOutcome::Fail
    };

    // condition (ii): no subgroup of index r | N with 1 < r < N, and no
    // cyclic quotient of order N
    let divisors = proper_divisors(n);
    let index_leg = if divisors.is_empty() {
        ConditionOutcome::Pass
    } else {
        match ledger.and_then(|l| l.min_proper_subgroup_index.as_ref()) {
            None => {
                notes.push(format!(
                    "minimal proper-subgroup index unknown; divisors {divisors:?} of {n} not excluded"
                ));
                ConditionOutcome::Skipped
            }
            Some(fact) => {
                citations.push(fact.citation.clone());
                if divisors.iter().all(|&r| r < fact.value) {
                    ConditionOutcome::FromLedger
                } else if divisors.contains(&fact.value) {
                    notes.push(format!(
                        "a subgroup of index {} exists, divides {n}",
                        fact.value
                    ));
                    ConditionOutcome::Fail
                } else {
                    notes.push(format!(
                        "minimal index {} does not bound all divisors of {n}",
                        fact.value
                    ));
                    ConditionOutcome::Skipped
                }
            }
        }
    };
    let perfect = match ledger.and_then(|l| l.is_perfect) {
        Some((p, _)) => p,
        None => is_perfect(group, bsgs),
    };
    let cyclic_leg = if perfect {
        ConditionOutcome::Pass
    } else {
        let exp = abelianization_exponent(group);
        if n > 1 && exp % n == 0 {
            notes.push(format!("cyclic quotient of order {n} exists (abelianization exponent {exp})"));
            ConditionOutcome::Fail
        } else {
            notes.push(format!(
                "not perfect, but the abelianization exponent {exp} admits no cyclic quotient of order {n}"
            ));
            ConditionOutcome::Pass
        }
    };
    let cond_ii = match (index_leg, cyclic_leg) {
        (ConditionOutcome::Fail, _) | (_, ConditionOutcome::Fail) => ConditionOutcome::Fail,
        (ConditionOutcome::Skipped, _) => ConditionOutcome::Skipped,
        (ConditionOutcome::FromLedger, _) => ConditionOutcome::FromLedger,
        (ConditionOutcome::Pass, _) => ConditionOutcome::Pass,
    };

    // condition (iii): every factorization N = ab with 1 < a <= b < N has an
    // excluded side
    let pairs = proper_divisor_pairs(n);
    let mut uncovered = Vec::new();
    let mut used_cited = false;
    let mut used_dims: Vec<DimExclusion> = Vec::new();
    if let Some(l) = ledger {
        for e in &l.excluded_irreducible_dims {
            used_dims.push(e.clone());
        }
        if let Some(base) = &l.admissible_dim_base {
            citations.push(base.citation.clone());
            notes.push(format!(
                "admissible absolutely-irreducible dimensions are powers of {} (cited classification)",
                base.value
            ));
        }
    }
    for &(a, b) in &pairs {
        let covered = ledger
            .map(|l| {
                let ca = l.dim_is_excluded(a);
                let cb = l.dim_is_excluded(b);
                if let Some((_, cited)) = &ca {
                    used_cited |= cited;
                }
                if ca.is_none() {
                    if let Some((_, cited)) = &cb {
                        used_cited |= cited;
                    }
                }
                ca.is_some() || cb.is_some()
            })
            .unwrap_or(false);
        if !covered {
            uncovered.push((a, b));
        }
    }
    let cond_iii = if pairs.is_empty() {
        ConditionOutcome::Pass
    } else if uncovered.is_empty() {
        if used_cited {
            for e in &used_dims {
                if e.method == ExclusionMethod::Cited {
                    citations.push(e.citation.clone());
                }
            }
            ConditionOutcome::FromLedger
        } else {
            ConditionOutcome::Pass
        }
    } else {
        notes.push(format!("factorizations not excluded: {uncovered:?}"));
        ConditionOutcome::Fail
    };

    let status = if cond_i == ConditionOutcome::Fail {
        VerdictStatus::NotVerySimple
    } else if cond_ii == ConditionOutcome::Fail
        || cond_iii == ConditionOutcome::Fail
        || cond_ii == ConditionOutcome::Skipped
        || cond_iii == ConditionOutcome::Skipped
    {
        VerdictStatus::Undecided
    } else if cond_ii == ConditionOutcome::FromLedger || cond_iii == ConditionOutcome::FromLedger {
        VerdictStatus::VerySimpleModuloLedger
    } else {
        VerdictStatus::VerySimple
    };

    if let Some(l) = ledger {
        notes.extend(l.notes.iter().cloned());
    }
    citations.sort();
    citations.dedup();

    Verdict {
        status,
        conditions: Conditions {
            absolute_simplicity: cond_i,
            induction_exclusion: cond_ii,
            tensor_exclusion: cond_iii,
        },
        certificate: Certificate {
            module_dim: module.dim,
            group_order: bsgs.order(),
            enveloping_dim: env,
            commutant_dim: commutant,
            brauer_nesbitt: bn,
            excluded_dims: ledger.map(|l| l.excluded_irreducible_dims.clone()).unwrap_or_default(),
            uncovered_factorizations: uncovered,
            ledger_citations: citations,
            witness,
            notes,
        },
    }
}

/// Smallest dimension of a proper nonzero invariant subspace found by
/// spinning the standard basis vectors, or None if all spins fill the space.
fn invariant_subspace_dim(module: &F2Module) -> Option<usize> {
    let n = module.dim;
    let mut best: Option<usize> = None;
    for i in 0..n {
        let mut span = SpanBasis::new(n);
        let mut vecs: Vec<Vec<u64>> = Vec::new();
        let mut seed = vec![0u64; n.div_ceil(64)];
        seed[i / 64] |= 1 << (i % 64);
        span.insert(&seed).unwrap();
        vecs.push(seed);
        let mut head = 0;
        while head < vecs.len() {
            let v = vecs[head].clone();
            head += 1;
            for g in &module.gen_matrices {
                let img = mat_vec(g, &v);
                if span.insert(&img).unwrap() {
                    vecs.push(img);
                }
            }
        }
        let d = span.rank();
        if d < n && best.is_none_or(|b| d < b) {
            best = Some(d);
        }
    }
    best
}

fn mat_vec(m: &BitMatrix, v: &[u64]) -> Vec<u64> {
    let n = m.rows();
    let mut out = vec![0u64; n.div_ceil(64)];
    for r in 0..n {
        let mut parity = 0u32;
        for (wi, w) in m.row(r).iter().enumerate() {
            parity ^= (w & v[wi]).count_ones() & 1;
        }
        if parity & 1 == 1 {
            out[r / 64] |= 1 << (r % 64);
        }
    }
    out
}

/// Result of the definitional brute-force oracle.
#[derive(Debug, Clone)]
pub struct BruteForceOutcome {
    pub very_simple: bool,
    /// first (lowest-index) witness matrix and its closure dimension
    pub witness: Option<(BitMatrix, usize)>,
    /// candidates a sequential scan examines before deciding: the witness
    /// position in enumeration order, or everything when none exists. This
    /// is independent of the worker partitioning.
    pub candidates_scanned: u64,
}

fn matrix_from_index(n: usize, idx: u64) -> BitMatrix {
    let mut m = BitMatrix::zero(n, n);
    for pos in 0..(n * n) {
        if (idx >> pos) & 1 == 1 {
            m.set(pos / n, pos % n, true);
        }
    }
    m
}

/// Checks the definition directly: for every matrix r other than 0 and Id,
/// the conjugation-stable unital algebra closure of {Id, r} must be the
/// scalars or all of End(V). Cost grows as 2^(dim²), so dim <= 5. The scan
/// partitions across VSL_THREADS workers; each worker stops at the first
/// witness in its own ascending range and the lowest-index witness wins, so
/// the result does not depend on the partitioning.
pub fn very_simple_bruteforce(module: &F2Module) -> Result<BruteForceOutcome, RepcheckError> {
    const MAX_DIM: usize = 5;
    let n = module.dim;
    if n > MAX_DIM {
        return Err(RepcheckError::DimensionTooLarge { max: MAX_DIM, got: n });
    }
    let total: u64 = 1u64 << (n * n);
    let id_index = {
        let mut idx = 0u64;
        for i in 0..n {
            idx |= 1 << (i * n + i);
        }
        idx
    };
    let gens = module.gen_matrices.clone();
    let threads = worker_count();
    let scan = |lo: u64, hi: u64| -> Option<(u64, usize)> {
        for idx in lo..hi {
            if idx == 0 || idx == id_index {
                continue;
            }
            let r = matrix_from_index(n, idx);
            let closure = algebra_closure(std::slice::from_ref(&r), &gens)
                .expect("module generators are invertible");
            let dim = closure.span.rank();
            if dim != 1 && dim != n * n {
                return Some((idx, dim));
            }
        }
        None
    };
    let hit = if threads <= 1 {
        scan(0, total)
    } else {
        let chunk = total.div_ceil(threads as u64);
        let results: Vec<Option<(u64, usize)>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|t| {
                    let lo = t * chunk;
                    let hi = (lo + chunk).min(total);
                    let scan = &scan;
                    s.spawn(move || scan(lo, hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        results.into_iter().flatten().min_by_key(|(idx, _)| *idx)
    };
    // deterministic progress count: what a sequential scan would examine,
    // i.e. every index up to the witness except the two skipped matrices
    let sequential_position = |idx: u64| idx - u64::from(id_index < idx);
    Ok(match hit {
        Some((idx, dim)) => BruteForceOutcome {
            very_simple: false,
            witness: Some((matrix_from_index(n, idx), dim)),
            candidates_scanned: sequential_position(idx),
        },
        None => BruteForceOutcome {
            very_simple: true,
            witness: None,
            candidates_scanned: total - 2,
        },
    })
}

fn worker_count() -> usize {
    std::env::var("VSL_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

/// The negative tensor control: for W = V ⊗ V with the diagonal action, the
/// subalgebra End(V) ⊗ Id is conjugation-stable of dimension dim(V)²,
/// strictly between the scalars and End(W), so W is not very simple. The
/// stability check is performed, not assumed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorControl {
    pub factor_dim: usize,
    pub product_dim: usize,
    pub subalgebra_dim: usize,
    pub stability_verified: bool,
}

pub fn tensor_square_control(
    factor: &F2Module,
    square: &F2Module,
) -> Result<TensorControl, RepcheckError> {
    let n1 = factor.dim;
    let n = square.dim;
    assert_eq!(n, n1 * n1);
    let id1 = BitMatrix::identity(n1);
    // basis of End(V) ⊗ Id: matrix units E_rc tensored with the identity
    let mut basis: Vec<BitMatrix> = Vec::new();
    for r in 0..n1 {
        for c in 0..n1 {
            let mut e = BitMatrix::zero(n1, n1);
            e.set(r, c, true);
            basis.push(e.kron(&id1));
        }
    }
    let mut span = SpanBasis::new(n * n);
    for b in &basis {
        span.insert(&b.flatten())?;
    }
    assert_eq!(span.rank(), n1 * n1);
    let mut stable = true;
    for g in &square.gen_matrices {
        let ginv = g.inverse().expect("generator is invertible");
        for b in &basis {
            let conj = g.mul(b)?.mul(&ginv)?;
            if !span.contains(&conj.flatten())? {
                stable = false;
            }
        }
    }
    Ok(TensorControl {
        factor_dim: n1,
        product_dim: n,
        subalgebra_dim: n1 * n1,
        stability_verified: stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FieldSpec;
    use crate::groups::{build_alternating, build_cyclic, build_dihedral, build_sl2, build_symmetric};
    use crate::permmod::{heart_module, tensor_square};

    #[test]
    fn enveloping_dim_of_cyclic_heart_is_4() {
        let c5 = build_cyclic(5).unwrap();
        let m = heart_module(&c5.group, "C5 heart").unwrap();
        assert_eq!(enveloping_dim(&m, &c5.bsgs), 4);
        assert!(!is_absolutely_irreducible(&m, &c5.bsgs));
        assert_eq!(commutant_dim(&m.gen_matrices).unwrap(), 4);
    }

    #[test]
    fn enveloping_dim_of_s5_heart_is_full() {
        let s5 = build_symmetric(5).unwrap();
        let m = heart_module(&s5.group, "S5 heart").unwrap();
        assert_eq!(enveloping_dim(&m, &s5.bsgs), 16);
        assert_eq!(commutant_dim(&m.gen_matrices).unwrap(), 1);
    }

    #[test]
    fn brauer_nesbitt_values() {
        let f8 = FieldSpec::binary_default(3).unwrap();
        let l28 = build_sl2(&f8).unwrap();
        assert!(brauer_nesbitt_check(&l28.group, &l28.bsgs));
        // 2-part of 120 is 8, not 4
        let s5 = build_symmetric(5).unwrap();
        assert!(!brauer_nesbitt_check(&s5.group, &s5.bsgs));
        // 2-part of 29120 is 64 = 65 - 1
        let sz = crate::groups::build_suzuki(&f8).unwrap();
        assert!(brauer_nesbitt_check(&sz.group, &sz.bsgs));
    }

    #[test]
    fn commutant_matches_exhaustive_count_on_hearts() {
        // enumerate all 2^16 matrices and count those commuting with every
        // generator; the count must be 2^commutant_dim
        for (built, expected) in [
            (build_cyclic(5).unwrap(), 4usize),
            (build_symmetric(5).unwrap(), 1),
        ] {
            let m = heart_module(&built.group, "heart").unwrap();
            let dim = commutant_dim(&m.gen_matrices).unwrap();
            assert_eq!(dim, expected);
            let mut count = 0u64;
            for bits in 0..(1u64 << 16) {
                let x = {
                    let mut x = crate::f2linalg::BitMatrix::zero(4, 4);
                    for pos in 0..16 {
                        if (bits >> pos) & 1 == 1 {
                            x.set(pos / 4, pos % 4, true);
                        }
                    }
                    x
                };
                if m.gen_matrices
                    .iter()
                    .all(|g| g.mul(&x).unwrap() == x.mul(g).unwrap())
                {
                    count += 1;
                }
            }
            assert_eq!(count, 1 << dim);
        }
    }

    #[test]
    fn trace_exclusion_on_l2_8() {
        let f8 = FieldSpec::binary_default(3).unwrap();
        let l28 = build_sl2(&f8).unwrap();
        let gens = &l28.steinberg.as_ref().unwrap().matrix_gens;
        let word = primitive_trace_witness(gens, 12).unwrap();
        // proper nonempty subsets are excluded
        for subset in [&[0u32][..], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]] {
            let out = trace_exclusion(gens, &word, subset).unwrap();
            assert!(!out.in_f2, "subset {subset:?} must have non-F2 trace");
            assert_eq!(out.dim, 1 << subset.len());
        }
        // the full set survives: alpha^7 = 1
        let full = trace_exclusion(gens, &word, &[0, 1, 2]).unwrap();
        assert!(full.in_f2);
        assert_eq!(full.trace_index, 1);
        // empty set is the trivial representation
        let empty = trace_exclusion(gens, &word, &[]).unwrap();
        assert!(empty.in_f2);
        assert_eq!(empty.dim, 1);
    }

    #[test]
    fn bruteforce_oracle_small_cases() {
        let c5 = build_cyclic(5).unwrap();
        let m = heart_module(&c5.group, "C5 heart").unwrap();
        let out = very_simple_bruteforce(&m).unwrap();
        assert!(!out.very_simple);
        let (witness, dim) = out.witness.unwrap();
        assert!(dim != 1 && dim != 16);
        // the witness closure really is stable
        let cl = algebra_closure(&[witness], &m.gen_matrices).unwrap();
        assert!(cl.verify_closed(&m.gen_matrices).unwrap());

        let d5 = build_dihedral(5).unwrap();
        let md5 = heart_module(&d5.group, "D5 heart").unwrap();
        assert!(!very_simple_bruteforce(&md5).unwrap().very_simple);
    }

    #[test]
    fn bruteforce_rejects_large_dims() {
        let f8 = FieldSpec::binary_default(3).unwrap();
        let l28 = build_sl2(&f8).unwrap();
        let m = heart_module(&l28.group, "L2(8) heart").unwrap();
        assert!(matches!(
            very_simple_bruteforce(&m),
            Err(RepcheckError::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn verdict_c5_not_very_simple_with_witness() {
        let c5 = build_cyclic(5).unwrap();
        let m = heart_module(&c5.group, "C5 heart").unwrap();
        let v = very_simple_verdict(&m, &c5.group, &c5.bsgs, None);
        assert_eq!(v.status, VerdictStatus::NotVerySimple);
        assert_eq!(v.conditions.absolute_simplicity, ConditionOutcome::Fail);
        assert_eq!(v.certificate.commutant_dim, Some(4));
        let w = v.certificate.witness.unwrap();
        assert!(w.dim > 1 && w.dim < 16);
    }

    #[test]
    fn verdict_a5_modulo_ledger() {
        let a5 = build_alternating(5).unwrap();
        let m = heart_module(&a5.group, "A5 heart").unwrap();
        let ledger = FactsLedger {
            min_proper_subgroup_index: Some(CitedFact {
                value: 5,
                citation: "A4 realizes the minimal index 5".into(),
            }),
            excluded_irreducible_dims: vec![DimExclusion {
                dim: 2,
                method: ExclusionMethod::TraceLemma,
                citation: "steinberg_exclusions via the SL2(F4) identification".into(),
            }],
            ..Default::default()
        };
        let v = very_simple_verdict(&m, &a5.group, &a5.bsgs, Some(&ledger));
        assert_eq!(v.status, VerdictStatus::VerySimpleModuloLedger);
        assert_eq!(v.conditions.tensor_exclusion, ConditionOutcome::Pass);
        assert_eq!(v.conditions.induction_exclusion, ConditionOutcome::FromLedger);
    }

    #[test]
    fn verdict_s5_undecided_by_index_2() {
        let s5 = build_symmetric(5).unwrap();
        let m = heart_module(&s5.group, "S5 heart").unwrap();
        let ledger = FactsLedger {
            min_proper_subgroup_index: Some(CitedFact {
                value: 2,
                citation: "sign homomorphism".into(),
            }),
            ..Default::default()
        };
        let v = very_simple_verdict(&m, &s5.group, &s5.bsgs, Some(&ledger));
        assert_eq!(v.status, VerdictStatus::Undecided);
        assert_eq!(v.conditions.induction_exclusion, ConditionOutcome::Fail);
        // but the oracle decides it positively
        assert!(very_simple_bruteforce(&m).unwrap().very_simple);
    }

    #[test]
    fn verdict_without_ledger_is_undecided() {
        let a5 = build_alternating(5).unwrap();
        let m = heart_module(&a5.group, "A5 heart").unwrap();
        let v = very_simple_verdict(&m, &a5.group, &a5.bsgs, None);
        assert_eq!(v.status, VerdictStatus::Undecided);
        assert_eq!(v.conditions.induction_exclusion, ConditionOutcome::Skipped);
    }

    #[test]
    fn tensor_control_s5() {
        let s5 = build_symmetric(5).unwrap();
        let m = heart_module(&s5.group, "S5 heart").unwrap();
        let sq = tensor_square(&m, "S5 heart squared");
        let ctl = tensor_square_control(&m, &sq).unwrap();
        assert!(ctl.stability_verified);
        assert_eq!(ctl.subalgebra_dim, 16);
        assert_eq!(ctl.product_dim, 16);
        // the criterion also reports the square as not very simple via (i)
        let v = very_simple_verdict(&sq, &s5.group, &s5.bsgs, None);
        assert_eq!(v.status, VerdictStatus::NotVerySimple);
    }
}
