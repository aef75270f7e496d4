//! Orchestration: resolve a group-family request, build the group and its
//! heart module, assemble the facts ledger from the versioned data file,
//! run the computed exclusions, and produce the verdict together with every
//! certificate number a report needs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2linalg::commutant_dim;
use crate::ff::{FieldMatrix, FieldSpec};
use crate::groups::{
    build_alternating, build_cyclic, build_dihedral, build_mathieu, build_sl2, build_suzuki,
    build_symmetric, BuiltGroup, GroupsError, MathieuName,
};
use crate::hyperjac::{verify_two_torsion, Curve, JacError, TwoTorsionReport};
use crate::permgrp::{is_perfect, transitivity, GroupJson, Transitivity};
use crate::permmod::{heart_module, F2Module, PermmodError};
use crate::repcheck::{
    brauer_nesbitt_check, enveloping_dim, primitive_trace_witness, trace_exclusion,
    very_simple_bruteforce, very_simple_verdict, CitedFact, DimExclusion, ExclusionMethod,
    FactSource, FactsLedger, RepcheckError, TraceOutcome, Verdict,
};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("family {0} requires --q")]
    MissingQ(String),
    #[error("family {0} requires --n")]
    MissingN(String),
    #[error("q = {0} is not a power of 2 between 4 and 256")]
    BadQ(u64),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error(transparent)]
    Groups(#[from] GroupsError),
    #[error(transparent)]
    Perm(#[from] crate::permgrp::PermError),
    #[error(transparent)]
    Permmod(#[from] PermmodError),
    #[error(transparent)]
    Repcheck(#[from] RepcheckError),
    #[error(transparent)]
    F2(#[from] crate::f2linalg::F2Error),
    #[error(transparent)]
    Jac(#[from] JacError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Sl2,
    Sz,
    M11,
    M11on12,
    M12,
    L2_11,
    Symmetric,
    Alternating,
    Cyclic,
    Dihedral,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self, PipelineError> {
        Ok(match s {
            "sl2" => Family::Sl2,
            "sz" => Family::Sz,
            "m11" => Family::M11,
            "m11on12" | "m11_on12" => Family::M11on12,
            "m12" => Family::M12,
            "l2_11" | "l211" => Family::L2_11,
            "symmetric" | "sym" => Family::Symmetric,
            "alternating" | "alt" => Family::Alternating,
            "cyclic" => Family::Cyclic,
            "dihedral" => Family::Dihedral,
            other => return Err(PipelineError::UnknownFamily(other.to_string())),
        })
    }

    fn ledger_key(self) -> &'static str {
        match self {
            Family::Sl2 => "sl2",
            Family::Sz => "sz",
            Family::M11 => "m11_deg11",
            Family::M11on12 => "m11_deg12",
            Family::M12 => "m12",
            Family::L2_11 => "l2_11",
            Family::Symmetric => "sym",
            Family::Alternating => "alt",
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub q: Option<u64>,
    pub n: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct CertifyOptions {
    pub use_ledger: bool,
    pub word_bound: usize,
    /// also compute the commutant dimension as a cross-check
    pub check_commutant: bool,
    /// run the definitional oracle when the module dimension allows it
    pub oracle_if_small: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            use_ledger: true,
            word_bound: 12,
            check_commutant: false,
            oracle_if_small: true,
        }
    }
}

fn binary_field_for(q: u64) -> Result<std::sync::Arc<FieldSpec>, PipelineError> {
    if !q.is_power_of_two() || !(4..=256).contains(&q) {
        return Err(PipelineError::BadQ(q));
    }
    let m = q.trailing_zeros() as usize;
    FieldSpec::binary_default(m).map_err(|_| PipelineError::BadQ(q))
}

/// Builds the permutation group for a family request.
pub fn build_family(spec: &FamilySpec) -> Result<BuiltGroup, PipelineError> {
    let need_q = || spec.q.ok_or_else(|| PipelineError::MissingQ(format!("{:?}", spec.family)));
    let need_n = || spec.n.ok_or_else(|| PipelineError::MissingN(format!("{:?}", spec.family)));
    Ok(match spec.family {
        Family::Sl2 => build_sl2(&binary_field_for(need_q()?)?)?,
        Family::Sz => build_suzuki(&binary_field_for(need_q()?)?)?,
        Family::M11 => build_mathieu(MathieuName::M11Deg11)?,
        Family::M11on12 => build_mathieu(MathieuName::M11Deg12)?,
        Family::M12 => build_mathieu(MathieuName::M12)?,
        Family::L2_11 => build_mathieu(MathieuName::L2_11)?,
        Family::Symmetric => build_symmetric(need_n()?)?,
        Family::Alternating => build_alternating(need_n()?)?,
        Family::Cyclic => build_cyclic(need_n()?)?,
        Family::Dihedral => build_dihedral(need_n()?)?,
    })
}

// ---- ledger data file ----

const LEDGER_JSON: &str = include_str!("../data/ledger.json");

#[derive(Debug, Deserialize)]
struct LedgerFile {
    version: u32,
    families: BTreeMap<String, LedgerEntry>,
}

#[derive(Debug, Deserialize)]
struct LedgerEntry {
    min_index: Option<MinIndexEntry>,
    admissible_dim_base: Option<CitedValueEntry>,
    excluded_dims: Option<Vec<CitedDimEntry>>,
}

#[derive(Debug, Deserialize)]
struct MinIndexEntry {
    value: Option<u64>,
    rule: Option<String>,
    citation: String,
}

#[derive(Debug, Deserialize)]
struct CitedValueEntry {
    value: u64,
    citation: String,
}

#[derive(Debug, Deserialize)]
struct CitedDimEntry {
    dim: u64,
    citation: String,
}

pub fn ledger_version() -> u32 {
    let file: LedgerFile = serde_json::from_str(LEDGER_JSON).expect("embedded ledger parses");
    file.version
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..=n).find(|d| n % d == 0).unwrap_or(n)
}

/// Resolves the cited facts for a family, evaluating closed-form index
/// rules at the concrete parameters.
fn resolve_ledger(spec: &FamilySpec) -> FactsLedger {
    let file: LedgerFile = serde_json::from_str(LEDGER_JSON).expect("embedded ledger parses");
    let mut out = FactsLedger::default();
    let Some(entry) = file.families.get(spec.family.ledger_key()) else {
        return out;
    };
    if let Some(mi) = &entry.min_index {
        let value = mi.value.or_else(|| {
            mi.rule.as_deref().and_then(|rule| match rule {
                "q_plus_1" => spec.q.map(|q| q + 1),
                "q_squared_plus_1" => spec.q.map(|q| q * q + 1),
                "n" => spec.n.map(|n| n as u64),
                "smallest_prime_factor" => spec.n.map(|n| smallest_prime_factor(n as u64)),
                _ => None,
            })
        });
        if let Some(value) = value {
            out.min_proper_subgroup_index = Some(CitedFact {
                value,
                citation: mi.citation.clone(),
            });
        }
    }
    if let Some(base) = &entry.admissible_dim_base {
        out.admissible_dim_base = Some(CitedFact {
            value: base.value,
            citation: base.citation.clone(),
        });
    }
    for d in entry.excluded_dims.iter().flatten() {
        out.excluded_irreducible_dims.push(DimExclusion {
            dim: d.dim,
            method: ExclusionMethod::Cited,
            citation: d.citation.clone(),
        });
    }
    out
}

// ---- trace-test exclusions ----

/// The trace-test report for a Lie-type family: one witness word whose trace
/// is primitive, the trace of every proper nonempty twist subset (all
/// outside F₂), and the tensor dimensions this excludes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SteinbergReport {
    pub natural_dim: usize,
    pub field_degree: usize,
    pub witness_word: Vec<usize>,
    pub witness_trace_index: u64,
    pub outcomes: Vec<TraceOutcome>,
    pub excluded_dims: Vec<u64>,
}

pub fn steinberg_exclusions(
    gens: &[FieldMatrix],
    word_bound: usize,
) -> Result<SteinbergReport, RepcheckError> {
    let m = gens[0].field().degree;
    let d = gens[0].rows();
    let word = primitive_trace_witness(gens, word_bound)?;
    let witness_trace = {
        let mut u = FieldMatrix::identity(gens[0].field(), d);
        for &i in &word {
            u = gens[i].mul(&u)?;
        }
        u.trace()?.index()
    };
    let mut outcomes = Vec::new();
    let mut dims = Vec::new();
    for mask in 1u64..((1 << m) - 1) {
        let subset: Vec<u32> = (0..m as u32).filter(|i| (mask >> i) & 1 == 1).collect();
        let out = trace_exclusion(gens, &word, &subset)?;
        assert!(
            !out.in_f2,
            "a primitive-trace witness forces proper twist subsets outside F2"
        );
        dims.push(out.dim);
        outcomes.push(out);
    }
    dims.sort_unstable();
    dims.dedup();
    Ok(SteinbergReport {
        natural_dim: d,
        field_degree: m,
        witness_word: word,
        witness_trace_index: witness_trace,
        outcomes,
        excluded_dims: dims,
    })
}

/// Trace-test data for the verdict, when the family admits it. For sl2 and
/// sz this runs on the construction's own matrix generators. For the
/// alternating group on 5 points it runs on SL2(F4) after verifying that
/// the SL2(F4) action generates the same subgroup of Sym(5); the order-60
/// subgroup of Sym(5) is unique, but the containment is checked anyway.
fn computed_exclusions(
    spec: &FamilySpec,
    built: &BuiltGroup,
    word_bound: usize,
    ledger: &mut FactsLedger,
) -> Result<Option<SteinbergReport>, PipelineError> {
    let report = match spec.family {
        Family::Sl2 | Family::Sz => {
            let st = built.steinberg.as_ref().expect("Lie-type construction keeps its matrices");
            Some(steinberg_exclusions(&st.matrix_gens, word_bound)?)
        }
        Family::Alternating if spec.n == Some(5) => {
            let f4 = FieldSpec::binary_default(2).expect("F4 exists");
            let sl2 = build_sl2(&f4)?;
            let same_subgroup = sl2.bsgs.order() == built.bsgs.order()
                && built.group.generators().iter().all(|g| sl2.bsgs.contains(g))
                && sl2.group.generators().iter().all(|g| built.bsgs.contains(g));
            if same_subgroup {
                ledger.notes.push(
                    "alternating group on 5 points identified with SL2(F4) in its projective-line action (orders and generator memberships checked); trace-test exclusions transfer".into(),
                );
                let st = sl2.steinberg.as_ref().unwrap();
                Some(steinberg_exclusions(&st.matrix_gens, word_bound)?)
            } else {
                None
            }
        }
        _ => None,
    };
    if let Some(rep) = &report {
        for &dim in &rep.excluded_dims {
            ledger.excluded_irreducible_dims.push(DimExclusion {
                dim,
                method: ExclusionMethod::TraceLemma,
                citation: format!(
                    "trace test: witness word {:?} has primitive trace, every proper twist subset has trace outside F2",
                    rep.witness_word
                ),
            });
        }
        if matches!(spec.family, Family::Alternating) {
            // the classification base for SL2(F4) transfers along the
            // identification as well
            let file: LedgerFile = serde_json::from_str(LEDGER_JSON).unwrap();
            if let Some(base) = file.families.get("sl2").and_then(|e| e.admissible_dim_base.as_ref()) {
                ledger.admissible_dim_base = Some(CitedFact {
                    value: base.value,
                    citation: base.citation.clone(),
                });
            }
        }
    }
    Ok(report)
}

// ---- certify ----

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub very_simple: bool,
    pub witness_hex: Option<Vec<String>>,
    pub witness_closure_dim: Option<usize>,
    pub candidates_scanned: u64,
}

#[derive(Debug, Serialize)]
pub struct CertifyOutcome {
    pub key: String,
    pub label: String,
    pub degree: usize,
    pub order: u64,
    pub transitivity: Transitivity,
    pub perfect: bool,
    pub module_dim: usize,
    pub enveloping_dim: usize,
    pub commutant_dim: Option<usize>,
    pub brauer_nesbitt: bool,
    pub steinberg: Option<SteinbergReport>,
    pub ledger_used: bool,
    pub verdict: Verdict,
    pub oracle: Option<OracleOutcome>,
}

/// The full certification pipeline for one family request.
pub fn certify(spec: &FamilySpec, opts: &CertifyOptions) -> Result<CertifyOutcome, PipelineError> {
    let built = build_family(spec)?;
    let module = heart_module(&built.group, &built.label)?;
    let trans = transitivity(&built.group)?;
    let perfect = is_perfect(&built.group, &built.bsgs);

    let mut ledger = if opts.use_ledger {
        resolve_ledger(spec)
    } else {
        FactsLedger::default()
    };
    ledger.is_perfect = Some((perfect, FactSource::Computed));
    let steinberg = computed_exclusions(spec, &built, opts.word_bound, &mut ledger)?;

    let verdict = very_simple_verdict(&module, &built.group, &built.bsgs, Some(&ledger));
    let commutant = if opts.check_commutant && verdict.certificate.commutant_dim.is_none() {
        Some(commutant_dim(&module.gen_matrices)?)
    } else {
        verdict.certificate.commutant_dim
    };
    let oracle = if opts.oracle_if_small && module.dim <= 5 {
        let out = very_simple_bruteforce(&module)?;
        Some(OracleOutcome {
            very_simple: out.very_simple,
            witness_hex: out.witness.as_ref().map(|(w, _)| w.to_hex_rows()),
            witness_closure_dim: out.witness.as_ref().map(|(_, d)| *d),
            candidates_scanned: out.candidates_scanned,
        })
    } else {
        None
    };

    Ok(CertifyOutcome {
        key: built.key,
        label: built.label,
        degree: built.group.degree(),
        order: built.bsgs.order(),
        transitivity: trans,
        perfect,
        module_dim: module.dim,
        enveloping_dim: verdict.certificate.enveloping_dim,
        commutant_dim: commutant,
        brauer_nesbitt: brauer_nesbitt_check(&built.group, &built.bsgs),
        steinberg,
        ledger_used: opts.use_ledger,
        verdict,
        oracle,
    })
}

/// Just the definitional oracle, for dimensions at most 5.
pub fn oracle(spec: &FamilySpec) -> Result<(String, usize, OracleOutcome), PipelineError> {
    let built = build_family(spec)?;
    let module = heart_module(&built.group, &built.label)?;
    let out = very_simple_bruteforce(&module)?;
    Ok((
        built.label,
        module.dim,
        OracleOutcome {
            very_simple: out.very_simple,
            witness_hex: out.witness.as_ref().map(|(w, _)| w.to_hex_rows()),
            witness_closure_dim: out.witness.as_ref().map(|(_, d)| *d),
            candidates_scanned: out.candidates_scanned,
        },
    ))
}

/// Builds a curve over F_p and runs the two-torsion verification.
pub fn jacobian(p: u64, f_coeffs: &[u64], pair_cap: usize) -> Result<TwoTorsionReport, PipelineError> {
    let base = FieldSpec::new(p, 1, vec![0, 1]).map_err(JacError::from)?;
    let curve = Curve::new(&base, f_coeffs)?;
    Ok(verify_two_torsion(&curve, pair_cap)?)
}

/// Group serialization for `build-group`.
pub fn group_json(spec: &FamilySpec) -> Result<(String, GroupJson), PipelineError> {
    let built = build_family(spec)?;
    Ok((built.label.clone(), GroupJson::from_group(&built.group, &built.bsgs)))
}

/// Certification entry point used by tests and the C interface; the heart
/// module and group are built fresh each call.
pub fn heart_of(spec: &FamilySpec) -> Result<(BuiltGroup, F2Module), PipelineError> {
    let built = build_family(spec)?;
    let module = heart_module(&built.group, &built.label)?;
    Ok((built, module))
}

/// Enveloping dimension for an externally supplied family, a convenience
/// wrapper used by the acceptance suite.
pub fn enveloping_of(spec: &FamilySpec) -> Result<usize, PipelineError> {
    let (built, module) = heart_of(spec)?;
    Ok(enveloping_dim(&module, &built.bsgs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcheck::VerdictStatus;

    fn spec(family: Family, q: Option<u64>, n: Option<usize>) -> FamilySpec {
        FamilySpec { family, q, n }
    }

    #[test]
    fn certify_l2_8() {
        let out = certify(&spec(Family::Sl2, Some(8), None), &CertifyOptions::default()).unwrap();
        assert_eq!(out.degree, 9);
        assert_eq!(out.order, 504);
        assert_eq!(out.transitivity, Transitivity::TwoTransitive);
        assert!(out.brauer_nesbitt);
        assert_eq!(out.module_dim, 8);
        assert_eq!(out.enveloping_dim, 64);
        let st = out.steinberg.as_ref().unwrap();
        assert_eq!(st.excluded_dims, vec![2, 4]);
        assert_eq!(out.verdict.status, VerdictStatus::VerySimpleModuloLedger);
        assert_eq!(
            out.verdict.conditions.tensor_exclusion,
            crate::repcheck::ConditionOutcome::Pass
        );
        assert_eq!(
            out.verdict.conditions.induction_exclusion,
            crate::repcheck::ConditionOutcome::FromLedger
        );
    }

    #[test]
    fn certify_cyclic_5_is_refuted_with_witness() {
        let out = certify(&spec(Family::Cyclic, None, Some(5)), &CertifyOptions::default()).unwrap();
        assert_eq!(out.verdict.status, VerdictStatus::NotVerySimple);
        let oracle = out.oracle.unwrap();
        assert!(!oracle.very_simple);
        assert!(oracle.witness_closure_dim.is_some());
    }

    #[test]
    fn certify_alternating_5_transfers_sl2_exclusions() {
        let out = certify(&spec(Family::Alternating, None, Some(5)), &CertifyOptions::default()).unwrap();
        assert_eq!(out.verdict.status, VerdictStatus::VerySimpleModuloLedger);
        assert!(out.steinberg.is_some());
        assert!(out.oracle.unwrap().very_simple);
    }

    #[test]
    fn no_ledger_downgrades() {
        let opts = CertifyOptions {
            use_ledger: false,
            ..Default::default()
        };
        let out = certify(&spec(Family::Sl2, Some(8), None), &opts).unwrap();
        assert_eq!(out.verdict.status, VerdictStatus::Undecided);
    }

    #[test]
    fn jacobian_wrapper_runs() {
        // x^5 + 2x + 1 over F11 happens to be squarefree
        let report = jacobian(11, &[1, 2, 0, 0, 0, 1], 64).unwrap();
        assert_eq!(report.expected_class_count, 16);
        assert!(report.class_count_matches);
    }

    #[test]
    fn family_parsing() {
        assert_eq!(Family::parse("sz").unwrap(), Family::Sz);
        assert!(Family::parse("nope").is_err());
        assert!(matches!(
            build_family(&spec(Family::Sl2, None, None)),
            Err(PipelineError::MissingQ(_))
        ));
        assert!(matches!(
            build_family(&spec(Family::Sl2, Some(7), None)),
            Err(PipelineError::BadQ(7))
        ));
    }
}
