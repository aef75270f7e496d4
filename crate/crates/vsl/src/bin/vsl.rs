//! Command-line front end: build the supported groups, certify very
//! simplicity of their heart modules, run the definitional oracle on small
//! cases, and verify hyperelliptic 2-torsion structure.
//!
//! Exit codes: 0 when the requested property holds (certified or oracle-true
//! or all jacobian checks pass), 2 when it does not hold or is undecided,
//! 1 on construction or validation errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use vsl::pipeline::{
    self, certify, group_json, jacobian, oracle, CertifyOptions, Family, FamilySpec,
};
use vsl::repcheck::VerdictStatus;
use vsl::report::{to_sorted_json, Envelope};

#[derive(Parser)]
#[command(name = "vsl", version, about = "very-simple module certification and jacobian 2-torsion checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// group family: sl2, sz, m11, m11on12, m12, l2_11, symmetric,
    /// alternating, cyclic, dihedral
    #[arg(long)]
    family: String,
    /// field size for sl2/sz (a power of 2)
    #[arg(long)]
    q: Option<u64>,
    /// number of points for the symmetric/alternating/cyclic/dihedral series
    #[arg(long)]
    n: Option<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, pipeline::PipelineError> {
        Ok(FamilySpec {
            family: Family::parse(&self.family)?,
            q: self.q,
            n: self.n,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the very-simplicity criterion on the heart module of a group
    Certify {
        #[command(flatten)]
        family: FamilyArgs,
        /// print the full JSON report to stdout
        #[arg(long)]
        emit_json: bool,
        /// drop all cited facts; verdicts needing them become undecided
        #[arg(long)]
        no_ledger: bool,
        /// generator word length bound for the trace-test witness search
        #[arg(long, default_value_t = 12)]
        word_bound: usize,
        /// also compute the commutant dimension cross-check
        #[arg(long)]
        commutant: bool,
    },
    /// Brute-force definitional oracle (module dimension at most 5)
    Oracle {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        emit_json: bool,
    },
    /// Verify the 2-torsion of y^2 = f(x) over F_p
    #[command(name = "jac-2tors")]
    Jac {
        /// odd prime characteristic of the base field
        #[arg(long)]
        p: u64,
        /// comma-separated coefficients of f, constant term first
        #[arg(long)]
        f: String,
        /// write the JSON report to this path
        #[arg(long)]
        report: Option<std::path::PathBuf>,
        #[arg(long)]
        emit_json: bool,
        /// cap on the number of subsets entering the quadratic pairwise check
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Build a group and emit its serialized form
    #[command(name = "build-group")]
    BuildGroup {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        emit_json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Certify {
            family,
            emit_json,
            no_ledger,
            word_bound,
            commutant,
        } => {
            let spec = family.spec()?;
            let opts = CertifyOptions {
                use_ledger: !no_ledger,
                word_bound,
                check_commutant: commutant,
                ..Default::default()
            };
            let out = certify(&spec, &opts)?;
            let ok = matches!(
                out.verdict.status,
                VerdictStatus::VerySimple | VerdictStatus::VerySimpleModuloLedger
            );
            if emit_json {
                print!("{}", to_sorted_json(&Envelope::new("certify", &out)));
            } else {
                println!("{}: |G| = {}, degree {}, {:?}", out.label, out.order, out.degree, out.transitivity);
                println!(
                    "heart module dim {}, enveloping dim {}{}",
                    out.module_dim,
                    out.enveloping_dim,
                    out.commutant_dim
                        .map(|c| format!(", commutant dim {c}"))
                        .unwrap_or_default()
                );
                if let Some(st) = &out.steinberg {
                    println!(
                        "trace tests exclude dims {:?} (witness word {:?})",
                        st.excluded_dims, st.witness_word
                    );
                }
                println!("verdict: {:?} {:?}", out.verdict.status, out.verdict.conditions);
                for c in &out.verdict.certificate.ledger_citations {
                    println!("  cited: {c}");
                }
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Oracle { family, emit_json } => {
            let spec = family.spec()?;
            let (label, dim, out) = oracle(&spec)?;
            #[derive(serde::Serialize)]
            struct OracleReport<'a> {
                label: &'a str,
                module_dim: usize,
                #[serde(flatten)]
                outcome: &'a pipeline::OracleOutcome,
            }
            if emit_json {
                print!(
                    "{}",
                    to_sorted_json(&Envelope::new(
                        "oracle",
                        OracleReport {
                            label: &label,
                            module_dim: dim,
                            outcome: &out
                        }
                    ))
                );
            } else {
                println!(
                    "{label}: dim {dim}, {} candidates scanned, very simple: {}",
                    out.candidates_scanned, out.very_simple
                );
                if let Some(d) = out.witness_closure_dim {
                    println!("witness generates a stable subalgebra of dimension {d}");
                }
            }
            Ok(if out.very_simple { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Jac {
            p,
            f,
            report,
            emit_json,
            cap,
        } => {
            let coeffs: Vec<u64> = f
                .split(',')
                .map(|s| s.trim().parse::<u64>())
                .collect::<Result<_, _>>()?;
            let out = jacobian(p, &coeffs, cap)?;
            let ok = out.all_pass();
            let json = to_sorted_json(&Envelope::new("jac-2tors", &out));
            if let Some(path) = report {
                let mut fh = std::fs::File::create(path)?;
                fh.write_all(json.as_bytes())?;
            }
            if emit_json {
                print!("{json}");
            } else {
                println!(
                    "y^2 = f(x) over F{}: n = {}, genus {}, splitting degree {}",
                    out.p, out.n, out.genus, out.splitting_degree
                );
                println!(
                    "{} classes (expected {}), symdiff law over {} pairs: {}",
                    out.class_count, out.expected_class_count, out.symdiff_pairs_checked, out.symdiff_law_holds
                );
                println!("all checks pass: {ok}");
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::BuildGroup { family, emit_json } => {
            let spec = family.spec()?;
            let (label, gj) = group_json(&spec)?;
            #[derive(serde::Serialize)]
            struct GroupReport<'a> {
                label: &'a str,
                #[serde(flatten)]
                group: &'a vsl::permgrp::GroupJson,
            }
            if emit_json {
                print!(
                    "{}",
                    to_sorted_json(&Envelope::new(
                        "build-group",
                        GroupReport {
                            label: &label,
                            group: &gj
                        }
                    ))
                );
            } else {
                println!("{label}: degree {}, order {}", gj.degree, gj.claimed_order);
                for g in &gj.generators {
                    println!("  {g:?}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
