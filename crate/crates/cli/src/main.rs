//! Batch front door: load algebras, relations, sets and operators from JSON
//! files, run property checks, law checks, correspondence sweeps,
//! counterexample searches and operator reconstruction, and recompute the
//! stored worked examples.
//!
//! Output is line-delimited JSON (`--pretty` for tables). Exit codes are a
//! stable contract: 0 when the checked statement holds, 1 when it fails
//! (with a machine-readable witness on stdout), 2 on usage, input, or
//! enumeration-cap errors.

mod examples;
mod reports;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use dmh_core::correspondence::{
    law_holds, paired_laws, search_counterexample, sweep, CorrespondenceError, OperatorLaw,
    RelationPredicate,
};
use dmh_core::crisp::{crisp_property, crisp_sweep, CrispError};
use dmh_core::fuzzy::{Context, EnumCaps, FuzzyError, Universe};
use dmh_core::io::{
    parse_axiom, parse_crisp_relation, parse_fuzzy_relation, parse_lattice, LoadError,
};
use dmh_core::lattice::{standard_algebra, LatticeError};
use dmh_core::reconstruction::{
    base_axiom_holds, characterized_axiom_holds, represents_upper, AxiomSpec,
};
use dmh_core::relations::{check_property, PropertyKind};

use reports::{
    CorrespondenceJson, LatticeSummaryJson, LawJson, PropertyJson, ReconstructJson, SearchJson,
    SweepJson,
};

/// Environment variable overriding both enumeration caps.
const ENUM_CAP_VAR: &str = "DMH_ENUM_CAP";

#[derive(Parser)]
#[command(name = "dmh", version)]
#[command(about = "Finite De Morgan Heyting algebras and rough approximation operators")]
struct Cli {
    /// Render human-readable lines instead of line-delimited JSON
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RelKind {
    Le,
    Eq,
}

#[derive(Subcommand)]
enum Commands {
    /// Validate a lattice file as a De Morgan Heyting algebra
    CheckLattice {
        /// Lattice JSON file
        file: PathBuf,
    },

    /// Check one relation property; exit 0 when it holds, 1 when it fails
    Check {
        /// Property name, e.g. `serial` or `symmetric_dm`
        property: String,

        /// Lattice JSON file (with `--relation`)
        #[arg(long, requires = "relation")]
        lattice: Option<PathBuf>,

        /// Fuzzy relation JSON file (with `--lattice`)
        #[arg(long, requires = "lattice")]
        relation: Option<PathBuf>,

        /// Crisp relation JSON file (instead of `--lattice`/`--relation`)
        #[arg(long, conflicts_with_all = ["lattice", "relation"])]
        crisp: Option<PathBuf>,
    },

    /// Check an operator-word law over every fuzzy set of a relation
    Law {
        /// Left word over {L, U}; `I` is the identity
        #[arg(long)]
        lhs: String,

        /// Right word over {L, U}
        #[arg(long)]
        rhs: String,

        /// Compare with `le` or `eq`
        #[arg(long, value_enum, default_value = "le")]
        rel: RelKind,

        /// Lattice JSON file
        #[arg(long)]
        lattice: PathBuf,

        /// Fuzzy relation JSON file
        #[arg(long)]
        relation: PathBuf,
    },

    /// Verify the property/operator-law correspondence on one relation
    Correspondence {
        /// One of the seven kinds with an all-sets law
        property: String,

        /// Lattice JSON file
        #[arg(long)]
        lattice: PathBuf,

        /// Fuzzy relation JSON file
        #[arg(long)]
        relation: PathBuf,
    },

    /// Run correspondence checks over every relation of a catalog context
    Sweep {
        /// Catalog algebra id (ignored with `--crisp`)
        #[arg(long, default_value = "m2_fix")]
        algebra: String,

        /// Universe size
        #[arg(long, visible_alias = "universe")]
        n: usize,

        /// Comma-separated property kinds (default: all supported)
        #[arg(long, value_delimiter = ',')]
        kinds: Vec<String>,

        /// Sweep classical relations against the classical correspondences
        #[arg(long)]
        crisp: bool,
    },

    /// Find the first relation on which two predicates disagree
    Search {
        /// Left predicate: property name or law such as `L<=U`
        #[arg(long)]
        left: String,

        /// Right predicate
        #[arg(long)]
        right: String,

        /// Catalog algebra id
        #[arg(long)]
        algebra: String,

        /// Universe size
        #[arg(long)]
        n: usize,
    },

    /// Decide whether an operator file is the upper approximation of a
    /// relation, optionally checking an axiom file on top
    Reconstruct {
        /// Operator JSON file (singleton images)
        #[arg(long)]
        operator: PathBuf,

        /// Axiom JSON file `{"S":[...],"T":[...]}`
        #[arg(long)]
        axiom: Option<PathBuf>,
    },

    /// Recompute a stored example and diff against its expected values
    Reproduce {
        /// One of the stored example ids; `list` prints them
        id: String,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Load(#[from] LoadError),
    #[error("{0}")]
    Lattice(#[from] LatticeError),
    #[error("{0}")]
    Fuzzy(#[from] FuzzyError),
    #[error("{0}")]
    Crisp(#[from] CrispError),
    #[error("{0}")]
    Correspondence(#[from] CorrespondenceError),
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn enum_caps() -> Result<EnumCaps, CliError> {
    let mut caps = EnumCaps::default();
    if let Ok(raw) = std::env::var(ENUM_CAP_VAR) {
        let cap: usize = raw.parse().map_err(|_| {
            CliError::Usage(format!("{ENUM_CAP_VAR} must be a positive integer, got `{raw}`"))
        })?;
        caps.sets = cap;
        caps.relations = cap;
    }
    Ok(caps)
}

fn parse_kind(name: &str) -> Result<PropertyKind, CliError> {
    name.parse()
        .map_err(|_| CliError::Usage(format!("unknown property kind `{name}`")))
}

fn emit<T: Serialize>(pretty: bool, value: &T, line: String) {
    if pretty {
        println!("{line}");
    } else {
        println!("{}", serde_json::to_string(value).expect("report serializes"));
    }
}

fn load_fuzzy_relation(
    lattice: &Path,
    relation: &Path,
) -> Result<(Context, dmh_core::fuzzy::FuzzyRelation), CliError> {
    let algebra = Arc::new(parse_lattice(&read(lattice)?)?);
    Ok(parse_fuzzy_relation(&read(relation)?, algebra)?)
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let caps = enum_caps()?;
    let pretty = cli.pretty;

    match &cli.command {
        Commands::CheckLattice { file } => {
            let algebra = parse_lattice(&read(file)?)?;
            let summary = LatticeSummaryJson {
                valid: true,
                elements: algebra.size(),
                bottom: algebra.name(algebra.bottom()).to_owned(),
                top: algebra.name(algebra.top()).to_owned(),
            };
            let line = summary.pretty();
            emit(pretty, &summary, line);
            Ok(ExitCode::SUCCESS)
        }

        Commands::Check {
            property,
            lattice,
            relation,
            crisp,
        } => {
            let kind = parse_kind(property)?;
            let report = match (lattice, relation, crisp) {
                (Some(lattice), Some(relation), None) => {
                    let (_, rel) = load_fuzzy_relation(lattice, relation)?;
                    check_property(&rel, kind)
                }
                (None, None, Some(crisp)) => {
                    let rel = parse_crisp_relation(&read(crisp)?)?;
                    crisp_property(&rel, kind)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "pass either --lattice with --relation, or --crisp".into(),
                    ))
                }
            };
            let json = PropertyJson::from(&report);
            let line = json.pretty();
            emit(pretty, &json, line);
            Ok(if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Commands::Law {
            lhs,
            rhs,
            rel,
            lattice,
            relation,
        } => {
            let law = match rel {
                RelKind::Le => OperatorLaw::le(
                    lhs.parse().map_err(CorrespondenceError::from)?,
                    rhs.parse().map_err(CorrespondenceError::from)?,
                ),
                RelKind::Eq => OperatorLaw::eq(
                    lhs.parse().map_err(CorrespondenceError::from)?,
                    rhs.parse().map_err(CorrespondenceError::from)?,
                ),
            };
            let (_, fuzzy_rel) = load_fuzzy_relation(lattice, relation)?;
            let report = law_holds(&fuzzy_rel, &law, caps)?;
            let json = LawJson::from(&report);
            let line = json.pretty();
            emit(pretty, &json, line);
            Ok(if report.holds_for_all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Commands::Correspondence {
            property,
            lattice,
            relation,
        } => {
            let kind = parse_kind(property)?;
            let (law_u, law_l) = paired_laws(kind).map_err(CorrespondenceError::from)?;
            let (_, rel) = load_fuzzy_relation(lattice, relation)?;
            let prop = check_property(&rel, kind).holds;
            let u_holds = law_holds(&rel, &law_u, caps)?.holds_for_all;
            let l_holds = law_holds(&rel, &law_l, caps)?.holds_for_all;
            let json = CorrespondenceJson {
                property: kind.to_string(),
                property_holds: prop,
                law_u: law_u.to_string(),
                law_u_holds: u_holds,
                law_l: law_l.to_string(),
                law_l_holds: l_holds,
                verified: prop == u_holds && prop == l_holds,
            };
            let verified = json.verified;
            let line = json.pretty();
            emit(pretty, &json, line);
            Ok(if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Commands::Sweep {
            algebra,
            n,
            kinds,
            crisp,
        } => {
            let mut disagreements = 0usize;
            if *crisp {
                let kinds = if kinds.is_empty() {
                    vec![
                        PropertyKind::Serial,
                        PropertyKind::Reflexive,
                        PropertyKind::SymmetricClassical,
                        PropertyKind::Transitive,
                        PropertyKind::Mediate,
                        PropertyKind::Euclidean,
                    ]
                } else {
                    kinds.iter().map(|k| parse_kind(k)).collect::<Result<_, _>>()?
                };
                let universe = Arc::new(Universe::of_size(*n)?);
                for kind in kinds {
                    let report = crisp_sweep(&universe, kind, caps.relations)?;
                    disagreements += report.disagreements;
                    let json = SweepJson::from(&report);
                    let line = json.pretty();
                    emit(pretty, &json, line);
                }
            } else {
                let kinds: Vec<PropertyKind> = if kinds.is_empty() {
                    PropertyKind::CORRESPONDENCE.to_vec()
                } else {
                    kinds.iter().map(|k| parse_kind(k)).collect::<Result<_, _>>()?
                };
                let ctx = Context::new(
                    Arc::new(standard_algebra(algebra)?),
                    Arc::new(Universe::of_size(*n)?),
                );
                for kind in kinds {
                    let report = sweep(&ctx, kind, caps)?;
                    disagreements += report.disagreements;
                    let json = SweepJson::from(&report);
                    let line = json.pretty();
                    emit(pretty, &json, line);
                }
            }
            Ok(if disagreements == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Commands::Search {
            left,
            right,
            algebra,
            n,
        } => {
            let left_pred: RelationPredicate = left.parse()?;
            let right_pred: RelationPredicate = right.parse()?;
            let ctx = Context::new(
                Arc::new(standard_algebra(algebra)?),
                Arc::new(Universe::of_size(*n)?),
            );
            let witness = search_counterexample(&ctx, &left_pred, &right_pred, caps)?;
            let json = SearchJson::new(left_pred.to_string(), right_pred.to_string(), witness.as_ref());
            let found = json.found;
            let line = json.pretty();
            emit(pretty, &json, line);
            // A disagreement is reported like a failed law: exit 1 with the
            // witness on stdout.
            Ok(if found {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }

        Commands::Reconstruct { operator, axiom } => {
            let op = dmh_core::io::parse_operator(&read(operator)?)?;
            let base = base_axiom_holds(&op, caps)?;
            let relation = represents_upper(&op, caps)?;
            let axiom_holds = match axiom {
                Some(path) => {
                    let spec: AxiomSpec = parse_axiom(&read(path)?)?;
                    Some(characterized_axiom_holds(&op, &spec, caps)?)
                }
                None => None,
            };
            let json = ReconstructJson {
                base_axiom: base,
                representable: relation.is_some(),
                relation: relation
                    .as_ref()
                    .map(dmh_core::io::FuzzyRelationFile::from_relation),
                axiom_holds,
            };
            let ok = axiom_holds.unwrap_or(json.representable);
            let line = json.pretty();
            emit(pretty, &json, line);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }

        Commands::Reproduce { id } => {
            if id == "list" {
                for id in examples::EXAMPLE_IDS {
                    println!("{id}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let lines = examples::reproduce(id)
                .ok_or_else(|| CliError::Usage(format!("unknown example id `{id}`")))?;
            let mut all_pass = true;
            for line in lines {
                all_pass &= line.pass;
                let text = line.pretty();
                emit(pretty, &line, text);
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{}", serde_json::json!({ "error": err.to_string() }));
            ExitCode::from(2)
        }
    }
}
