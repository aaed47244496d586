//! Command line front end.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::abacus::{
    ell_core, ell_quotient, from_quotient, has_trivial_core, BeadDiagram, MultiPartition,
};
use crate::centre::centre_presentation;
use crate::error::{Error, Result};
use crate::hilbert::{
    dimension_hook_formula, graded_dimensions, graded_dimensions_from_presentation,
    hilbert_series_formula, DEFAULT_SLACK,
};
use crate::partition::{partitions_of, Partition};
use crate::poly::format_rational;
use crate::presentation::{
    direct_presentation, presentation_for, simplify, GradedPresentation, Label,
};
use crate::wronski::{schubert_basis, wronski_relations, wronskian};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "cherednik",
    version,
    about = "Presentations of the centre of restricted rational Cherednik algebras",
    after_help = "Partitions are written 3,2 and multipartitions 3,2|1,1|2, with - for an empty part.\nAll results assume a generic parameter c (smooth Calogero-Moser space)."
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partition combinatorics.
    Partition {
        #[command(subcommand)]
        command: PartitionCommand,
    },
    /// Bead diagrams, cores and quotients.
    Abacus {
        #[command(subcommand)]
        command: AbacusCommand,
    },
    /// Presentation of A(λ)+ or of its wreath analogue.
    Presentation {
        /// A partition, or a multipartition such as 1,1|-|1.
        label: String,
        /// With ell > 1 a plain partition is replaced by its ell-quotient.
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, conflicts_with = "simplified")]
        raw: bool,
        #[arg(long)]
        simplified: bool,
    },
    /// Full symbolic Wronskian of the Schubert cell basis.
    Wronskian { lambda: String },
    /// Hilbert series and dimension.
    Hilbert {
        label: String,
        #[arg(long, default_value_t = 1)]
        ell: usize,
    },
    /// The centre as a sum of blocks.
    Centre {
        n: usize,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long)]
        simplified: bool,
    },
    /// Cross-checks the combinatorial presentation against the Wronskian.
    Selftest {
        /// Largest n to check; defaults to 5, or 7 with --deep.
        n_max: Option<usize>,
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum PartitionCommand {
    /// Hooks, β-set, transpose and dimension.
    Info { lambda: String },
}

#[derive(Debug, Subcommand)]
pub enum AbacusCommand {
    /// ℓ-core.
    Core {
        lambda: String,
        #[arg(long)]
        ell: usize,
    },
    /// ℓ-quotient and ℓ-core.
    Quotient {
        lambda: String,
        #[arg(long)]
        ell: usize,
    },
    /// The trivial-core partition with the given ℓ-quotient.
    Compose {
        q: String,
        #[arg(long)]
        ell: usize,
    },
}

/// Rendered result of one command.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut t = self.text.clone();
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            }
            Format::Json => to_canonical_json(&self.json),
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn partition_arg(s: &str) -> Result<Partition> {
    s.parse()
}

fn check_ell(ell: usize) -> Result<usize> {
    if ell == 0 {
        Err(Error::InvalidEll)
    } else {
        Ok(ell)
    }
}

/// Resolves a presentation argument to a label.
fn label_arg(s: &str, ell: usize) -> Result<Label> {
    check_ell(ell)?;
    if s.contains('|') {
        let q: MultiPartition = s.parse()?;
        if ell != 1 && q.ell() != ell {
            return Err(Error::LengthMismatch {
                expected: ell,
                found: q.ell(),
            });
        }
        return Ok(Label::Multi(q));
    }
    let lambda = partition_arg(s)?;
    if ell == 1 {
        return Ok(Label::Partition(lambda));
    }
    if !has_trivial_core(&lambda, ell)? {
        return Err(Error::NontrivialCore(lambda.to_string()));
    }
    Ok(Label::Multi(ell_quotient(&lambda, ell)?))
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn partition_info(lambda: &Partition) -> Result<Output> {
    let n = lambda.size();
    let rows: Vec<Vec<usize>> = (1..=lambda.len())
        .map(|i| {
            (1..=lambda.part(i))
                .map(|j| lambda.hook_length(crate::partition::Cell::new(i, j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let beta = lambda.beta_set(n)?;
    let dim = dimension_hook_formula(lambda)?;
    let transpose = lambda.transpose();
    let mut text = format!("partition: {lambda}\nsize: {n}\n");
    text.push_str("hooks:\n");
    for r in &rows {
        text.push_str(&format!("  {}\n", join(r, " ")));
    }
    text.push_str(&format!(
        "beta set: {}\ntranspose: {transpose}\ndimension: {dim}\n",
        join(beta.values(), ",")
    ));
    Ok(Output {
        text,
        json: json!({
            "partition": lambda.to_string(),
            "size": n,
            "hooks": rows,
            "beta_set": beta.values(),
            "transpose": transpose.to_string(),
            "dimension": dim.to_string(),
        }),
    })
}

fn abacus(cmd: &AbacusCommand) -> Result<Output> {
    match cmd {
        AbacusCommand::Core { lambda, ell } => {
            let lambda = partition_arg(lambda)?;
            let ell = check_ell(*ell)?;
            let core = ell_core(&lambda, ell)?;
            Ok(Output {
                text: core.to_string(),
                json: json!({ "partition": lambda.to_string(), "ell": ell, "core": core.to_string() }),
            })
        }
        AbacusCommand::Quotient { lambda, ell } => {
            let lambda = partition_arg(lambda)?;
            let ell = check_ell(*ell)?;
            let core = ell_core(&lambda, ell)?;
            let quo = ell_quotient(&lambda, ell)?;
            let diagram = BeadDiagram::from_partition(&lambda, ell)?;
            Ok(Output {
                text: format!("{quo}\ncore: {core}\n{}", diagram.render()),
                json: json!({
                    "partition": lambda.to_string(),
                    "ell": ell,
                    "core": core.to_string(),
                    "quotient": quo.to_string(),
                }),
            })
        }
        AbacusCommand::Compose { q, ell } => {
            let q: MultiPartition = q.parse()?;
            let ell = check_ell(*ell)?;
            let lambda = from_quotient(&q, ell)?;
            let diagram = crate::abacus::quotient_diagram(&q, ell)?;
            Ok(Output {
                text: format!("{lambda}\n{}", diagram.render()),
                json: json!({
                    "quotient": q.to_string(),
                    "ell": ell,
                    "partition": lambda.to_string(),
                }),
            })
        }
    }
}

fn presentation(label: &str, ell: usize, simplified: bool) -> Result<Output> {
    let label = label_arg(label, ell)?;
    let p: GradedPresentation = presentation_for(&label, simplified)?;
    Ok(Output {
        text: p.to_string(),
        json: p.to_json(),
    })
}

fn wronskian_cmd(lambda: &str) -> Result<Output> {
    let lambda = partition_arg(lambda)?;
    let w = wronskian(&schubert_basis(&lambda))?;
    let rel = wronski_relations(&lambda)?;
    let mut text = format!("Wr = {w}\nleading: {}\n", format_rational(&rel.leading));
    for (s, r) in rel.relations.iter().enumerate() {
        text.push_str(&format!("r{} = {r}\n", s + 1));
    }
    Ok(Output {
        text,
        json: json!({
            "partition": lambda.to_string(),
            "wronskian": w.to_string(),
            "leading": format_rational(&rel.leading),
            "relations": rel.relations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    })
}

fn hilbert_cmd(label: &str, ell: usize) -> Result<Output> {
    let label = label_arg(label, ell)?;
    let p = presentation_for(&label, false)?;
    match &label {
        Label::Partition(lambda) => {
            let formula = hilbert_series_formula(lambda)?;
            let bound = formula.top_degree().unwrap_or(0) + DEFAULT_SLACK;
            let oracle = graded_dimensions_from_presentation(&p, bound)?;
            let dim = dimension_hook_formula(lambda)?;
            Ok(Output {
                text: format!("formula: {formula}\npresentation: {oracle}\ndimension: {dim}\n"),
                json: json!({
                    "label": label.to_string(),
                    "formula": formula.to_json(),
                    "presentation": oracle.to_json(),
                    "dimension": dim.to_string(),
                }),
            })
        }
        Label::Multi(_) => {
            let oracle = graded_dimensions(&p)?;
            Ok(Output {
                text: format!("presentation: {oracle}\ndimension: {}\n", oracle.total()),
                json: json!({
                    "label": label.to_string(),
                    "presentation": oracle.to_json(),
                    "dimension": oracle.total().to_string(),
                }),
            })
        }
    }
}

fn selftest(n_max: usize) -> Result<(Output, bool)> {
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for n in 0..=n_max {
        let mut failures = Vec::new();
        let parts = partitions_of(n);
        for lambda in &parts {
            let raw = direct_presentation(lambda);
            let w = wronski_relations(lambda)?;
            let formula = hilbert_series_formula(lambda)?;
            let bound = formula.top_degree().unwrap_or(0) + DEFAULT_SLACK;
            let ok = raw.relations() == &w.relations[..]
                && graded_dimensions_from_presentation(&raw, bound)? == formula
                && graded_dimensions(&simplify(&raw))? == formula;
            if !ok {
                failures.push(lambda.to_string());
            }
        }
        all_ok &= failures.is_empty();
        let status = if failures.is_empty() { "ok" } else { "FAILED" };
        text.push_str(&format!("n={n}: {} partitions {status}", parts.len()));
        if !failures.is_empty() {
            text.push_str(&format!(" ({})", failures.join(" ")));
        }
        text.push('\n');
        rows.push(json!({ "n": n, "partitions": parts.len(), "failures": failures }));
    }
    Ok((
        Output {
            text,
            json: json!({ "passed": all_ok, "results": rows }),
        },
        all_ok,
    ))
}

/// Runs one parsed command; `Ok(false)` means the command ran but reported
/// a failure.
pub fn execute(cli: &Cli) -> Result<(Output, bool)> {
    let out = match &cli.command {
        Command::Partition {
            command: PartitionCommand::Info { lambda },
        } => partition_info(&partition_arg(lambda)?)?,
        Command::Abacus { command } => abacus(command)?,
        Command::Presentation {
            label,
            ell,
            simplified,
            ..
        } => presentation(label, *ell, *simplified)?,
        Command::Wronskian { lambda } => wronskian_cmd(lambda)?,
        Command::Hilbert { label, ell } => hilbert_cmd(label, *ell)?,
        Command::Centre { n, ell, simplified } => {
            let c = centre_presentation(*n, check_ell(*ell)?, *simplified)?;
            Output {
                text: c.render(),
                json: c.to_json(),
            }
        }
        Command::Selftest { n_max, deep } => {
            return selftest(n_max.unwrap_or(if *deep { 7 } else { 5 }));
        }
    };
    Ok((out, true))
}

/// Writes via a temporary file in the same directory, then renames.
pub fn write_atomically(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, ok) = match execute(&cli) {
        Ok(r) => r,
        Err(e @ Error::Parse { .. }) => {
            eprintln!("{}: {e}", e.name());
            eprintln!("see `cherednik --help` for usage");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            return ExitCode::from(1);
        }
    };
    let rendered = out.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = write_atomically(path, &rendered) {
                eprintln!("IoError: {e}");
                return ExitCode::from(1);
            }
        }
        None => print!("{rendered}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
