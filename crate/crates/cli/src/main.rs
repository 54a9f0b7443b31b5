//! `kgraph`: Evans complexes, homology and K-theory verdicts for k-graph
//! documents.
//!
//! Exit status is 0 on success, 1 when the input fails validation and 2 for
//! unreadable, malformed or structurally inconsistent input.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kgraph_ktheory::document::Int;
use kgraph_ktheory::homology::format_homology;
use kgraph_ktheory::render::render_differential;
use kgraph_ktheory::report::{ComplexSection, Report, ValidationSummary};
use kgraph_ktheory::{
    corpus, e2_page, evans_complex, homology, k_theory_verdict, GraphDocument, IntMatrix, KGraph,
};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "kgraph", version)]
#[command(about = "Evans chain complexes and K-theory of higher-rank graph algebras")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the k-graph hypotheses (commuting, nonnegative, source-free)
    Validate { file: PathBuf },
    /// Print ranks, basis labels and differentials of the Evans complex
    Complex {
        file: PathBuf,
        /// Only show the differential of this degree (1..=k)
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Integer homology of the Evans complex
    Homology { file: PathBuf },
    /// E2 page of the Kasparov-Schochet spectral sequence
    E2 { file: PathBuf },
    /// What the E2 page determines about K0 and K1
    Verdict { file: PathBuf },
    /// Generate test documents
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// Single-vertex graphs with m_i loops of colour i
    Monoid(MonoidArgs),
    /// Graphs with M_i = q_i(A) for a base matrix A
    Polynomial(PolynomialArgs),
}

#[derive(Args, Debug)]
struct MonoidArgs {
    #[arg(long)]
    k: usize,
    /// Smallest loop count
    #[arg(long, default_value_t = 1)]
    min: u64,
    /// Largest loop count
    #[arg(long)]
    max: u64,
    /// Draw this many documents at random instead of enumerating all
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct PolynomialArgs {
    /// Base matrix as JSON, e.g. [[1,1],[1,0]]
    #[arg(long, required_unless_present = "count", conflicts_with = "count")]
    base: Option<String>,
    /// Ascending coefficients of one polynomial, e.g. 0,0,1 for x^2.
    /// Repeat once per coordinate.
    #[arg(long = "poly")]
    polys: Vec<String>,
    /// Generate this many random families instead
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Invalid(String),
    Input(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(text)) => {
            eprint!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome<()> {
    let text = match &cli.command {
        Command::Validate { file } => return validate(cli, file),
        Command::Complex { file, degree } => complex(cli.format, file, *degree)?,
        Command::Homology { file } => pipeline(cli.format, file, Stage::Homology)?,
        Command::E2 { file } => pipeline(cli.format, file, Stage::E2)?,
        Command::Verdict { file } => pipeline(cli.format, file, Stage::Verdict)?,
        Command::Gen(g) => generate(g)?,
    };
    emit(cli.out.as_deref(), &text)?;
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout"),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialises")
}

fn load(path: &Path) -> anyhow::Result<KGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = GraphDocument::parse(&text).with_context(|| path.display().to_string())?;
    doc.to_spec().with_context(|| path.display().to_string())
}

fn header(spec: &KGraph) -> Report {
    Report {
        name: spec.name().map(str::to_string),
        k: Some(spec.rank()),
        vertices: Some(spec.vertex_count()),
        ..Report::default()
    }
}

fn validation_text(summary: &ValidationSummary) -> String {
    if summary.valid {
        return "valid\n".into();
    }
    let mut s = String::from("invalid\n");
    for v in &summary.report.violations {
        s.push_str(&format!("  {v}\n"));
    }
    s
}

fn validate(cli: &Cli, file: &Path) -> Outcome<()> {
    let spec = load(file)?;
    let summary = ValidationSummary::from(spec.validate());
    let text = match cli.format {
        Format::Text => validation_text(&summary),
        Format::Json => json(&Report {
            validation: Some(summary.clone()),
            ..header(&spec)
        }),
    };
    emit(cli.out.as_deref(), &text)?;
    if summary.valid {
        Ok(())
    } else {
        Err(Failure::Invalid(String::new()))
    }
}

/// Loads and refuses invalid graphs with the witness list on stderr.
fn load_valid(file: &Path) -> Outcome<(KGraph, ValidationSummary)> {
    let spec = load(file)?;
    let summary = ValidationSummary::from(spec.validate());
    if !summary.valid {
        return Err(Failure::Invalid(validation_text(&summary)));
    }
    Ok((spec, summary))
}

fn complex(format: Format, file: &Path, degree: Option<usize>) -> Outcome<String> {
    let (spec, summary) = load_valid(file)?;
    let k = spec.rank();
    if let Some(p) = degree {
        if p == 0 || p > k {
            return Err(anyhow!("degree {p} is out of range; valid degrees are 1..{k}").into());
        }
    }
    let start = Instant::now();
    let complex = evans_complex(&spec.coadjacencies()).map_err(anyhow::Error::from)?;
    let degrees: Vec<usize> = match degree {
        Some(p) => vec![p],
        None => (1..=k).collect(),
    };
    Ok(match format {
        Format::Json => {
            let section = ComplexSection::new(&spec, &complex, degrees);
            json(&Report {
                validation: Some(summary),
                complex: Some(section),
                timing_ms: Some(start.elapsed().as_secs_f64() * 1e3),
                ..header(&spec)
            })
        }
        Format::Text => {
            let section = ComplexSection::new(&spec, &complex, 1..=k);
            let mut s = format!(
                "ranks: {}\n",
                complex
                    .ranks()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for p in 0..=k {
                let labels = match p {
                    0 => &section.differentials[0].row_labels,
                    _ => &section.differentials[p - 1].col_labels,
                };
                s.push_str(&format!("D{p}: {}\n", labels.join(" ")));
            }
            for p in degrees {
                let table = render_differential(&spec, p).map_err(anyhow::Error::from)?;
                s.push_str(&format!("\nd{p}: D{p} -> D{}\n{table}\n", p - 1));
            }
            s
        }
    })
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Stage {
    Homology,
    E2,
    Verdict,
}

fn pipeline(format: Format, file: &Path, stage: Stage) -> Outcome<String> {
    let (spec, summary) = load_valid(file)?;
    let start = Instant::now();
    let verdict = k_theory_verdict(&spec).map_err(anyhow::Error::from)?;
    let groups = if stage == Stage::Homology {
        let complex = evans_complex(&spec.coadjacencies()).map_err(anyhow::Error::from)?;
        homology(&complex).map_err(anyhow::Error::from)?
    } else {
        verdict.e2.columns.clone()
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    Ok(match format {
        Format::Json => {
            let mut report = Report {
                validation: Some(summary),
                homology: Some(groups),
                timing_ms: Some(elapsed),
                ..header(&spec)
            };
            if stage != Stage::Homology {
                report.e2 = Some(e2_page(&verdict.e2.columns, spec.rank()).map_err(anyhow::Error::from)?);
            }
            if stage == Stage::Verdict {
                report.verdict = Some(verdict);
            }
            json(&report)
        }
        Format::Text => match stage {
            Stage::Homology => {
                let mut s = String::new();
                for (p, g) in groups.iter().enumerate() {
                    s.push_str(&format!("H{p} = {g}\n"));
                }
                s
            }
            Stage::E2 => format!("E2 = {}\n{}\n", format_homology(&groups), verdict.e2.render()),
            Stage::Verdict => {
                let mut s = format!("{verdict}\n{}\n", verdict.justification);
                if let Some(c) = &verdict.commentary {
                    s.push_str(&format!("{c}\n"));
                }
                s
            }
        },
    })
}

fn generate(g: &Gen) -> anyhow::Result<String> {
    let docs: Vec<GraphDocument> = match g {
        Gen::Monoid(a) => {
            if a.min == 0 || a.min > a.max {
                return Err(anyhow!("loop counts need 1 <= min <= max, got {}..{}", a.min, a.max));
            }
            let loops = match a.count {
                Some(n) => corpus::monoid_random(a.k, a.min, a.max, n, a.seed),
                None => corpus::monoid_exhaustive(a.k, a.min, a.max),
            };
            loops
                .iter()
                .map(|m| corpus::monoid_document(m))
                .collect::<Result<_, _>>()?
        }
        Gen::Polynomial(a) => match (&a.base, a.count) {
            (_, Some(n)) => corpus::random_polynomial_family(n, a.max_n, a.max_k, a.seed)
                .iter()
                .map(GraphDocument::from_spec)
                .collect(),
            (Some(base), None) => {
                let rows: Vec<Vec<Int>> =
                    serde_json::from_str(base).context("base matrix must be a JSON array of rows")?;
                let rows: Vec<Vec<BigInt>> = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(|v| v.0).collect())
                    .collect();
                let base = IntMatrix::try_from_rows(rows)
                    .ok_or_else(|| anyhow!("base matrix rows have unequal length"))?;
                let polys = parse_polys(&a.polys)?;
                vec![GraphDocument::from_spec(&corpus::polynomial_family(&base, &polys)?)]
            }
            (None, None) => unreachable!("clap requires --base or --count"),
        },
    };
    let lines: Vec<String> = docs.iter().map(GraphDocument::to_json).collect();
    Ok(format!("[\n  {}\n]", lines.join(",\n  ")))
}

fn parse_polys(raw: &[String]) -> anyhow::Result<Vec<Vec<u64>>> {
    if raw.is_empty() {
        return Err(anyhow!("at least one --poly is required"));
    }
    raw.iter()
        .map(|p| {
            p.split(',')
                .map(|c| c.trim().parse::<u64>().with_context(|| format!("bad coefficient {c:?}")))
                .collect()
        })
        .collect()
}
