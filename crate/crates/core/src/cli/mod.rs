//! The `kronmcm` command line.
//!
//! Every command prints a `config` record first, then its results, as
//! aligned tables (`--format table`) or one `kind key:value ...` record per
//! line (`--format records`). Exit status is 0 on success, 1 when a check
//! fails and 2 on usage or input errors.

mod objects;
mod verbs;

use std::ffi::OsString;
use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::beilinson::wedge_form;
use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::kronecker::{read_form, BilinearForm};
use crate::orbitcat::OrbitFunctor;
use crate::records::Record;

pub use objects::{parse_chain, parse_object};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PiSource {
    Identity,
    Wedge,
    File(String),
}

impl FromStr for PiSource {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "id" | "identity" => PiSource::Identity,
            "wedge" => PiSource::Wedge,
            path => PiSource::File(path.to_string()),
        })
    }
}

impl fmt::Display for PiSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PiSource::Identity => write!(f, "id"),
            PiSource::Wedge => write!(f, "wedge"),
            PiSource::File(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctorArg {
    /// `a[-1]`
    A,
    /// `a^2[-1]`
    Tau,
}

impl FunctorArg {
    fn functor(self) -> OrbitFunctor {
        match self {
            FunctorArg::A => OrbitFunctor::A_SHIFT,
            FunctorArg::Tau => OrbitFunctor::TAU_SHIFT,
        }
    }
}

#[derive(Args, Clone, Debug)]
pub struct Global {
    /// `q` or `fp:P`.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,
    /// Number of arrows of the Kronecker quiver.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// `id`, `wedge` (n = 6) or a form file.
    #[arg(long, global = true, default_value = "id")]
    pub pi: PiSource,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Extra orbit terms evaluated on each side of the certified window.
    #[arg(long, global = true, value_parser = clap::value_parser!(i64).range(1..))]
    pub window: Option<i64>,
    /// Top internal degree for series, Koszul and stable Hom tables.
    #[arg(long, global = true, value_parser = clap::value_parser!(i64).range(1..))]
    pub degree_bound: Option<i64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Args, Clone, Debug)]
pub struct SeriesArgs {
    /// Polynomial ring in this many variables.
    #[arg(long, conflicts_with = "series")]
    pub vars: Option<usize>,
    /// Hilbert series file.
    #[arg(long)]
    pub series: Option<String>,
    #[arg(long)]
    pub veronese: Option<usize>,
    /// Krull dimension (default: number of variables).
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Graded Hom between two objects of the orbit category.
    OrbitHom {
        x: String,
        y: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long, value_enum, default_value_t = FunctorArg::A)]
        functor: FunctorArg,
    },
    /// Vanishing of Hom(x, x[j]) for the given degrees.
    RigidCheck {
        x: String,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2], allow_negative_numbers = true)]
        degrees: Vec<i64>,
    },
    /// dim Hom(x, y) against dim Hom(y, x[cy]).
    CyCheck {
        x: String,
        y: String,
        #[arg(long, default_value_t = 3)]
        cy: i64,
    },
    /// Cluster-tilting scan over the transjective family.
    CtScan {
        #[arg(long, default_value_t = 8)]
        max_index: usize,
        #[arg(long, value_delimiter = ',', default_value = "P1")]
        candidate: Vec<String>,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2], allow_negative_numbers = true)]
        degrees: Vec<i64>,
        #[arg(long, value_enum, default_value_t = FunctorArg::A)]
        functor: FunctorArg,
    },
    /// The approximation triangle of an object by copies of P1.
    Triangle { x: String },
    /// Hilbert series and coefficients.
    Hilbert(SeriesArgs),
    /// Hilbert series of a Veronese subring.
    Veronese(SeriesArgs),
    /// Gorenstein parameter.
    Gorenstein(SeriesArgs),
    /// Koszul cohomology of a sequence on a graded module.
    Koszul {
        /// Module presentation file.
        #[arg(long)]
        module: String,
        /// Sequence, `;`-separated, in the module's variables.
        #[arg(long)]
        seq: String,
    },
    /// Cohomology of a sheaf, or Ext between two sheaves.
    CohTable {
        #[arg(long, default_value_t = 3)]
        space: usize,
        #[arg(num_args = 1..=2, required = true)]
        sheaves: Vec<String>,
    },
    /// Cokernel of the slice map and its identification with a^-2 P1.
    KoszulSlice,
    /// sigma(x) = a^-1(x)[1] with the sigma^2 check.
    Sigma { x: String },
    /// P^2 against the 3-Kronecker quiver.
    Example11 {
        #[arg(long, default_value_t = 3)]
        max_index: usize,
        #[arg(long, default_value_t = 50)]
        pairs: usize,
    },
    /// P^3 against the 6-Kronecker quiver.
    Example12 {
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Validate matrix factorization files.
    MfValidate {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Stable Hom between two factorizations, by internal degree.
    MfHom { x: String, y: String },
    /// Stable isomorphism of two factorizations.
    MfIso { x: String, y: String },
    /// Stabilization of a module over k[U,V]/(UV).
    MfStabilize {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
    /// The checklist for the node UV.
    NodeSuite,
    /// The acceptance suite.
    Accept {
        /// `1.1`, `1.2` or `A.6`.
        #[arg(long, conflicts_with = "criterion")]
        example: Option<String>,
        /// Criterion ids 1 to 13, comma separated; all when omitted.
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<usize>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::OrbitHom { .. } => "orbit-hom",
            Command::RigidCheck { .. } => "rigid-check",
            Command::CyCheck { .. } => "cy-check",
            Command::CtScan { .. } => "ct-scan",
            Command::Triangle { .. } => "triangle",
            Command::Hilbert(_) => "hilbert",
            Command::Veronese(_) => "veronese",
            Command::Gorenstein(_) => "gorenstein",
            Command::Koszul { .. } => "koszul",
            Command::CohTable { .. } => "coh-table",
            Command::KoszulSlice => "koszul-slice",
            Command::Sigma { .. } => "sigma",
            Command::Example11 { .. } => "example11",
            Command::Example12 { .. } => "example12",
            Command::MfValidate { .. } => "mf-validate",
            Command::MfHom { .. } => "mf-hom",
            Command::MfIso { .. } => "mf-iso",
            Command::MfStabilize { .. } => "mf-stabilize",
            Command::NodeSuite => "node-suite",
            Command::Accept { .. } => "accept",
        }
    }
}

#[derive(Parser, Clone, Debug)]
#[command(name = "kronmcm", version, about = "Kronecker quivers, orbit categories and matrix factorizations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

/// Resolved settings of one run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: &'static str,
    pub field: FieldSpec,
    pub n: Option<usize>,
    pub pi: PiSource,
    pub seed: u64,
    pub window: i64,
    pub degree_bound: Option<i64>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(cli: &Cli) -> Self {
        let g = &cli.global;
        RunConfig {
            command: cli.command.name(),
            field: g.field,
            n: g.n,
            pi: g.pi.clone(),
            seed: g.seed,
            window: g.window.unwrap_or(0),
            degree_bound: g.degree_bound,
            format: g.format,
        }
    }

    pub fn record(&self) -> Record {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "default".into());
        Record::new("config")
            .field("command", self.command)
            .field("field", self.field)
            .field("n", opt(self.n.map(|n| n.to_string())))
            .field("pi", &self.pi)
            .field("seed", self.seed)
            .field("window", self.window)
            .field("degree-bound", opt(self.degree_bound.map(|d| d.to_string())))
    }

    /// The form selected by `--pi`, checked against `--n` and `--field`.
    pub fn form(&self) -> Result<BilinearForm> {
        let pi = match &self.pi {
            PiSource::Identity => {
                let n = self.n.ok_or_else(|| Error::InvalidArgument("--n is required with --pi id".into()))?;
                if n == 0 {
                    return Err(Error::InvalidArgument("--n must be positive".into()));
                }
                BilinearForm::identity(n, self.field)
            }
            PiSource::Wedge => wedge_form(self.field),
            PiSource::File(path) => read_form(&objects::read_file(path)?, path)?,
        };
        if let Some(n) = self.n.filter(|&n| n != pi.n()) {
            return Err(Error::InvalidArgument(format!("--pi {} has n={}, but --n is {n}", self.pi, pi.n())));
        }
        if pi.field() != self.field {
            return Err(Error::InvalidArgument(format!("--pi {} is over {}, but --field is {}", self.pi, pi.field(), self.field)));
        }
        Ok(pi)
    }
}

/// Result records of a command and whether its checks passed.
#[derive(Clone, Debug)]
pub struct Report {
    pub records: Vec<Record>,
    pub passed: bool,
}

impl Report {
    pub fn new(records: Vec<Record>, passed: bool) -> Self {
        Report { records, passed }
    }
}

fn render_records(records: &[Record]) -> String {
    records.iter().map(|r| format!("{r}\n")).collect()
}

/// Consecutive records of one kind with the same keys form a table.
fn render_table(records: &[Record]) -> String {
    let keys = |r: &Record| r.fields().iter().map(|f| f.0.clone()).collect::<Vec<_>>();
    let mut out = String::new();
    let mut i = 0;
    while i < records.len() {
        let head = &records[i];
        let len = records[i..].iter().take_while(|r| r.kind() == head.kind() && keys(r) == keys(head)).count();
        let group = &records[i..i + len];
        if !out.is_empty() {
            out.push('\n');
        }
        if len == 1 {
            let body: Vec<String> = head.fields().iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("{}: {}\n", head.kind(), body.join(" ")));
        } else {
            let ks = keys(head);
            let widths: Vec<usize> = (0..ks.len())
                .map(|c| group.iter().map(|r| r.fields()[c].1.chars().count()).max().unwrap_or(0).max(ks[c].len()))
                .collect();
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            out.push_str(&format!("{}\n", head.kind()));
            out.push_str(&line(ks.iter().map(String::as_str).collect()));
            for r in group {
                out.push_str(&line(r.fields().iter().map(|f| f.1.as_str()).collect()));
            }
        }
        i += len;
    }
    out
}

/// What a process would print and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Input { .. }
            | Error::InvalidArgument(_)
            | Error::InvalidField(_)
            | Error::InvalidForm(_)
            | Error::DimensionMismatch(_)
            | Error::UnsupportedMorphism(_)
    )
}

pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.use_stderr() {
                true => Outcome { code: 2, stdout: String::new(), stderr: text },
                false => Outcome { code: 0, stdout: text, stderr: String::new() },
            };
        }
    };
    let cfg = RunConfig::new(&cli);
    match verbs::run(&cli.command, &cfg) {
        Ok(report) => {
            let mut records = vec![cfg.record()];
            records.extend(report.records);
            let stdout = match cfg.format {
                Format::Table => render_table(&records),
                Format::Records => render_records(&records),
            };
            Outcome { code: if report.passed { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => Outcome {
            code: if is_usage(&e) { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("kronmcm {}: {e}\n", cfg.command),
        },
    }
}
