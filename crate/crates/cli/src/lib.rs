//! Command-line front end for the `genpow` library.
//!
//! [`run`] parses arguments, dispatches one subcommand and returns the process
//! exit code: 0 on success, 1 when a computation or a reported check fails,
//! 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use genpow::constructions::{generalized_power, s_cycle, s_path, subdivide};
use genpow::experiments::{
    convergence_report, format_sig, limit_points_report, min_rho_report, verify_theorem_nob, Cell,
    ExperimentReport,
};
use genpow::graph::Hypergraph;
use genpow::io::{parse_document, parse_graph, serialize_graph, serialize_hypergraph, Document};
use genpow::matrix::rho_matrix;
use genpow::parity::{is_bipartite, odd_bipartition};
use genpow::tensor::{power_iteration_rho, ImplicitTensor, Operator, PowerOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "genpow",
    version,
    about = "Generalized power hypergraphs: constructions, odd-bipartiteness, spectral radii"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Relative stopping tolerance of the spectral iterations
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Iteration cap for the tensor power iteration
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_iter: usize,
    /// Write results here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Allow enumeration on 8 vertices
    #[arg(long, global = true)]
    big: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OperatorArg {
    Adjacency,
    SignlessLaplacian,
}

impl From<OperatorArg> for Operator {
    fn from(op: OperatorArg) -> Self {
        match op {
            OperatorArg::Adjacency => Operator::Adjacency,
            OperatorArg::SignlessLaplacian => Operator::SignlessLaplacian,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the generalized power G^{k,s} of a graph file
    Power {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Build the k-uniform s-path with d edges
    Spath {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: usize,
    },
    /// Build the k-uniform s-cycle with d edges
    Scycle {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: usize,
    },
    /// Decide odd-bipartiteness of a hypergraph file (bipartiteness for a graph file)
    Oddbip {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Spectral radius: tensor power iteration for hypergraphs, matrix iteration for graphs
    Rho {
        #[arg(long, value_enum, default_value_t = OperatorArg::Adjacency)]
        operator: OperatorArg,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Row-sum bounds on the spectral radius of a hypergraph tensor
    Bounds {
        #[arg(long, value_enum, default_value_t = OperatorArg::Adjacency)]
        operator: OperatorArg,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Subdivide edge {u, w} of a graph file
    Subdivide {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        w: usize,
    },
    /// Minimum spectral radius over connected non-bipartite graphs on n vertices
    Minrho {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OperatorArg::Adjacency)]
        operator: OperatorArg,
    },
    /// Limit points alpha_n = beta_n^{1/2} + beta_n^{-1/2}
    Limitpoints {
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
    /// Adjacency spectral radius of C_{2n+1} + e against its limit
    Converge {
        #[arg(long, default_value_t = 50)]
        n_max: usize,
    },
    /// Lift odd-bipartite iff base bipartite, over all connected graphs
    VerifyNob {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [4, 6])]
        k: Vec<usize>,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn failed(message: impl ToString) -> Self {
        Self {
            code: EXIT_CHECK_FAILED,
            message: message.to_string(),
        }
    }
}

/// Output of a subcommand plus whether its checks passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                return EXIT_USAGE;
            }
            // help and version requests
            let _ = write!(stdout, "{rendered}");
            return EXIT_OK;
        }
    };
    let result = dispatch(&cli).and_then(|output| {
        emit(&cli.common, &output.text, stdout)?;
        Ok(output.passed)
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(common: &Common, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::failed(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::failed(format!("cannot write output: {e}"))),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn read_document(path: &Path) -> Result<Document, Failure> {
    parse_document(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn render(common: &Common, report: &ExperimentReport) -> Output {
    let text = match common.format {
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    Output {
        text,
        passed: report.passed(),
    }
}

fn num(x: f64) -> String {
    format_sig(x, 12)
}

fn joined(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let common = &cli.common;
    if common.tol.is_nan() || common.tol <= 0.0 {
        return Err(Failure::usage("--tol must be positive"));
    }
    let invalid = |e: genpow::Error| Failure::usage(e);
    let computed = |e: genpow::Error| Failure::failed(e);
    match &cli.command {
        Command::Power { k, s, input } => {
            let g = parse_graph(&read(input)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?;
            let (h, _) = generalized_power(&g, *k, *s).map_err(invalid)?;
            Ok(Output::ok(serialize_hypergraph(&h)))
        }
        Command::Spath { k, s, d } => Ok(Output::ok(serialize_hypergraph(
            &s_path(*k, *s, *d).map_err(invalid)?,
        ))),
        Command::Scycle { k, s, d } => Ok(Output::ok(serialize_hypergraph(
            &s_cycle(*k, *s, *d).map_err(invalid)?,
        ))),
        Command::Oddbip { input } => {
            let (word, parts) = match read_document(input)? {
                Document::Hypergraph(h) => match odd_bipartition(&h).map_err(invalid)? {
                    Some(b) => ("odd-bipartite", Some(b)),
                    None => ("non-odd-bipartite", None),
                },
                Document::Graph(g) => match is_bipartite(&g) {
                    Some(b) => ("bipartite", Some(b)),
                    None => ("non-bipartite", None),
                },
            };
            let (one, two) = parts.map_or((String::new(), String::new()), |b| {
                (joined(b.part_one()), joined(b.part_two()))
            });
            let text = match common.format {
                Format::Text if word.starts_with("non") => format!("{word}\n"),
                Format::Text => format!("{word}\npart one: {one}\npart two: {two}\n"),
                Format::Csv => format!("result,part_one,part_two\n{word},{one},{two}\n"),
            };
            Ok(Output::ok(text))
        }
        Command::Rho { operator, input } => {
            let op = Operator::from(*operator);
            let (kind, rho, lower, upper, iterations, converged) = match read_document(input)? {
                Document::Hypergraph(h) => {
                    let opts = PowerOptions {
                        tol: common.tol,
                        max_iter: common.max_iter,
                        ..PowerOptions::default()
                    };
                    let r = power_iteration_rho(&ImplicitTensor::of_hypergraph(&h, op), &opts)
                        .map_err(computed)?;
                    ("tensor", r.rho, r.lower, r.upper, r.iterations, r.converged)
                }
                Document::Graph(g) => {
                    let r = rho_matrix(&g, op, common.tol).map_err(computed)?;
                    ("matrix", r.rho, r.lower, r.upper, r.iterations, true)
                }
            };
            let text = match common.format {
                Format::Text => {
                    let mut t = format!("rho = {}\nbracket = [{}, {}]\n", num(rho), num(lower), num(upper));
                    let _ = writeln!(t, "{kind} {}, {iterations} iterations", op.name());
                    if !converged {
                        t.push_str("not converged\n");
                    }
                    t
                }
                Format::Csv => format!(
                    "kind,operator,rho,lower,upper,iterations,converged\n{kind},{},{},{},{},{iterations},{}\n",
                    op.name(),
                    num(rho),
                    num(lower),
                    num(upper),
                    if converged { "PASS" } else { "FAIL" }
                ),
            };
            Ok(Output {
                text,
                passed: converged,
            })
        }
        Command::Bounds { operator, input } => {
            let op = Operator::from(*operator);
            let h = match read_document(input)? {
                Document::Hypergraph(h) => h,
                Document::Graph(g) => {
                    let edges = g.edges().iter().map(|&(u, w)| [u, w]);
                    Hypergraph::new(2, g.n(), edges).map_err(invalid)?
                }
            };
            let t = ImplicitTensor::of_hypergraph(&h, op);
            let (lo, hi) = t.rho_bounds();
            let opts = PowerOptions {
                tol: common.tol,
                max_iter: common.max_iter,
                ..PowerOptions::default()
            };
            let r = power_iteration_rho(&t, &opts).map_err(computed)?;
            let mut report =
                ExperimentReport::new("bounds", &["operator", "min_row_sum", "rho", "max_row_sum"]);
            report
                .param("k", h.k())
                .param("n", h.n())
                .param("m", h.m())
                .param("tol", num(common.tol));
            report.push_row(vec![
                Cell::from(op.name()),
                lo.into(),
                r.rho.into(),
                hi.into(),
            ]);
            let slack = common.tol * hi.max(1.0);
            report.verdict("converged", common.tol, r.converged);
            report.verdict(
                "min row sum <= rho <= max row sum",
                slack,
                lo - slack <= r.rho && r.rho <= hi + slack,
            );
            if lo == hi {
                report.verdict(
                    "regular: rho equals the row sum",
                    slack,
                    (r.rho - lo).abs() <= slack,
                );
            }
            Ok(render(common, &report))
        }
        Command::Subdivide { input, u, w } => {
            let g = parse_graph(&read(input)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?;
            Ok(Output::ok(serialize_graph(
                &subdivide(&g, *u, *w).map_err(invalid)?,
            )))
        }
        Command::Minrho { n, operator } => {
            let report =
                min_rho_report(*n, (*operator).into(), common.tol, common.big).map_err(invalid)?;
            Ok(render(common, &report))
        }
        Command::Limitpoints { n_max } => {
            let report = limit_points_report(*n_max, common.tol).map_err(invalid)?;
            Ok(render(common, &report))
        }
        Command::Converge { n_max } => {
            let report = convergence_report(*n_max, common.tol).map_err(invalid)?;
            Ok(render(common, &report))
        }
        Command::VerifyNob { n_max, k } => {
            let report = verify_theorem_nob(*n_max, k, common.big).map_err(invalid)?;
            Ok(render(common, &report))
        }
    }
}
