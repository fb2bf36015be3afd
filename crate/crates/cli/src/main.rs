use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quasitrivial::enumerate::Guards;
use quasitrivial::group::canonical_form;
use quasitrivial::ordering::parse_blocks;
use quasitrivial::orders::{construct_order, is_single_plateaued, order_preservability};
use quasitrivial::sequences::{SequenceName, SequenceTable};
use quasitrivial::subclass::characterize;
use quasitrivial::{Error as CoreError, OpTable, TotalOrdering, WeakOrdering};
use quasitrivial_cli::report::{count_rows, count_text, ClassifyReport, DEFAULT_FAMILIES};
use quasitrivial_cli::{emit_table, parse_table, render, ParseError};
use serde::Serialize;
use thiserror::Error;

const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;

/// Associative quasitrivial operations on finite chains.
#[derive(Parser)]
#[command(name = "qsg", version)]
struct Cli {
    /// Largest n accepted by the enumerating commands.
    #[arg(long, global = true, env = "QSG_MAX_N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Canonical,
    OrderPreservable,
    Bisymmetric,
    Commutative,
    Anticommutative,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an operation table (exit 0 member, 1 quasitrivial non-member, 2 not quasitrivial).
    Classify {
        /// Table document; stdin when absent or "-".
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Count families by enumeration and by formula.
    Count {
        n: usize,
        /// Comma-separated families, e.g. q,r,p_op.
        #[arg(long, value_delimiter = ',')]
        families: Vec<SequenceName>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the members of F_n as table documents separated by blank lines.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: Filter,
        #[arg(long)]
        count_only: bool,
    },
    /// Draw the values of a table, y decreasing downwards.
    Render {
        input: Option<PathBuf>,
        /// Axis order, e.g. "3,4,2,1,5,6".
        #[arg(long)]
        order: Option<String>,
        /// Emit a Graphviz graph with one complete component per value.
        #[arg(long)]
        dot: bool,
    },
    /// Build a total ordering for which a 2-quasilinear weak ordering is single-plateaued.
    Order {
        /// Blocks from least to greatest, e.g. "1 2 3 | 4 5 | 6 | 7 8".
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the first values of a sequence.
    Seq {
        name: SequenceName,
        #[arg(long, default_value_t = 11)]
        len: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Error)]
enum AppError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{path}: {source}")]
    Input { path: String, source: io::Error },
    #[error("writing output: {0}")]
    Output(io::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Parse(_) => EXIT_PARSE,
            AppError::Input { .. } => EXIT_NO_INPUT,
            AppError::Output(_) => 1,
            AppError::Core(CoreError::InvalidWeakOrdering(_) | CoreError::OutOfRange { .. }) => EXIT_PARSE,
            AppError::Core(_) | AppError::Usage(_) => EXIT_USAGE,
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, AppError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = fs::read_to_string(p).map_err(|source| AppError::Input { path: p.display().to_string(), source })?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| AppError::Input { path: "<stdin>".into(), source })?;
        }
    }
    Ok(text)
}

fn read_table(path: Option<&PathBuf>) -> Result<OpTable, AppError> {
    Ok(parse_table(&read_input(path)?)?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn guards(max_n: Option<usize>) -> Guards {
    match max_n {
        Some(m) => Guards { weak_orderings: m, members: m, ..Guards::default() },
        None => Guards::default(),
    }
}

fn keep(f: &OpTable, filter: Filter) -> Result<bool, AppError> {
    Ok(match filter {
        Filter::All => true,
        Filter::Canonical => canonical_form(f)? == *f,
        Filter::OrderPreservable => order_preservability(f)?.is_preservable(),
        Filter::Bisymmetric => characterize(f)?.bisymmetric,
        Filter::Commutative => characterize(f)?.commutative,
        Filter::Anticommutative => characterize(f)?.anticommutative,
    })
}

#[derive(Serialize)]
struct OrderDocument {
    order: Vec<usize>,
    single_plateaued: bool,
}

#[derive(Serialize)]
struct SeqDocument {
    name: String,
    values: Vec<String>,
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, AppError> {
    let guards = guards(cli.max_n);
    let write = |out: &mut dyn Write, s: &str| -> Result<(), AppError> {
        out.write_all(s.as_bytes()).map_err(AppError::Output)
    };
    match cli.command {
        Command::Classify { input, format } => {
            let f = read_table(input.as_ref())?;
            let report = ClassifyReport::build(&f);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => json(&report),
            };
            write(out, &text)?;
            Ok(match (report.member, report.quasitrivial) {
                (true, _) => 0,
                (false, true) => 1,
                (false, false) => 2,
            })
        }
        Command::Count { n, families, format } => {
            let census = guards.census(n)?;
            let families = if families.is_empty() { DEFAULT_FAMILIES.to_vec() } else { families };
            let rows = count_rows(&census, &families);
            if rows.len() != families.len() {
                return Err(AppError::Usage("fibonacci and G are not counted by enumeration; use `seq`".into()));
            }
            let text = match format {
                Format::Text => count_text(n, &rows),
                Format::Json => json(&rows),
            };
            write(out, &text)?;
            Ok(if rows.iter().all(|r| r.agree) { 0 } else { 1 })
        }
        Command::Enumerate { n, filter, count_only } => {
            let mut count = 0u64;
            for f in guards.members(n)? {
                if !keep(&f, filter)? {
                    continue;
                }
                if !count_only {
                    let sep = if count > 0 { "\n" } else { "" };
                    write(out, &format!("{sep}{}", emit_table(&f)))?;
                }
                count += 1;
            }
            if count_only {
                write(out, &format!("{count}\n"))?;
            }
            Ok(0)
        }
        Command::Render { input, order, dot } => {
            let f = read_table(input.as_ref())?;
            let text = if dot {
                render::dot(&f)
            } else {
                let order = match order {
                    Some(spec) => parse_order(&spec)?,
                    None => TotalOrdering::natural(f.n())?,
                };
                if order.n() != f.n() {
                    return Err(AppError::Usage(format!("--order lists {} elements, table has {}", order.n(), f.n())));
                }
                render::grid(&f, &order)
            };
            write(out, &text)?;
            Ok(0)
        }
        Command::Order { spec, format } => {
            let within = parse_blocks(&spec)?;
            let w = WeakOrdering::new(within.clone())?;
            let order = match construct_order(&w, &within) {
                Ok(order) => order,
                Err(CoreError::NotTwoQuasilinear { a, b, c, d }) => {
                    write(out, &format!("not 2-quasilinear: {a} < {b} ~ {c} ~ {d}\n"))?;
                    return Ok(1);
                }
                Err(e) => return Err(e.into()),
            };
            let single_plateaued = is_single_plateaued(&w, &order)?;
            let text = match format {
                Format::Text => format!("{order}\nsingle-plateaued: {}\n", if single_plateaued { "yes" } else { "no" }),
                Format::Json => json(&OrderDocument { order: order.as_slice().to_vec(), single_plateaued }),
            };
            write(out, &text)?;
            Ok(0)
        }
        Command::Seq { name, len, format } => {
            let table = SequenceTable::compute(name, len);
            let values: Vec<String> = table.values.iter().map(|v| v.to_string()).collect();
            let text = match format {
                Format::Text => format!("{name}: {}\n", values.join(", ")),
                Format::Json => json(&SeqDocument { name: name.to_string(), values }),
            };
            write(out, &text)?;
            Ok(0)
        }
    }
}

fn parse_order(spec: &str) -> Result<TotalOrdering, AppError> {
    let items: Result<Vec<usize>, _> =
        spec.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(str::parse).collect();
    let items = items.map_err(|_| AppError::Usage(format!("--order expects a list of elements, got {spec:?}")))?;
    Ok(TotalOrdering::new(items)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(AppError::Output(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("qsg: {e}");
            ExitCode::from(e.code())
        }
    }
}
