//! Command line front end for dismal arithmetic: evaluate expressions,
//! emit the named sequences in b-file/CSV form, rebuild reference tables,
//! and check sequences against OEIS b-files.
//!
//! Exit codes: 0 success, 1 data mismatch, 2 usage error, 3 budget exceeded.

mod bfile;
mod eval;
mod seq;
mod tables;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dismal::genfunc::{asymptotic_rows, d_series, m_series, near_repunit_divisor_series, repunit_divisor_series};
use dismal::primes::primes_of_length;
use dismal::squares::{allones_sqrt_count, roots, square_census};
use dismal::structures::{partition_count, phi};
use dismal::Num;
use seq::{digit_text, SequenceId};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dismal", version, about = "Carryless max/min arithmetic toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One value per line.
    Plain,
    /// OEIS b-file lines: "index value".
    Bfile,
    /// "n,value" rows under a header.
    Csv,
}

#[derive(Debug, Args)]
struct SeqArgs {
    /// Digit base, 2..=36.
    #[arg(long, default_value_t = 10)]
    base: u8,
    /// Inclusive index range "start..end"; each sequence has its own default.
    #[arg(long, value_parser = parse_range)]
    range: Option<(u64, u64)>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression: numbers with optional @base, "+", "*", parens.
    Eval { expr: String },
    /// Emit a named sequence as (index, value) terms.
    Sequence {
        id: SequenceId,
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Rebuild a reference table (pi, templates, d-ones, T, M, D, euler-phi,
    /// d2-series, divisor-examples).
    Table {
        name: String,
        #[arg(long)]
        base: Option<u8>,
        /// Row cap for pi, templates, d-ones, T, M, d2-series.
        #[arg(long)]
        max_k: Option<usize>,
        /// Single column for the D table (3..=6 when omitted).
        #[arg(long)]
        l: Option<usize>,
        /// Row cap for D, euler-phi, divisor-examples.
        #[arg(long)]
        max_n: Option<usize>,
        /// Compare against the checked-in golden copy instead of printing.
        #[arg(long)]
        diff: bool,
    },
    /// List the primes with exactly --len digits, ascending.
    Primes {
        #[arg(long, default_value_t = 10)]
        base: u8,
        #[arg(long)]
        len: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Show the divisors of a number, with their count and dismal sum.
    Divisors { number: String },
    /// Totient: how many m with len(m) <= len(n) are relatively prime to n.
    Phi { number: String },
    /// Number of dismal partitions of a number.
    Partitions { number: String },
    /// Square census for one digit length, or the roots of a given square.
    Squares {
        /// A number to take square roots of; omit for a census.
        number: Option<String>,
        #[arg(long, default_value_t = 10)]
        base: u8,
        /// Odd square length for the census.
        #[arg(long)]
        length: Option<usize>,
    },
    /// Count binary square roots of repunits of length 2k+1, k = 0..max-k.
    Sqrtcount {
        #[arg(long, default_value_t = 12)]
        max_k: usize,
    },
    /// Coefficients of a divisor-count series: repunit, near, m, or d.
    Series {
        name: String,
        /// Fixed divisor length for the m and d series.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, default_value_t = 17)]
        terms: usize,
    },
    /// How d_2(2^k-1) and d_2(2^k-3) track their limiting forms.
    Asym {
        #[arg(long, default_value_t = 60)]
        max_k: usize,
    },
    /// Compare a computed sequence prefix against an OEIS b-file.
    OeisCheck {
        id: SequenceId,
        #[command(flatten)]
        seq: SeqArgs,
        /// Local b-file to check against.
        #[arg(long, conflicts_with = "fetch")]
        bfile: Option<PathBuf>,
        /// OEIS A-number resolved through the on-disk cache.
        #[arg(long)]
        fetch: Option<String>,
        /// Never touch the network (the default).
        #[arg(long, conflicts_with = "online")]
        offline: bool,
        /// Allow downloading a missing b-file into the cache.
        #[arg(long)]
        online: bool,
    },
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("expected \"start..end\", got {text:?}"))?;
    let start: u64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let end: u64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    Ok((start, end))
}

enum Failure {
    Usage(String),
    Mismatch,
    Budget(String),
}

impl From<dismal::Error> for Failure {
    fn from(e: dismal::Error) -> Failure {
        match e {
            dismal::Error::Budget(m) => Failure::Budget(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    // Die quietly when a pipe reader goes away, like any line-oriented tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Budget(m)) => {
            eprintln!("warning: budget exceeded: {m}");
            ExitCode::from(3)
        }
    }
}

fn emit_term(format: Format, index: u64, value: &str) {
    match format {
        Format::Plain => println!("{value}"),
        Format::Bfile => println!("{index} {value}"),
        Format::Csv => println!("{index},{value}"),
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Eval { expr } => {
            println!("{}", eval::eval(&expr)?);
            Ok(())
        }
        Command::Sequence { id, seq: args, format } => {
            let (start, end) = args.range.unwrap_or_else(|| id.default_range());
            if format == Format::Csv {
                println!("n,value");
            }
            seq::generate(id, args.base, start, end, &mut |i, v| emit_term(format, i, &v))?;
            Ok(())
        }
        Command::Table { name, base, max_k, l, max_n, diff } => {
            let args = tables::TableArgs { base, max_k, l, max_n };
            if !diff {
                print!("{}", tables::render(&name, &args)?);
                return Ok(());
            }
            if !tables::is_default_shape(&name, &args) {
                return Err(Failure::Usage(format!(
                    "--diff compares the default shape of table {name:?}; drop the sizing flags"
                )));
            }
            let rendered = tables::render(&name, &args)?;
            let golden = tables::golden(&name)
                .ok_or_else(|| Failure::Usage(format!("no golden copy for table {name:?}")))?;
            if rendered == golden {
                println!("table {name}: matches golden");
                Ok(())
            } else {
                report_table_diff(&name, golden, &rendered);
                Err(Failure::Mismatch)
            }
        }
        Command::Primes { base, len, format } => {
            if format == Format::Csv {
                println!("n,value");
            }
            for (i, p) in primes_of_length(base, len)?.iter().enumerate() {
                emit_term(format, i as u64 + 1, &digit_text(p));
            }
            Ok(())
        }
        Command::Divisors { number } => {
            let n = Num::parse(&number)?;
            let report = dismal::divisors::divisor_list(&n)?;
            let list: Vec<String> = report.divisors.iter().map(digit_text).collect();
            println!("n: {n}");
            println!("d: {}", report.count());
            println!("sigma: {}", digit_text(&report.sigma));
            println!("divisors: {}", list.join(" "));
            Ok(())
        }
        Command::Phi { number } => {
            println!("{}", phi(&Num::parse(&number)?)?);
            Ok(())
        }
        Command::Partitions { number } => {
            println!("{}", partition_count(&Num::parse(&number)?)?);
            Ok(())
        }
        Command::Squares { number: Some(number), .. } => {
            let n = Num::parse(&number)?;
            let report = roots(&n)?;
            let list: Vec<String> = report.roots.iter().map(digit_text).collect();
            println!("n: {n}");
            println!("roots: {}", if list.is_empty() { "none".into() } else { list.join(" ") });
            match report.dominating {
                Some(d) => println!("dominating: {}", digit_text(&d)),
                None => println!("dominating: none"),
            }
            Ok(())
        }
        Command::Squares { number: None, base, length } => {
            let length = length.ok_or_else(|| {
                Failure::Usage("--length is required for a census (or pass a number)".into())
            })?;
            let census = square_census(base, length)?;
            println!("roots {}", census.root_total());
            println!("distinct {}", census.distinct());
            println!("collisions {}", census.collisions().len());
            Ok(())
        }
        Command::Sqrtcount { max_k } => {
            for k in 0..=max_k {
                println!("{k} {}", allones_sqrt_count(k)?);
            }
            Ok(())
        }
        Command::Series { name, l, terms } => {
            let need_l = || {
                l.ok_or_else(|| Failure::Usage(format!("series {name:?} needs --l")))
            };
            let coeffs = match name.as_str() {
                "repunit" => repunit_divisor_series(terms),
                "near" => near_repunit_divisor_series(terms)?,
                "m" => m_series(need_l()?, terms)?,
                "d" => d_series(need_l()?, terms)?,
                _ => {
                    return Err(Failure::Usage(format!(
                        "unknown series {name:?} (one of repunit, near, m, d)"
                    )))
                }
            };
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k} {c}");
            }
            Ok(())
        }
        Command::Asym { max_k } => {
            println!("k ones minus3 ratio theta");
            for row in asymptotic_rows(max_k)? {
                println!(
                    "{} {} {} {:.6} {:.6}",
                    row.k, row.repunit_count, row.near_count, row.ratio, row.theta
                );
            }
            Ok(())
        }
        Command::OeisCheck { id, seq: args, bfile: path, fetch, offline: _, online } => {
            let path = match (path, fetch) {
                (Some(p), None) => p,
                (None, Some(a)) => bfile::fetch(&a, online).map_err(Failure::Usage)?,
                _ => {
                    return Err(Failure::Usage(
                        "pass exactly one of --bfile <path> or --fetch <A-number>".into(),
                    ))
                }
            };
            let text = std::fs::read_to_string(&path).map_err(|e| {
                Failure::Usage(format!("cannot read {}: {e}", path.display()))
            })?;
            let entries = bfile::parse(&text).map_err(Failure::Usage)?;
            let span = match (entries.first(), entries.last()) {
                (Some(f), Some(l)) => Some((f.index, l.index)),
                _ => None,
            };
            let range = args.range.or(span);
            let (start, end) = match range {
                Some(r) => r,
                None => {
                    println!("ok: 0 terms match (empty b-file, empty range)");
                    return Ok(());
                }
            };
            if end < start {
                println!("ok: 0 terms match (empty range)");
                return Ok(());
            }
            let (file_start, file_end) = span.ok_or_else(|| {
                Failure::Usage("b-file has no entries but the range is nonempty".into())
            })?;
            if start < file_start || end > file_end {
                return Err(Failure::Usage(format!(
                    "b-file covers {file_start}..{file_end}, requested {start}..{end}"
                )));
            }
            let computed = seq::collect(id, args.base, start, end)?;
            match bfile::check(&entries, &computed) {
                bfile::Outcome::Match(count) => {
                    println!("ok: {count} terms match");
                    Ok(())
                }
                bfile::Outcome::Mismatch { index, file, computed } => {
                    println!(
                        "mismatch at index {index}: b-file has {file}, computed {computed}"
                    );
                    Err(Failure::Mismatch)
                }
            }
        }
    }
}

fn report_table_diff(name: &str, golden: &str, rendered: &str) {
    let mut golden_lines = golden.lines();
    let mut rendered_lines = rendered.lines();
    let mut row = 0;
    loop {
        row += 1;
        match (golden_lines.next(), rendered_lines.next()) {
            (Some(g), Some(r)) if g == r => continue,
            (None, None) => {
                println!("table {name}: differs from golden in line endings only");
                return;
            }
            (g, r) => {
                println!("table {name}: differs from golden at line {row}");
                println!("golden:   {}", g.unwrap_or("<end>"));
                println!("rendered: {}", r.unwrap_or("<end>"));
                return;
            }
        }
    }
}
