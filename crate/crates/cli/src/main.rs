use std::fmt::Display;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genstirling::eulerian::{eulerian_table, eulerian_table_poly, row_sum_product};
use genstirling::stirlingperm::{ascent_positions, enumerate_sequences, StirlingSeq, Word};
use genstirling::trees::{
    distinguished_set, forest_distinguished_set, leftmost_internal_set, perm_to_tree, seq_to_forest,
};
use genstirling::verify::{run_suite, SizeLevel, Suite};
use genstirling::ward::{ward_table, ward_table_poly};
use genstirling::{Coeff, Error, Params, Triangle};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "genstirling",
    version,
    about = "Exact higher-order Eulerian and Ward triangles, Stirling permutations and increasing forests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle of Eulerian or Ward numbers.
    Table(TableArgs),
    /// List every generalized Stirling permutation of a given size, one JSON object per line.
    Enumerate(EnumerateArgs),
    /// Show the tree or forest of a word or sequence with its marked node sets.
    Bijection(BijectionArgs),
    /// Run a verification suite and print the JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Eulerian,
    Ward,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Integer entries at the given s and t.
    Int,
    /// Entries as polynomials in s and t.
    Poly,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 1)]
    nu: u32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    s: i64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    t: i64,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Mode::Int)]
    mode: Mode,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 1)]
    nu: u32,
    /// Composition as a comma-separated list, e.g. 2,0,1,0.
    #[arg(long, conflicts_with_all = ["s", "t"])]
    tvec: Option<String>,
    /// Number of parts; the composition defaults to (t,0,...,0).
    #[arg(long)]
    s: Option<i64>,
    #[arg(long, default_value_t = 0)]
    t: i64,
    #[arg(long)]
    n: u32,
    /// Refuse to enumerate more than this many objects.
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,
}

#[derive(Args)]
struct BijectionArgs {
    /// A single word, e.g. 333222111 or "10 10 3 3".
    #[arg(
        long,
        conflicts_with = "seq",
        required_unless_present = "seq",
        allow_hyphen_values = true
    )]
    word: Option<String>,
    /// A sequence of words, as a JSON array or comma-separated.
    #[arg(long, requires = "tvec")]
    seq: Option<String>,
    #[arg(long)]
    nu: u32,
    /// Number of zeros in the word; defaults to the count found in it.
    #[arg(long, conflicts_with = "seq")]
    t: Option<u32>,
    #[arg(long)]
    tvec: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, default_value = "default", value_parser = parse_level)]
    size_level: SizeLevel,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_level(s: &str) -> Result<SizeLevel, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit status for bad input, distinct from a verification failure.
const USAGE: u8 = 2;

fn usage_error(msg: impl Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => table(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Bijection(args) => bijection(args),
        Command::Verify(args) => return verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_error(e),
    }
}

fn render_rows<C: Coeff + Display>(tri: &Triangle<C>) -> Vec<Vec<String>> {
    tri.rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

fn table(args: TableArgs) -> Result<(), Error> {
    let rows = match (args.kind, args.mode) {
        (Kind::Eulerian, Mode::Int) => render_rows(&eulerian_table(
            &Params::new(args.nu, args.s, args.t)?,
            args.nmax,
        )?),
        (Kind::Ward, Mode::Int) => render_rows(&ward_table(
            &Params::new(args.nu, args.s, args.t)?,
            args.nmax,
        )?),
        (Kind::Eulerian, Mode::Poly) => render_rows(&eulerian_table_poly(args.nu, args.nmax)?),
        (Kind::Ward, Mode::Poly) => render_rows(&ward_table_poly(args.nu, args.nmax)?),
    };
    let mut out = BufWriter::new(io::stdout().lock());
    match args.format {
        Format::Csv => {
            for (n, row) in rows.iter().enumerate() {
                writeln!(out, "{n},{}", row.join(",")).map_err(io_error)?;
            }
        }
        Format::Json => {
            let kind = match args.kind {
                Kind::Eulerian => "eulerian",
                Kind::Ward => "ward",
            };
            let mut doc = json!({"kind": kind, "nu": args.nu, "rows": rows});
            if let Mode::Int = args.mode {
                doc["s"] = json!(args.s.to_string());
                doc["t"] = json!(args.t.to_string());
                doc["mode"] = json!("int");
            } else {
                doc["mode"] = json!("poly");
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))
                .map_err(io_error)?;
        }
    }
    out.flush().map_err(io_error)
}

fn io_error(e: io::Error) -> Error {
    Error::Parse(format!("output error: {e}"))
}

fn parse_tvec(s: &str) -> Result<Vec<u32>, Error> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad composition part {part:?}")))
        })
        .collect()
}

fn enumerate(args: EnumerateArgs) -> Result<(), Error> {
    let params = match (&args.tvec, args.s) {
        (Some(tvec), _) => Params::with_tvec(args.nu, parse_tvec(tvec)?)?,
        (None, s) => Params::new(args.nu, s.unwrap_or(1), args.t)?,
    };
    let count = row_sum_product(&params, args.n as usize);
    if count > BigInt::from(args.cap) {
        return Err(Error::InvalidParams(format!(
            "{count} objects exceed the cap of {}; raise --cap to proceed",
            args.cap
        )));
    }
    let mut out = BufWriter::new(io::stdout().lock());
    for seq in enumerate_sequences(&params, args.n)? {
        let line = json!({
            "words": seq.to_strings(),
            "ascents": seq.ascent_count(),
            "ascent_positions": seq.ascent_positions(),
        });
        writeln!(out, "{line}").map_err(io_error)?;
    }
    out.flush().map_err(io_error)
}

fn set_json(set: &std::collections::BTreeSet<u32>) -> Value {
    json!(set.iter().collect::<Vec<_>>())
}

fn parse_seq(s: &str) -> Result<Vec<Word>, Error> {
    let trimmed = s.trim();
    let parts: Vec<String> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("bad sequence: {e}")))?
    } else {
        trimmed.split(',').map(str::to_string).collect()
    };
    parts.iter().map(|p| p.trim().parse()).collect()
}

fn bijection(args: BijectionArgs) -> Result<(), Error> {
    let doc = if let Some(seq_text) = &args.seq {
        let tvec = parse_tvec(args.tvec.as_deref().unwrap_or_default())?;
        let seq = StirlingSeq {
            nu: args.nu,
            tvec,
            entries: parse_seq(seq_text)?,
        };
        let forest = seq_to_forest(&seq)?;
        let n = seq.label_partition().iter().map(Vec::len).sum::<usize>();
        if !seq.is_valid(n as u32) {
            return Err(Error::InvalidWord(format!(
                "labels of {:?} are not 1..={n}",
                seq.to_strings()
            )));
        }
        let leftmost = forest
            .trees
            .iter()
            .flat_map(leftmost_internal_set)
            .collect();
        let dist = forest_distinguished_set(&forest);
        let j = seq.ascent_count();
        json!({
            "input": seq.to_strings(),
            "nu": args.nu,
            "tvec": seq.tvec,
            "n": n,
            "ascents": j,
            "ascent_positions": seq.ascent_positions(),
            "leftmost_internal": set_json(&leftmost),
            "distinguished": set_json(&dist),
            "n_minus_ascents": n - j,
            "statistic_matches": n - j == dist.len(),
            "forest": forest.to_json(),
            "dot": forest.to_dot(),
        })
    } else {
        let word: Word = args.word.as_deref().unwrap_or_default().parse()?;
        let t = args.t.unwrap_or(word.zeros() as u32);
        let tree = perm_to_tree(&word, args.nu, t)?;
        let n = word.labels().len();
        let dist = distinguished_set(&tree);
        let asc = ascent_positions(word.letters());
        json!({
            "input": word.to_string(),
            "nu": args.nu,
            "t": t,
            "n": n,
            "ascents": asc.len(),
            "ascent_positions": asc,
            "leftmost_internal": set_json(&leftmost_internal_set(&tree)),
            "distinguished": set_json(&dist),
            "n_minus_ascents": n - asc.len(),
            "statistic_matches": n - asc.len() == dist.len(),
            "tree": tree.to_json(),
            "dot": tree.to_dot("T"),
        })
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    Ok(())
}

fn verify(args: VerifyArgs) -> ExitCode {
    let report = run_suite(args.suite, args.size_level);
    println!("{}", report.to_json_pretty());
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
