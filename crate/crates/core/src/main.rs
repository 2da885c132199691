//! Command-line front end: generation, counting, sequence analysis,
//! compression, the staged pair search, lifting, SDS verification, and
//! pair equivalence. Output is line-oriented and deterministic; exit
//! status 0 means success, 1 a domain failure (e.g. an invalid SDS or
//! non-equivalent pairs), 2 a usage error.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use charms::counting::count_charm_bracelets;
use charms::equiv::EquivalenceGroup;
use charms::generate::{generate_fixed_content, generate_representatives, ClassKind};
use charms::search::{run_search, SearchConfig};
use charms::sds::parse_sds_file;
use charms::sequences::{
    compress, is_golay_number, is_golay_pair, is_periodic_golay_pair, paf, psd, BinaryPair,
    BinarySequence, TernarySequence,
};
use charms::{Content, KaryString};

#[derive(Parser)]
#[command(
    name = "charms",
    version,
    about = "Combinatorial sequence design: class generation, counting, and periodic Golay pair search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate class representatives, one per line
    Gen(GenArgs),
    /// Count charm-bracelet classes with the exact formula
    Count(CountArgs),
    /// Report PAF, PSD, and row sums for one or two sequences
    Analyze(AnalyzeArgs),
    /// Compress a sequence by summing entries congruent mod v/m
    Compress(CompressArgs),
    /// Staged search for periodic Golay pairs
    Search(SearchArgs),
    /// Lift a compressed ternary pair to verified full-length pairs
    Lift(LiftArgs),
    /// Verify every supplementary difference set in a file
    VerifySds(VerifySdsArgs),
    /// Test two pairs for equivalence, or deduplicate a file of pairs
    Equiv(EquivArgs),
}

#[derive(Args)]
struct GenArgs {
    /// String length (ignored when --content is given)
    #[arg(long, required_unless_present = "content")]
    n: Option<usize>,
    /// Alphabet size (ignored when --content is given)
    #[arg(long, required_unless_present = "content")]
    k: Option<usize>,
    /// Class kind: necklace, bracelet, or charm
    #[arg(long, default_value = "charm")]
    mode: ClassKind,
    /// Fixed content as comma-separated symbol counts, e.g. 17,10,7
    #[arg(long)]
    content: Option<String>,
}

#[derive(Args)]
struct CountArgs {
    /// Length or inclusive length range, e.g. 6 or 1..8
    #[arg(long)]
    n: String,
    /// Alphabet size or inclusive range, e.g. 2 or 2..4
    #[arg(long)]
    k: String,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// One or two sequences; signs (+-...) or comma-separated integers
    #[arg(required = true, num_args = 1..=2, allow_hyphen_values = true)]
    sequences: Vec<String>,
}

#[derive(Args)]
struct CompressArgs {
    /// The sequence, in sign notation or comma-separated integers
    #[arg(long, allow_hyphen_values = true)]
    seq: String,
    /// Compression factor; must divide the length
    #[arg(long)]
    m: usize,
}

#[derive(Args)]
struct SearchArgs {
    /// Full sequence length (even); required unless --config provides it
    #[arg(long)]
    v: Option<usize>,
    /// Compression factor
    #[arg(long)]
    m: Option<usize>,
    /// TOML config file mirroring the search parameters
    #[arg(long)]
    config: Option<PathBuf>,
    /// Restrict to one row-sum split, e.g. 6,10
    #[arg(long, allow_hyphen_values = true)]
    row_sums: Option<String>,
    /// Restrict to one zero split, e.g. 21,13
    #[arg(long)]
    zero_split: Option<String>,
    /// PSD filter tolerance (scaled by v)
    #[arg(long)]
    tolerance: Option<f64>,
    /// Abort a stage after this many persisted candidates per file
    #[arg(long)]
    max_records: Option<u64>,
    /// Refuse to lift a side with more zeros than this
    #[arg(long)]
    lift_cap: Option<u32>,
    /// Keep candidate files here instead of a temporary directory
    #[arg(long)]
    workdir: Option<PathBuf>,
    /// Also write the report as JSON to this path
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct LiftArgs {
    /// Compressed side A, comma-separated entries from {0, 2, -2}
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Compressed side B, comma-separated entries from {0, 2, -2}
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// Full length; defaults to twice the compressed length
    #[arg(long)]
    v: Option<usize>,
    /// PSD filter tolerance (scaled by v)
    #[arg(long, default_value_t = charms::search::DEFAULT_PSD_TOLERANCE)]
    tolerance: f64,
    /// Refuse to lift a side with more zeros than this
    #[arg(long, default_value_t = charms::search::DEFAULT_LIFT_ZERO_CAP)]
    lift_cap: u32,
}

#[derive(Args)]
struct VerifySdsArgs {
    /// File of SDS records (v, lambda, X, Y fields; '#' comments)
    file: PathBuf,
}

#[derive(Args)]
struct EquivArgs {
    /// First pair, side A (sign notation)
    #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
    a1: Option<String>,
    /// First pair, side B
    #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
    b1: Option<String>,
    /// Second pair, side A
    #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
    a2: Option<String>,
    /// Second pair, side B
    #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
    b2: Option<String>,
    /// Deduplicate a file of pairs ("A B" per line) up to equivalence
    #[arg(long)]
    file: Option<PathBuf>,
    /// Also allow negating either side
    #[arg(long)]
    negation: bool,
    /// Also allow swapping the sides
    #[arg(long)]
    swap: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> charms::Result<ExitCode> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Count(args) => cmd_count(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Compress(args) => cmd_compress(args),
        Command::Search(args) => cmd_search(args),
        Command::Lift(args) => cmd_lift(args),
        Command::VerifySds(args) => cmd_verify_sds(args),
        Command::Equiv(args) => cmd_equiv(args),
    }
}

fn cmd_gen(args: GenArgs) -> charms::Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let emit = |out: &mut BufWriter<_>, symbols: &[u8], k: usize| {
        let word = KaryString::new(symbols.to_vec(), k).expect("generator emits valid symbols");
        writeln!(out, "{word}").expect("stdout write");
    };
    let total = match args.content {
        Some(spec) => {
            let counts = parse_usize_list(&spec)?;
            let content = Content::new(counts)?;
            let k = content.alphabet_size();
            generate_fixed_content(&content, args.mode, |s| emit(&mut out, s, k))?
        }
        None => {
            let (n, k) = (args.n.unwrap(), args.k.unwrap());
            generate_representatives(n, k, args.mode, |s| emit(&mut out, s, k))?
        }
    };
    out.flush()?;
    eprintln!("{total} representative(s)");
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(args: CountArgs) -> charms::Result<ExitCode> {
    let (n_lo, n_hi) = parse_range(&args.n)?;
    let (k_lo, k_hi) = parse_range(&args.k)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for n in n_lo..=n_hi {
        write!(out, "{n}")?;
        for k in k_lo..=k_hi {
            write!(out, "\t{}", count_charm_bracelets(n, k)?)?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_analyze(args: AnalyzeArgs) -> charms::Result<ExitCode> {
    let seqs: Vec<Vec<i64>> = args
        .sequences
        .iter()
        .map(|s| parse_sequence(s))
        .collect::<charms::Result<_>>()?;
    for (idx, entries) in seqs.iter().enumerate() {
        let label = (b'A' + idx as u8) as char;
        let profile = paf(entries);
        let spectrum = psd(entries);
        println!("{label}: length {}", entries.len());
        println!(
            "{label}: row sum {}",
            entries.iter().copied().sum::<i64>()
        );
        println!("{label}: paf {}", join_i64(profile.values()));
        println!("{label}: psd {}", join_f64(spectrum.values()));
        println!("{label}: psd max {:.6}", spectrum.max());
    }
    if let [a, b] = seqs.as_slice() {
        let pa = paf(a);
        let pb = paf(b);
        if a.len() == b.len() {
            let sums: Vec<i64> = pa
                .values()
                .iter()
                .zip(pb.values())
                .map(|(x, y)| x + y)
                .collect();
            println!("pair: paf sums {}", join_i64(&sums));
        }
        let binary = a.iter().chain(b.iter()).all(|&e| e == 1 || e == -1);
        if binary {
            println!("pair: golay {}", is_golay_pair(a, b)?);
            println!("pair: periodic golay {}", is_periodic_golay_pair(a, b)?);
            println!(
                "pair: golay number {}",
                is_golay_number(a.len() as u64)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compress(args: CompressArgs) -> charms::Result<ExitCode> {
    let entries = parse_sequence(&args.seq)?;
    let compressed = compress(&entries, args.m)?;
    println!("{}", join_i64(&compressed));
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(args: SearchArgs) -> charms::Result<ExitCode> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            toml::from_str::<SearchConfig>(&text)
                .map_err(|e| charms::Error::Parse(format!("config file: {e}")))?
        }
        None => {
            let v = args.v.ok_or_else(|| {
                charms::Error::InvalidInput("search needs --v or --config".into())
            })?;
            SearchConfig::new(v)
        }
    };
    if let Some(v) = args.v {
        config.v = v;
    }
    if let Some(m) = args.m {
        config.m = m;
    }
    if let Some(spec) = &args.row_sums {
        let pair = parse_i64_pair(spec)?;
        config.row_sums = Some(pair);
    }
    if let Some(spec) = &args.zero_split {
        let counts = parse_usize_list(spec)?;
        if counts.len() != 2 {
            return Err(charms::Error::InvalidInput(
                "--zero-split takes exactly two counts".into(),
            ));
        }
        config.zero_split = Some((counts[0], counts[1]));
    }
    if let Some(t) = args.tolerance {
        config.psd_tolerance = t;
    }
    if let Some(r) = args.max_records {
        config.max_records = r;
    }
    if let Some(c) = args.lift_cap {
        config.lift_zero_cap = c;
    }
    if let Some(dir) = &args.workdir {
        config.workdir = Some(dir.clone());
    }
    let report = run_search(&config)?;
    print!("{report}");
    if let Some(path) = &args.report {
        let json = serde_json::to_string_pretty(&report)
            .map_err(|e| charms::Error::Internal(format!("report serialization: {e}")))?;
        fs::write(path, json)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lift(args: LiftArgs) -> charms::Result<ExitCode> {
    let a: TernarySequence = args.a.parse()?;
    let b: TernarySequence = args.b.parse()?;
    let v = args.v.unwrap_or(2 * a.len());
    let (pairs, stats) = charms::search::stage3_lift(&a, &b, v, args.tolerance, args.lift_cap)?;
    for pair in &pairs {
        println!("{pair}");
    }
    eprintln!(
        "lifts: {} x {}, joined {}, verified {}",
        stats.lifts_a, stats.lifts_b, stats.joined, stats.verified
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_sds(args: VerifySdsArgs) -> charms::Result<ExitCode> {
    let text = fs::read_to_string(&args.file)?;
    let records = parse_sds_file(&text)?;
    let mut valid = 0usize;
    for (idx, sds) in records.iter().enumerate() {
        let (v, r, s, lambda) = sds.parameters();
        let ok = sds.verify();
        let golay = sds.satisfies_golay_condition();
        if ok {
            valid += 1;
        }
        println!(
            "record {}: ({v}; {r}, {s}; {lambda}) {} golay-condition {}",
            idx + 1,
            if ok { "valid" } else { "INVALID" },
            if golay { "yes" } else { "no" }
        );
    }
    println!("{valid}/{} valid", records.len());
    if valid == records.len() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_equiv(args: EquivArgs) -> charms::Result<ExitCode> {
    let group = EquivalenceGroup {
        allow_negation: args.negation,
        allow_swap: args.swap,
    };
    if let Some(path) = &args.file {
        let text = fs::read_to_string(path)?;
        let mut classes = std::collections::BTreeSet::new();
        let mut total = 0usize;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let pair = parse_pair_line(line)?;
            total += 1;
            classes.insert(group.canonical_form(&pair));
        }
        for class in &classes {
            println!("{class}");
        }
        eprintln!("{total} pair(s), {} class(es)", classes.len());
        return Ok(ExitCode::SUCCESS);
    }
    let (Some(a1), Some(b1), Some(a2), Some(b2)) = (&args.a1, &args.b1, &args.a2, &args.b2) else {
        eprintln!("error: equiv needs either --file or all of --a1 --b1 --a2 --b2");
        return Ok(ExitCode::from(2));
    };
    let first = BinaryPair::new(a1.parse()?, b1.parse()?)?;
    let second = BinaryPair::new(a2.parse()?, b2.parse()?)?;
    if group.are_equivalent(&first, &second)? {
        println!("equivalent");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("not equivalent");
        Ok(ExitCode::from(1))
    }
}

fn parse_pair_line(line: &str) -> charms::Result<BinaryPair> {
    let mut parts = line.split_whitespace();
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(charms::Error::Parse(format!(
            "expected two sign sequences per line, got {line:?}"
        )));
    };
    let a: BinarySequence = a.parse()?;
    let b: BinarySequence = b.parse()?;
    BinaryPair::new(a, b)
}

/// Signs (`+-++`) or comma-separated integers; both appear in the formats
/// this tool reads and writes.
fn parse_sequence(s: &str) -> charms::Result<Vec<i64>> {
    let s = s.trim();
    if s.contains(',') || s.chars().any(|c| c.is_ascii_digit()) {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| charms::Error::Parse(format!("entry {t:?}: {e}")))
            })
            .collect()
    } else {
        let seq: BinarySequence = s.parse()?;
        Ok(seq.entries().to_vec())
    }
}

fn parse_range(s: &str) -> charms::Result<(usize, usize)> {
    let bad = |s: &str| charms::Error::Parse(format!("expected N or A..B, got {s:?}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo.trim().parse::<usize>().map_err(|_| bad(s))?;
            let hi = hi.trim().parse::<usize>().map_err(|_| bad(s))?;
            if lo > hi {
                return Err(bad(s));
            }
            Ok((lo, hi))
        }
        None => {
            let n = s.trim().parse::<usize>().map_err(|_| bad(s))?;
            Ok((n, n))
        }
    }
}

fn parse_usize_list(s: &str) -> charms::Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| charms::Error::Parse(format!("count {t:?}: {e}")))
        })
        .collect()
}

fn parse_i64_pair(s: &str) -> charms::Result<(i64, i64)> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| charms::Error::Parse(format!("value {t:?}: {e}")))
        })
        .collect::<charms::Result<_>>()?;
    if parts.len() != 2 {
        return Err(charms::Error::InvalidInput(
            "expected exactly two comma-separated values".into(),
        ));
    }
    Ok((parts[0], parts[1]))
}

fn join_i64(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn join_f64(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:.6}"))
        .collect::<Vec<_>>()
        .join(",")
}
