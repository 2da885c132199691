//! Compression-based search for periodic Golay pairs.
//!
//! For even `v` the pipeline works at compression factor `m = 2` on
//! sequences of length `d = v/2` over `{0, +2, -2}`:
//!
//! 1. Derive the row-sum splits `a^2 + b^2 = 2v` and, for each, the zero
//!    splits `z_A + z_B = v/2`; each feasible combination fixes one ternary
//!    content per side.
//! 2. Stage 1 streams fixed-content charm bracelets (side A) and bracelets
//!    (side B), discarding any candidate whose PSD exceeds `2v` (plus
//!    tolerance), and persists survivors with their PAF profiles.
//! 3. Stage 2 joins the two candidate files on exact PAF complementarity:
//!    `PAF_A'(0) + PAF_B'(0) = 2v` and zero sums at every other shift.
//! 4. Stage 3 lifts each matched compressed pair back to full length
//!    (`+2 -> (+1,+1)`, `-2 -> (-1,-1)`, `0 ->` either order of `(+1,-1)`),
//!    PSD-filters the lifts, joins them on exact full-length PAF
//!    complementarity, and verifies every surviving pair.
//!
//! Reducing side A to charm bracelets spends the simultaneous-multiplier
//! freedom, and side B to bracelets the rotation/reversal freedom, so every
//! equivalence class of periodic Golay pairs whose compressions have the
//! given contents is still represented. Found pairs are deduplicated by
//! canonical form and reported in sorted order, so output is deterministic.

use crate::equiv::EquivalenceGroup;
use crate::error::{Error, Result};
use crate::generate::{generate_fixed_content_controlled, ClassKind};
use crate::sequences::{
    is_periodic_golay_pair, paf, psd, BinaryPair, BinarySequence, TernarySequence,
};
use crate::words::Content;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

pub const DEFAULT_PSD_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_MAX_RECORDS: u64 = 10_000_000;
pub const DEFAULT_LIFT_ZERO_CAP: u32 = 26;

fn default_m() -> usize {
    2
}

fn default_psd_tolerance() -> f64 {
    DEFAULT_PSD_TOLERANCE
}

fn default_max_records() -> u64 {
    DEFAULT_MAX_RECORDS
}

fn default_lift_zero_cap() -> u32 {
    DEFAULT_LIFT_ZERO_CAP
}

/// Parameters of one search run. Deserializable from TOML, so a config
/// file can carry everything; absent fields take the documented defaults.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Full (uncompressed) length; must be even.
    pub v: usize,
    /// Compression factor; the pipeline implements 2.
    #[serde(default = "default_m")]
    pub m: usize,
    /// Explicit row-sum split; all solutions of `a^2 + b^2 = 2v` when absent.
    #[serde(default)]
    pub row_sums: Option<(i64, i64)>,
    /// Explicit zero split; all splits of `v/2` when absent.
    #[serde(default)]
    pub zero_split: Option<(usize, usize)>,
    /// Scale factor for PSD comparisons: the filter accepts up to
    /// `2v + psd_tolerance * v`.
    #[serde(default = "default_psd_tolerance")]
    pub psd_tolerance: f64,
    /// Directory for candidate files; a temporary directory when absent.
    #[serde(default)]
    pub workdir: Option<PathBuf>,
    /// Stage-1 abort threshold, per candidate file.
    #[serde(default = "default_max_records")]
    pub max_records: u64,
    /// Refuse to lift a compressed sequence with more zeros than this.
    #[serde(default = "default_lift_zero_cap")]
    pub lift_zero_cap: u32,
}

impl SearchConfig {
    pub fn new(v: usize) -> Self {
        SearchConfig {
            v,
            m: default_m(),
            row_sums: None,
            zero_split: None,
            psd_tolerance: default_psd_tolerance(),
            workdir: None,
            max_records: default_max_records(),
            lift_zero_cap: default_lift_zero_cap(),
        }
    }
}

/// All `(a, b)` with `0 <= a <= b` and `a^2 + b^2 = 2v`: the possible
/// row-sum magnitudes of a periodic Golay pair of length `v`, since the
/// PSD sum at frequency 0 is `(sum A)^2 + (sum B)^2 = 2v`. An empty result
/// proves no pair exists at `v`.
pub fn row_sum_splits(v: usize) -> Vec<(i64, i64)> {
    let target = 2 * v as i64;
    let mut out = Vec::new();
    let mut a = 0i64;
    while 2 * a * a <= target {
        let rest = target - a * a;
        let b = (rest as f64).sqrt().round() as i64;
        if b * b == rest {
            out.push((a, b));
        }
        a += 1;
    }
    out
}

/// Content of a ternary sequence, in the symbol order 0, +2, -2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TernaryContent {
    pub zeros: usize,
    pub plus: usize,
    pub minus: usize,
}

impl TernaryContent {
    pub fn total(&self) -> usize {
        self.zeros + self.plus + self.minus
    }

    fn to_content(self) -> Content {
        Content::new(vec![self.zeros, self.plus, self.minus]).expect("nonempty content")
    }
}

/// Solves for the content of a length-`d` ternary sequence with `z` zeros
/// and the given row sum: `p - q = rowsum/2`, `p + q = d - z`. `None`
/// marks an infeasible split.
pub fn content_from(d: usize, z: usize, rowsum: i64) -> Option<TernaryContent> {
    if z > d || rowsum % 2 != 0 {
        return None;
    }
    let w = (d - z) as i64;
    let half = rowsum / 2;
    let twice_p = w + half;
    if twice_p < 0 || twice_p % 2 != 0 {
        return None;
    }
    let p = twice_p / 2;
    let q = w - p;
    if q < 0 {
        return None;
    }
    Some(TernaryContent {
        zeros: z,
        plus: p as usize,
        minus: q as usize,
    })
}

/// Which half of the pair a candidate stream belongs to. Side A consumes
/// the simultaneous-multiplier freedom (charm bracelets); side B only the
/// rotation/reversal freedom (bracelets).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn class_kind(self) -> ClassKind {
        match self {
            Side::A => ClassKind::CharmBracelet,
            Side::B => ClassKind::Bracelet,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Side::A => "a",
            Side::B => "b",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

const TERNARY_VALUES: [i64; 3] = [0, 2, -2];

fn decode_ternary(word: &[u8]) -> Vec<i64> {
    word.iter().map(|&s| TERNARY_VALUES[s as usize]).collect()
}

/// One persisted stage-1 survivor: the ternary sequence and its PAF
/// profile, so stage 2 can match without recomputation.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CandidateRecord {
    seq: TernarySequence,
    paf: Vec<i64>,
}

impl CandidateRecord {
    fn to_line(&self) -> String {
        let paf_csv = self
            .paf
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("{}\t{}", self.seq, paf_csv)
    }

    fn from_line(line: &str) -> Result<Self> {
        let (seq_part, paf_part) = line
            .split_once('\t')
            .ok_or_else(|| Error::Parse(format!("candidate record without tab: {line:?}")))?;
        let seq: TernarySequence = seq_part.parse()?;
        let paf = paf_part
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad PAF value {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if paf.len() != seq.len() {
            return Err(Error::Parse(format!(
                "candidate record has {} PAF values for a length-{} sequence",
                paf.len(),
                seq.len()
            )));
        }
        Ok(CandidateRecord { seq, paf })
    }
}

fn read_candidates(path: &Path) -> Result<Vec<CandidateRecord>> {
    let reader = BufReader::new(fs::File::open(path)?);
    let mut records = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(CandidateRecord::from_line(&line)?);
    }
    Ok(records)
}

/// Counters for one stage-1 generation run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageOneStats {
    pub generated: u64,
    pub psd_discarded: u64,
    pub persisted: u64,
}

/// Streams the side's fixed-content representatives, PSD-filters them
/// against `2v + tol*v`, and writes survivors to `path`. Aborts with a
/// stage-limit error if more than `max_records` survivors appear.
pub fn stage1_candidates(
    content: &TernaryContent,
    side: Side,
    v: usize,
    psd_tolerance: f64,
    max_records: u64,
    path: &Path,
) -> Result<StageOneStats> {
    let bound = 2.0 * v as f64 + psd_tolerance * v as f64;
    let mut writer = BufWriter::new(fs::File::create(path)?);
    let mut stats = StageOneStats::default();
    let mut io_error: Option<Error> = None;
    let mut overflow = false;
    generate_fixed_content_controlled(&content.to_content(), side.class_kind(), |word| {
        stats.generated += 1;
        let entries = decode_ternary(word);
        if psd(&entries).max() > bound {
            stats.psd_discarded += 1;
            return ControlFlow::Continue(());
        }
        if stats.persisted == max_records {
            overflow = true;
            return ControlFlow::Break(());
        }
        let record = CandidateRecord {
            seq: TernarySequence::new(entries).expect("decoded alphabet is ternary"),
            paf: paf(&decode_ternary(word)).values().to_vec(),
        };
        if let Err(e) = writeln!(writer, "{}", record.to_line()) {
            io_error = Some(e.into());
            return ControlFlow::Break(());
        }
        stats.persisted += 1;
        ControlFlow::Continue(())
    })?;
    if let Some(e) = io_error {
        return Err(e);
    }
    if overflow {
        return Err(Error::StageLimit(format!(
            "stage 1 side {side} (content {}/{}/{}) exceeded {max_records} records; \
             raise max_records or narrow the split",
            content.zeros, content.plus, content.minus
        )));
    }
    writer.flush()?;
    Ok(stats)
}

/// Joins the two candidate files on exact PAF complementarity: matches are
/// the `(A', B')` with `PAF_A'(0) + PAF_B'(0) = 2v` and `PAF_A'(s) +
/// PAF_B'(s) = 0` for `s >= 1`. B-records are indexed under their negated
/// profile (with `2v` restored at shift 0), so the join is a hash lookup
/// per A-record.
pub fn stage2_match(
    path_a: &Path,
    path_b: &Path,
    v: usize,
) -> Result<Vec<(TernarySequence, TernarySequence)>> {
    let mut index: HashMap<Vec<i64>, Vec<TernarySequence>> = HashMap::new();
    for record in read_candidates(path_b)? {
        let mut key: Vec<i64> = record.paf.iter().map(|&p| -p).collect();
        key[0] += 2 * v as i64;
        index.entry(key).or_default().push(record.seq);
    }
    let mut pairs = Vec::new();
    for record in read_candidates(path_a)? {
        if let Some(matches) = index.get(&record.paf) {
            for b_seq in matches {
                pairs.push((record.seq.clone(), b_seq.clone()));
            }
        }
    }
    Ok(pairs)
}

/// Counters for one stage-3 lift of a matched compressed pair.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftStats {
    /// Lifts of each side surviving the PSD filter.
    pub lifts_a: u64,
    pub lifts_b: u64,
    /// Full pairs whose PAF profiles matched in the join.
    pub joined: u64,
    /// Pairs passing the final exact verification.
    pub verified: u64,
}

fn enumerate_lifts(
    compressed: &TernarySequence,
    v: usize,
    psd_bound: f64,
    cap: u32,
) -> Result<Vec<Vec<i64>>> {
    let d = compressed.len();
    let zeros: Vec<usize> = compressed
        .entries()
        .iter()
        .enumerate()
        .filter_map(|(i, &e)| (e == 0).then_some(i))
        .collect();
    let z = zeros.len() as u32;
    if z > cap {
        return Err(Error::LiftCapExceeded { zeros: z, cap });
    }
    let mut base = vec![0i64; v];
    for (i, &e) in compressed.entries().iter().enumerate() {
        let half = e / 2;
        base[i] = half;
        base[i + d] = half;
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << z) {
        let mut full = base.clone();
        for (bit, &pos) in zeros.iter().enumerate() {
            let sign = if mask >> bit & 1 == 1 { -1 } else { 1 };
            full[pos] = sign;
            full[pos + d] = -sign;
        }
        if psd(&full).max() <= psd_bound {
            out.push(full);
        }
    }
    Ok(out)
}

/// Expands a matched compressed pair to full length and returns every
/// verified periodic Golay pair among the lifts.
///
/// Requires `v = 2 * d` (the lifting rule is specific to 2-compression).
/// Errors if either side has more zeros than `lift_zero_cap`, since a side
/// with `z` zeros expands to `2^z` candidates.
pub fn stage3_lift(
    a_compressed: &TernarySequence,
    b_compressed: &TernarySequence,
    v: usize,
    psd_tolerance: f64,
    lift_zero_cap: u32,
) -> Result<(Vec<BinaryPair>, LiftStats)> {
    if a_compressed.len() != b_compressed.len() {
        return Err(Error::LengthMismatch {
            left: a_compressed.len(),
            right: b_compressed.len(),
        });
    }
    if v != 2 * a_compressed.len() {
        return Err(Error::InvalidInput(format!(
            "lifting needs v = 2d, got v={v} and d={}",
            a_compressed.len()
        )));
    }
    let bound = 2.0 * v as f64 + psd_tolerance * v as f64;
    let lifts_a = enumerate_lifts(a_compressed, v, bound, lift_zero_cap)?;
    let lifts_b = enumerate_lifts(b_compressed, v, bound, lift_zero_cap)?;
    let mut stats = LiftStats {
        lifts_a: lifts_a.len() as u64,
        lifts_b: lifts_b.len() as u64,
        ..LiftStats::default()
    };
    // Join on the PAF tail (shift 0 is v for every +-1 sequence).
    let mut index: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    for (bi, b_full) in lifts_b.iter().enumerate() {
        let key: Vec<i64> = paf(b_full).values()[1..].iter().map(|&p| -p).collect();
        index.entry(key).or_default().push(bi);
    }
    let mut pairs = Vec::new();
    for a_full in &lifts_a {
        let key = paf(a_full).values()[1..].to_vec();
        let Some(matches) = index.get(&key) else {
            continue;
        };
        for &bi in matches {
            stats.joined += 1;
            let b_full = &lifts_b[bi];
            if is_periodic_golay_pair(a_full, b_full)? {
                stats.verified += 1;
                pairs.push(BinaryPair::new(
                    BinarySequence::new(a_full.clone())?,
                    BinarySequence::new(b_full.clone())?,
                )?);
            }
        }
    }
    Ok((pairs, stats))
}

/// Aggregated counters across every split of a search run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub splits_examined: u64,
    pub generated_a: u64,
    pub generated_b: u64,
    pub psd_discarded_a: u64,
    pub psd_discarded_b: u64,
    pub candidates_a: u64,
    pub candidates_b: u64,
    pub matched_compressed: u64,
    pub lifts_tested: u64,
    pub verified: u64,
}

/// One found pair, in sign notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundPair {
    pub a: String,
    pub b: String,
}

/// Outcome of [`run_search`]: the distinct pairs (canonical forms, sorted)
/// and the stage counters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchReport {
    pub v: usize,
    pub m: usize,
    pub row_sum_splits: Vec<(i64, i64)>,
    pub pairs: Vec<FoundPair>,
    pub stats: SearchStats,
}

impl SearchReport {
    /// The found pairs as structured values.
    pub fn pairs(&self) -> Result<Vec<BinaryPair>> {
        self.pairs
            .iter()
            .map(|fp| BinaryPair::new(fp.a.parse()?, fp.b.parse()?))
            .collect()
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "search v={} m={}: {} distinct pair(s)",
            self.v,
            self.m,
            self.pairs.len()
        )?;
        writeln!(f, "row-sum splits: {:?}", self.row_sum_splits)?;
        let s = &self.stats;
        writeln!(
            f,
            "stage 1: generated {}/{} (A/B), PSD-discarded {}/{}, persisted {}/{}",
            s.generated_a,
            s.generated_b,
            s.psd_discarded_a,
            s.psd_discarded_b,
            s.candidates_a,
            s.candidates_b
        )?;
        writeln!(
            f,
            "stage 2: {} matched compressed pair(s); stage 3: {} joined lift(s), {} verified",
            s.matched_compressed, s.lifts_tested, s.verified
        )?;
        for pair in &self.pairs {
            writeln!(f, "pair: {} {}", pair.a, pair.b)?;
        }
        Ok(())
    }
}

/// Runs the full pipeline over every feasible split and returns the
/// deduplicated, canonicalized findings. Single-threaded; output is
/// deterministic for a fixed config.
pub fn run_search(config: &SearchConfig) -> Result<SearchReport> {
    let v = config.v;
    if v == 0 || v % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "search length must be even and positive, got {v}"
        )));
    }
    if config.m != 2 {
        return Err(Error::InvalidInput(format!(
            "the lift stage implements compression factor 2, got {}",
            config.m
        )));
    }
    let d = v / 2;

    let splits = match config.row_sums {
        Some((a, b)) => {
            if a * a + b * b != 2 * v as i64 {
                return Err(Error::InvalidInput(format!(
                    "row sums ({a}, {b}) violate a^2 + b^2 = 2v = {}",
                    2 * v
                )));
            }
            vec![(a, b)]
        }
        None => row_sum_splits(v),
    };

    let zero_splits: Vec<(usize, usize)> = match config.zero_split {
        Some((za, zb)) => {
            if za + zb != d {
                return Err(Error::InvalidInput(format!(
                    "zero split ({za}, {zb}) must sum to v/2 = {d}"
                )));
            }
            vec![(za, zb)]
        }
        None => (0..=d).map(|za| (za, d - za)).collect(),
    };

    // Candidate files live in the configured directory, or a temporary one
    // torn down with the run.
    let tempdir;
    let workdir: PathBuf = match &config.workdir {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            dir.clone()
        }
        None => {
            tempdir = tempfile::tempdir()?;
            tempdir.path().to_path_buf()
        }
    };

    let mut stats = SearchStats::default();
    let mut canonical: BTreeSet<BinaryPair> = BTreeSet::new();
    let group = EquivalenceGroup::standard();

    for &(a_sum, b_sum) in &splits {
        for &(za, zb) in &zero_splits {
            let (Some(content_a), Some(content_b)) =
                (content_from(d, za, a_sum), content_from(d, zb, b_sum))
            else {
                continue;
            };
            stats.splits_examined += 1;
            let path_a = workdir.join(format!(
                "candidates_{}_v{v}_rs{a_sum}_z{za}.txt",
                Side::A.label()
            ));
            let path_b = workdir.join(format!(
                "candidates_{}_v{v}_rs{b_sum}_z{zb}.txt",
                Side::B.label()
            ));
            let s1a = stage1_candidates(
                &content_a,
                Side::A,
                v,
                config.psd_tolerance,
                config.max_records,
                &path_a,
            )?;
            let s1b = stage1_candidates(
                &content_b,
                Side::B,
                v,
                config.psd_tolerance,
                config.max_records,
                &path_b,
            )?;
            stats.generated_a += s1a.generated;
            stats.generated_b += s1b.generated;
            stats.psd_discarded_a += s1a.psd_discarded;
            stats.psd_discarded_b += s1b.psd_discarded;
            stats.candidates_a += s1a.persisted;
            stats.candidates_b += s1b.persisted;

            let matched = stage2_match(&path_a, &path_b, v)?;
            stats.matched_compressed += matched.len() as u64;

            for (a_c, b_c) in &matched {
                let (pairs, lift_stats) =
                    stage3_lift(a_c, b_c, v, config.psd_tolerance, config.lift_zero_cap)?;
                stats.lifts_tested += lift_stats.joined;
                stats.verified += lift_stats.verified;
                for pair in pairs {
                    canonical.insert(group.canonical_form(&pair));
                }
            }
        }
    }

    let pairs = canonical
        .into_iter()
        .map(|p| FoundPair {
            a: p.a().to_string(),
            b: p.b().to_string(),
        })
        .collect();
    Ok(SearchReport {
        v,
        m: config.m,
        row_sum_splits: splits,
        pairs,
        stats,
    })
}
