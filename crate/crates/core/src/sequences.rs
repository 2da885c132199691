//! Autocorrelation, spectral, and compression tools for integer sequences.
//!
//! Everything that gates a pass/fail decision is exact: PAF profiles are
//! integer sums, and the Golay-pair predicates are built on them. The PSD
//! is double-precision and used only as a conservative filter and for
//! tolerance-based property checks, so no arbitrary-precision FFT is
//! needed; the DFT is direct O(v^2), which is plenty below v = 1000.

use crate::error::{Error, Result};
use num::complex::Complex64;
use std::fmt;
use std::str::FromStr;

/// Periodic autocorrelation profile: `values[s] = sum_i a_i a_{i+s mod v}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PafProfile {
    values: Vec<i64>,
}

impl PafProfile {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `PAF(0)`, the sum of squared entries.
    pub fn at_zero(&self) -> i64 {
        self.values[0]
    }
}

/// Power spectral density profile: `values[s] = |DFT(s)|^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct PsdProfile {
    values: Vec<f64>,
}

impl PsdProfile {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest PSD value across all frequencies.
    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Periodic autocorrelation of an integer sequence, in exact arithmetic.
pub fn paf(entries: &[i64]) -> PafProfile {
    let v = entries.len();
    assert!(v > 0, "paf of an empty sequence");
    let values = (0..v)
        .map(|s| (0..v).map(|i| entries[i] * entries[(i + s) % v]).sum())
        .collect();
    PafProfile { values }
}

/// Discrete Fourier transform at every frequency, direct evaluation.
pub fn dft(entries: &[i64]) -> Vec<Complex64> {
    let v = entries.len();
    assert!(v > 0, "dft of an empty sequence");
    // Roots are generated from the angle directly (not by repeated
    // multiplication) so error stays at machine epsilon per term.
    let root = |r: usize| {
        let angle = 2.0 * std::f64::consts::PI * (r as f64) / (v as f64);
        Complex64::from_polar(1.0, angle)
    };
    (0..v)
        .map(|s| {
            (0..v)
                .map(|k| root((k * s) % v).scale(entries[k] as f64))
                .sum()
        })
        .collect()
}

/// Power spectral density: squared DFT magnitudes.
pub fn psd(entries: &[i64]) -> PsdProfile {
    let values = dft(entries).iter().map(|z| z.norm_sqr()).collect();
    PsdProfile { values }
}

/// `m`-compression: entry `i` of the output is `sum_j a_{i + j*d}` with
/// `d = v/m`. Fails unless `m` divides `v`.
pub fn compress(entries: &[i64], m: usize) -> Result<Vec<i64>> {
    let v = entries.len();
    if m == 0 || v % m != 0 {
        return Err(Error::BadCompressionFactor { m, v });
    }
    let d = v / m;
    Ok((0..d)
        .map(|i| (0..m).map(|j| entries[i + j * d]).sum())
        .collect())
}

fn check_same_length(a: &[i64], b: &[i64]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::InvalidInput("sequences must be nonempty".into()));
    }
    Ok(a.len())
}

/// Golay-pair test: aperiodic autocorrelations sum to zero at every shift
/// `k` in `[1, v)`.
pub fn is_golay_pair(a: &[i64], b: &[i64]) -> Result<bool> {
    let v = check_same_length(a, b)?;
    for k in 1..v {
        let sum: i64 = (0..v - k).map(|i| a[i] * a[i + k] + b[i] * b[i + k]).sum();
        if sum != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Periodic-Golay-pair test: `PAF_A(s) + PAF_B(s) = 0` for every `s` in
/// `[1, v)`. `PAF(0)` is excluded, being a positive sum of squares.
pub fn is_periodic_golay_pair(a: &[i64], b: &[i64]) -> Result<bool> {
    let v = check_same_length(a, b)?;
    let pa = paf(a);
    let pb = paf(b);
    Ok((1..v).all(|s| pa.values[s] + pb.values[s] == 0))
}

/// Whether `v` factors as `2^a * 10^b * 26^c`.
pub fn is_golay_number(v: u64) -> bool {
    if v == 0 {
        return false;
    }
    let mut ten = 1u64;
    while ten <= v {
        let mut ten26 = ten;
        while ten26 <= v {
            if v % ten26 == 0 && (v / ten26).is_power_of_two() {
                return true;
            }
            match ten26.checked_mul(26) {
                Some(next) => ten26 = next,
                None => break,
            }
        }
        match ten.checked_mul(10) {
            Some(next) => ten = next,
            None => break,
        }
    }
    false
}

/// A sequence over `{-1, +1}`, printed in sign notation (`-` for -1, `+`
/// for +1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinarySequence {
    entries: Vec<i64>,
}

impl BinarySequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("sequence must be nonempty".into()));
        }
        if let Some(&e) = entries.iter().find(|&&e| e != 1 && e != -1) {
            return Err(Error::InvalidInput(format!(
                "binary sequences take entries -1 and +1, got {e}"
            )));
        }
        Ok(BinarySequence { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Sum of entries.
    pub fn row_sum(&self) -> i64 {
        self.entries.iter().sum()
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '\u{2212}' => Ok(-1),
                other => Err(Error::Parse(format!(
                    "sign notation uses only '+' and '-', got {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        BinarySequence::new(entries)
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.entries {
            f.write_str(if e == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// A sequence over `{0, +2, -2}`, printed as comma-separated integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TernarySequence {
    entries: Vec<i64>,
}

impl TernarySequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("sequence must be nonempty".into()));
        }
        if let Some(&e) = entries.iter().find(|&&e| e != 0 && e != 2 && e != -2) {
            return Err(Error::InvalidInput(format!(
                "ternary sequences take entries 0, +2, -2, got {e}"
            )));
        }
        Ok(TernarySequence { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn zero_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e == 0).count()
    }

    pub fn row_sum(&self) -> i64 {
        self.entries.iter().sum()
    }
}

impl FromStr for TernarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad ternary entry {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        TernarySequence::new(entries)
    }
}

impl fmt::Display for TernarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An ordered pair of equal-length binary sequences.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryPair {
    a: BinarySequence,
    b: BinarySequence,
}

impl BinaryPair {
    pub fn new(a: BinarySequence, b: BinarySequence) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        Ok(BinaryPair { a, b })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn a(&self) -> &BinarySequence {
        &self.a
    }

    pub fn b(&self) -> &BinarySequence {
        &self.b
    }

    pub fn is_periodic_golay(&self) -> bool {
        is_periodic_golay_pair(self.a.entries(), self.b.entries())
            .expect("lengths equal by construction")
    }
}

impl fmt::Display for BinaryPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.a, self.b)
    }
}
