//! k-ary strings under rotation, reversal, and affine index actions.
//!
//! A string `a_0 a_1 ... a_{n-1}` over the alphabet `{0, ..., k-1}` has its
//! indices read as elements of `Z_n`. Three group actions partition the set
//! of such strings: rotations (classes are necklaces), rotations plus
//! reversal (bracelets), and the full affine group `j -> a + d*j mod n` with
//! `gcd(d, n) = 1` (charm bracelets). Throughout, the named representative
//! of a class is its lexicographically smallest member.

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported alphabet; symbols are stored as `u8`.
pub const MAX_ALPHABET: usize = 256;

/// Greatest common divisor (binary arguments are small, Euclid is fine).
pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// The multipliers `d` with `1 <= d < n` and `gcd(d, n) = 1`, in increasing
/// order. By convention `units(1)` is empty; callers treat the identity
/// multiplier separately where it matters.
pub fn units(n: usize) -> Vec<usize> {
    (1..n).filter(|&d| gcd(d, n) == 1).collect()
}

/// Euler's totient, as the size of [`units`] (with the usual `phi(1) = 1`).
pub fn totient(n: usize) -> usize {
    if n == 1 {
        1
    } else {
        units(n).len()
    }
}

/// Index of the lexicographically least rotation of `xs`.
///
/// Scans the string doubled (via modular indexing) in O(n) time; for
/// periodic strings, ties resolve to the smallest starting index.
pub fn least_rotation<T: Ord>(xs: &[T]) -> usize {
    let n = xs.len();
    assert!(n > 0, "least_rotation of an empty string");
    let at = |i: usize| &xs[i % n];
    let mut t = 0usize; // start of the current best rotation
    let mut j = 0usize;
    let mut p = 1usize; // period of the prefix matched so far
    loop {
        t += p * ((j - t) / p);
        j = t + 1;
        p = 1;
        while j < 2 * n && at(j - p) <= at(j) {
            if at(j - p) < at(j) {
                p = j - t + 1;
            }
            j += 1;
        }
        if p * ((j - t) / p) >= n {
            return t % n;
        }
    }
}

/// `true` iff `xs` is its own least rotation.
pub fn is_necklace_slice<T: Ord>(xs: &[T]) -> bool {
    least_rotation(xs) == 0
}

/// Writes the image of `src` under the index map `j -> d*j mod n` into `dst`
/// (gather form: `dst[j] = src[d*j mod n]`).
pub(crate) fn affine_image_into(d: usize, src: &[u8], dst: &mut Vec<u8>) {
    let n = src.len();
    dst.clear();
    dst.extend((0..n).map(|j| src[(d * j) % n]));
}

/// Compares `alpha` against the rotation of `beta` starting at `start`.
fn cmp_with_rotation(alpha: &[u8], beta: &[u8], start: usize) -> std::cmp::Ordering {
    let n = alpha.len();
    for i in 0..n {
        let ord = alpha[i].cmp(&beta[(start + i) % n]);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

/// Charm-bracelet test for a necklace `alpha`: for every unit `d`, the
/// necklace form of the `d`-decimated string must not be smaller than
/// `alpha`. `units` must be `units(alpha.len())`; `scratch` is reused
/// between calls to avoid allocation in generation loops.
pub(crate) fn is_charm_slice(alpha: &[u8], units: &[usize], scratch: &mut Vec<u8>) -> bool {
    debug_assert!(is_necklace_slice(alpha), "is_charm requires a necklace");
    for &d in units {
        if d == 1 {
            continue;
        }
        affine_image_into(d, alpha, scratch);
        let t = least_rotation(scratch);
        if cmp_with_rotation(alpha, scratch, t) == std::cmp::Ordering::Greater {
            return false;
        }
    }
    true
}

/// Bracelet test for a necklace `alpha`: the necklace form of the reversal
/// must not be smaller than `alpha`.
pub(crate) fn is_bracelet_slice(alpha: &[u8], scratch: &mut Vec<u8>) -> bool {
    debug_assert!(is_necklace_slice(alpha), "is_bracelet requires a necklace");
    scratch.clear();
    scratch.extend(alpha.iter().rev());
    let t = least_rotation(scratch);
    cmp_with_rotation(alpha, scratch, t) != std::cmp::Ordering::Greater
}

/// A length-`n` string over `{0, ..., k-1}` whose indices live in `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KaryString {
    symbols: Vec<u8>,
    k: usize,
}

impl KaryString {
    pub fn new(symbols: Vec<u8>, k: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidInput("string must be nonempty".into()));
        }
        if k == 0 || k > MAX_ALPHABET {
            return Err(Error::InvalidInput(format!(
                "alphabet size {k} out of range 1..={MAX_ALPHABET}"
            )));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s as usize >= k) {
            return Err(Error::InvalidInput(format!(
                "symbol {s} out of range for alphabet size {k}"
            )));
        }
        Ok(KaryString { symbols, k })
    }

    /// Parses either a run of digits (`"12003"`, k <= 10) or a
    /// comma-separated list of integers.
    pub fn parse(s: &str, k: usize) -> Result<Self> {
        let symbols: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u8>()
                        .map_err(|e| Error::Parse(format!("bad symbol {tok:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        KaryString::new(symbols, k)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Multiset of symbol counts.
    pub fn content(&self) -> Content {
        let mut counts = vec![0usize; self.k];
        for &s in &self.symbols {
            counts[s as usize] += 1;
        }
        Content { counts }
    }

    /// Index of the lexicographically least rotation.
    pub fn least_rotation(&self) -> usize {
        least_rotation(&self.symbols)
    }

    /// The rotation starting at index `t`.
    pub fn rotated(&self, t: usize) -> KaryString {
        let n = self.len();
        let symbols = (0..n).map(|i| self.symbols[(t + i) % n]).collect();
        KaryString { symbols, k: self.k }
    }

    /// The necklace representative of this string's rotation class.
    pub fn canonical_rotation(&self) -> KaryString {
        self.rotated(self.least_rotation())
    }

    pub fn reversed(&self) -> KaryString {
        KaryString {
            symbols: self.symbols.iter().rev().copied().collect(),
            k: self.k,
        }
    }

    /// Image under the index map `j -> d*j mod n` (gather form:
    /// `b_j = a_{d*j mod n}`); requires `gcd(d, n) = 1`.
    pub fn affine_image(&self, d: usize) -> Result<KaryString> {
        let n = self.len();
        if gcd(d % n, n) != 1 {
            return Err(Error::NotAUnit {
                multiplier: d,
                modulus: n,
            });
        }
        let mut symbols = Vec::new();
        affine_image_into(d % n, &self.symbols, &mut symbols);
        Ok(KaryString { symbols, k: self.k })
    }

    pub fn is_necklace(&self) -> bool {
        is_necklace_slice(&self.symbols)
    }

    /// Whether this necklace is the least member of its charm-bracelet class.
    pub fn is_charm(&self) -> bool {
        let mut scratch = Vec::new();
        is_charm_slice(&self.symbols, &units(self.len()), &mut scratch)
    }

    /// Whether this necklace is the least member of its bracelet class.
    pub fn is_bracelet(&self) -> bool {
        let mut scratch = Vec::new();
        is_bracelet_slice(&self.symbols, &mut scratch)
    }
}

impl fmt::Display for KaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Per-symbol multiplicities; the string length is their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() || counts.len() > MAX_ALPHABET {
            return Err(Error::InvalidInput(format!(
                "content must cover 1..={MAX_ALPHABET} symbols"
            )));
        }
        if counts.iter().sum::<usize>() == 0 {
            return Err(Error::InvalidInput("content sums to zero".into()));
        }
        Ok(Content { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn alphabet_size(&self) -> usize {
        self.counts.len()
    }

    /// Total length `n`.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// The affine index map `j -> shift + multiplier * j mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineMap {
    shift: usize,
    multiplier: usize,
    modulus: usize,
}

impl AffineMap {
    pub fn new(shift: usize, multiplier: usize, modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        let multiplier = multiplier % modulus;
        // gcd(0, 1) = 1 keeps the n = 1 identity map valid.
        if gcd(multiplier, modulus) != 1 {
            return Err(Error::NotAUnit {
                multiplier,
                modulus,
            });
        }
        Ok(AffineMap {
            shift: shift % modulus,
            multiplier,
            modulus,
        })
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn multiplier(&self) -> usize {
        self.multiplier
    }

    /// Applies the map to the indices of `s`: `b_j = a_{shift + multiplier*j}`.
    pub fn apply(&self, s: &KaryString) -> Result<KaryString> {
        let n = s.len();
        if n != self.modulus {
            return Err(Error::LengthMismatch {
                left: self.modulus,
                right: n,
            });
        }
        let symbols = (0..n)
            .map(|j| s.symbols[(self.shift + self.multiplier * j) % n])
            .collect();
        KaryString::new(symbols, s.k)
    }
}
