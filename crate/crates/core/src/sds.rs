//! Supplementary difference sets and their binary-pair correspondence.
//!
//! A pair of blocks `X, Y` of residues mod `v` with parameters
//! `(v; r, s; lambda)` is a supplementary difference set (SDS) when every
//! nonzero residue arises exactly `lambda` times in total as a difference
//! of two elements within `X` or within `Y`. Such an SDS corresponds to a
//! binary pair via `a_j = -1` iff `j` is in `X` (likewise `Y` for `b`), and
//! the pair is periodic Golay exactly when `v = 2(r + s - lambda)`.

use crate::error::{Error, Result};
use crate::sequences::{BinaryPair, BinarySequence};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupplementaryDifferenceSet {
    v: usize,
    x: Vec<usize>,
    y: Vec<usize>,
    lambda: usize,
}

impl SupplementaryDifferenceSet {
    /// Builds an SDS candidate, checking block structure and the counting
    /// identity `r(r-1) + s(s-1) = lambda*(v-1)`. The identity is necessary
    /// for [`verify`](Self::verify) but not sufficient; construction does
    /// not verify the per-residue difference counts.
    pub fn new(v: usize, mut x: Vec<usize>, mut y: Vec<usize>, lambda: usize) -> Result<Self> {
        if v == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        for (name, block) in [("X", &mut x), ("Y", &mut y)] {
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!(
                    "block {name} contains a duplicate residue"
                )));
            }
            if block.last().is_some_and(|&e| e >= v) {
                return Err(Error::InvalidInput(format!(
                    "block {name} contains a residue outside 0..{v}"
                )));
            }
        }
        let (r, s) = (x.len(), y.len());
        if r * r.saturating_sub(1) + s * s.saturating_sub(1) != lambda * (v - 1) {
            return Err(Error::InvalidInput(format!(
                "counting identity fails: {r}*{}+{s}*{} != {lambda}*{}",
                r.saturating_sub(1),
                s.saturating_sub(1),
                v - 1
            )));
        }
        Ok(SupplementaryDifferenceSet { v, x, y, lambda })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    /// `(v, r, s, lambda)` with `r = |X|`, `s = |Y|`.
    pub fn parameters(&self) -> (usize, usize, usize, usize) {
        (self.v, self.x.len(), self.y.len(), self.lambda)
    }

    /// Checks the defining property: every nonzero residue occurs exactly
    /// `lambda` times as an in-block difference.
    pub fn verify(&self) -> bool {
        let mut tally = vec![0usize; self.v];
        for block in [&self.x, &self.y] {
            for &e1 in block.iter() {
                for &e2 in block.iter() {
                    if e1 != e2 {
                        tally[(e1 + self.v - e2) % self.v] += 1;
                    }
                }
            }
        }
        tally[1..].iter().all(|&c| c == self.lambda)
    }

    /// The parameter condition `v = 2(r + s - lambda)` marking SDSs whose
    /// pairs are periodic Golay.
    pub fn satisfies_golay_condition(&self) -> bool {
        let (v, r, s, lambda) = self.parameters();
        2 * (r as i64 + s as i64 - lambda as i64) == v as i64
    }

    /// The binary pair with `-1` at the residues of each block.
    pub fn to_pair(&self) -> BinaryPair {
        let seq = |block: &[usize]| {
            let mut entries = vec![1i64; self.v];
            for &e in block {
                entries[e] = -1;
            }
            BinarySequence::new(entries).expect("entries are +-1")
        };
        BinaryPair::new(seq(&self.x), seq(&self.y)).expect("equal lengths")
    }
}

impl fmt::Display for SupplementaryDifferenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |block: &[usize]| {
            block
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "v={} lambda={}", self.v, self.lambda)?;
        writeln!(f, "X: {}", join(&self.x))?;
        writeln!(f, "Y: {}", join(&self.y))
    }
}

/// Recovers the SDS of a binary pair: blocks are the positions of `-1`,
/// and `lambda` comes from the counting identity. Fails if the identity
/// has no nonnegative integer solution for `lambda`.
pub fn pair_to_sds(pair: &BinaryPair) -> Result<SupplementaryDifferenceSet> {
    let v = pair.len();
    let positions = |seq: &BinarySequence| -> Vec<usize> {
        seq.entries()
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (e == -1).then_some(i))
            .collect()
    };
    let x = positions(pair.a());
    let y = positions(pair.b());
    let (r, s) = (x.len(), y.len());
    let total = r * r.saturating_sub(1) + s * s.saturating_sub(1);
    let lambda = if v == 1 {
        0
    } else {
        if total % (v - 1) != 0 {
            return Err(Error::InvalidInput(format!(
                "no integer lambda: {total} differences cannot spread over {} residues",
                v - 1
            )));
        }
        total / (v - 1)
    };
    SupplementaryDifferenceSet::new(v, x, y, lambda)
}

/// Parses a file of SDS records.
///
/// The format is keyed and token-based: `v` and `lambda` take one integer
/// each, `X` and `Y` take the residues that follow them. Brackets, braces,
/// commas, semicolons, `=`, and `:` are all treated as whitespace, and `#`
/// starts a line comment, so listings with mangled or transposed block
/// delimiters still parse; a new `v` key starts the next record.
pub fn parse_sds_file(text: &str) -> Result<Vec<SupplementaryDifferenceSet>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Target {
        None,
        V,
        Lambda,
        X,
        Y,
    }

    struct Partial {
        v: Option<usize>,
        lambda: Option<usize>,
        x: Vec<usize>,
        y: Vec<usize>,
    }

    impl Partial {
        fn empty() -> Self {
            Partial {
                v: None,
                lambda: None,
                x: Vec::new(),
                y: Vec::new(),
            }
        }

        fn is_empty(&self) -> bool {
            self.v.is_none() && self.lambda.is_none() && self.x.is_empty() && self.y.is_empty()
        }

        fn build(self, index: usize) -> Result<SupplementaryDifferenceSet> {
            let v = self
                .v
                .ok_or_else(|| Error::Parse(format!("record {index}: missing v")))?;
            let lambda = self
                .lambda
                .ok_or_else(|| Error::Parse(format!("record {index}: missing lambda")))?;
            SupplementaryDifferenceSet::new(v, self.x, self.y, lambda)
        }
    }

    let cleaned: String = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    let normalized: String = cleaned
        .chars()
        .map(|c| match c {
            '[' | ']' | '{' | '}' | '(' | ')' | ',' | ';' | '=' | ':' => ' ',
            other => other,
        })
        .collect();

    let mut records = Vec::new();
    let mut current = Partial::empty();
    let mut target = Target::None;
    for token in normalized.split_whitespace() {
        match token {
            "v" | "V" => {
                if current.v.is_some() {
                    records.push(std::mem::replace(&mut current, Partial::empty()));
                }
                target = Target::V;
            }
            "lambda" | "Lambda" | "LAMBDA" => target = Target::Lambda,
            "X" | "x" => target = Target::X,
            "Y" | "y" => target = Target::Y,
            _ => {
                let value: usize = token.parse().map_err(|e| {
                    Error::Parse(format!("unexpected token {token:?} in SDS file: {e}"))
                })?;
                match target {
                    Target::V => {
                        current.v = Some(value);
                        target = Target::None;
                    }
                    Target::Lambda => {
                        current.lambda = Some(value);
                        target = Target::None;
                    }
                    Target::X => current.x.push(value),
                    Target::Y => current.y.push(value),
                    Target::None => {
                        return Err(Error::Parse(format!(
                            "integer {value} appears before any key"
                        )))
                    }
                }
            }
        }
    }
    if !current.is_empty() {
        records.push(current);
    }
    records
        .into_iter()
        .enumerate()
        .map(|(i, partial)| partial.build(i + 1))
        .collect()
}

/// Serializes records in the format accepted by [`parse_sds_file`].
pub fn format_sds_file(records: &[SupplementaryDifferenceSet]) -> String {
    records
        .iter()
        .map(|sds| sds.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    type Sds = SupplementaryDifferenceSet;

    #[test]
    fn full_block_is_an_sds() {
        let sds = Sds::new(3, vec![0, 1, 2], vec![], 3).unwrap();
        assert!(sds.verify());
        assert!(!sds.satisfies_golay_condition());
    }

    #[test]
    fn two_block_example_and_perturbation() {
        // X = {0,1}, Y = {0,2} mod 5: differences 1, 4, 2, 3, each once.
        let good = Sds::new(5, vec![0, 1], vec![0, 2], 1).unwrap();
        assert!(good.verify());
        // Same block sizes, so the counting identity still holds, but the
        // differences now collide.
        let bad = Sds::new(5, vec![0, 1], vec![0, 1], 1).unwrap();
        assert!(!bad.verify());
    }

    #[test]
    fn constructor_rejections() {
        assert!(Sds::new(5, vec![0, 0], vec![], 0).is_err());
        assert!(Sds::new(5, vec![5], vec![], 0).is_err());
        assert!(Sds::new(5, vec![0, 1], vec![], 1).is_err());
        assert!(Sds::new(0, vec![], vec![], 0).is_err());
    }

    #[test]
    fn golay_condition_and_pair() {
        let sds = Sds::new(2, vec![0], vec![], 0).unwrap();
        assert!(sds.verify());
        assert!(sds.satisfies_golay_condition());
        let pair = sds.to_pair();
        assert_eq!(pair.a().to_string(), "-+");
        assert_eq!(pair.b().to_string(), "++");
        assert!(pair.is_periodic_golay());
    }

    #[test]
    fn to_pair_places_minus_on_block_elements() {
        let sds = Sds::new(4, vec![0], vec![], 0).unwrap();
        assert_eq!(sds.to_pair().a().entries(), &[-1, 1, 1, 1]);
    }

    #[test]
    fn pair_round_trip() {
        for sds in [
            Sds::new(5, vec![0, 1], vec![0, 2], 1).unwrap(),
            Sds::new(3, vec![0, 1, 2], vec![], 3).unwrap(),
            Sds::new(2, vec![0], vec![], 0).unwrap(),
        ] {
            assert_eq!(pair_to_sds(&sds.to_pair()).unwrap(), sds);
        }
    }

    #[test]
    fn verify_matches_independent_tally() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5d5);
        let mut checked = 0;
        while checked < 200 {
            let v = rng.random_range(2..=16);
            let block = |rng: &mut ChaCha8Rng| -> Vec<usize> {
                (0..v).filter(|_| rng.random_bool(0.4)).collect()
            };
            let (x, y) = (block(&mut rng), block(&mut rng));
            let total = x.len() * x.len().saturating_sub(1)
                + y.len() * y.len().saturating_sub(1);
            if total % (v - 1) != 0 {
                continue;
            }
            let sds = Sds::new(v, x.clone(), y.clone(), total / (v - 1)).unwrap();
            let oracle = (1..v).all(|g| {
                let count = |block: &[usize]| {
                    block
                        .iter()
                        .flat_map(|&e1| block.iter().map(move |&e2| (e1, e2)))
                        .filter(|&(e1, e2)| e1 != e2 && (e1 + v - e2) % v == g)
                        .count()
                };
                count(&x) + count(&y) == total / (v - 1)
            });
            assert_eq!(sds.verify(), oracle, "v={v} x={x:?} y={y:?}");
            checked += 1;
        }
    }

    #[test]
    fn parser_tolerates_mangled_delimiters() {
        let text = "\
# two records, the second with transposed brackets
v=5 lambda=1
X: [0, 1]
Y: [0, 2]

v = 5, lambda = 1
X [0 1
Y 0] [2
";
        let records = parse_sds_file(text).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0], records[1]);
        assert_eq!(records[0].x(), &[0, 1]);
        assert_eq!(records[0].y(), &[0, 2]);
    }

    #[test]
    fn parser_rejects_junk_and_incomplete_records() {
        assert!(parse_sds_file("v=5 lambda=1 X: 0 1 Y: 0 spam").is_err());
        assert!(parse_sds_file("lambda=1 X: 0 1").is_err());
        assert!(parse_sds_file("7 v=5").is_err());
    }

    #[test]
    fn format_round_trips() {
        let records = vec![
            Sds::new(5, vec![0, 1], vec![0, 2], 1).unwrap(),
            Sds::new(3, vec![0, 1, 2], vec![], 3).unwrap(),
        ];
        let text = format_sds_file(&records);
        assert_eq!(parse_sds_file(&text).unwrap(), records);
    }
}
