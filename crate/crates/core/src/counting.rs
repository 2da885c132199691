//! Closed-form counting of charm bracelets.
//!
//! The count for length `n` over `k` symbols is
//!
//! ```text
//! CB(n, k) = 1/(n phi(n)) * sum over t in [0, n), units j of k^c(j, t)
//! ```
//!
//! where `c(j, t)` is the number of cycles of the index permutation
//! `u -> j*u + t mod n`, computed here through repetition orders `M(j, L)`
//! in exact rational arithmetic. All accumulation is in big integers and
//! the final division is checked, so an implementation error can never
//! surface as a silently wrong count.

use crate::error::{Error, Result};
use crate::words::{gcd, totient, units};
use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigRational, BigUint, One, Zero};

/// `M(j, L)`: the least `m >= 1` with `1 + j + ... + j^(m-1) = 0 mod L`.
///
/// For a unit `j` and any `L`, the partial sum over `L * ord_L(j)` terms is
/// `L` times a full-period sum, hence `0 mod L`; so `M(j, L) <= L^2`
/// whenever it is defined. The iteration cap therefore only trips for
/// `(j, L)` outside that domain (for example `j = 0 mod L` with `L > 1`,
/// where the partial sums are stuck at 1).
pub fn repetition_order(j: usize, l: usize) -> Result<usize> {
    if l == 0 {
        return Err(Error::InvalidInput("repetition order needs L >= 1".into()));
    }
    if l == 1 {
        return Ok(1);
    }
    let j = j % l;
    let mut sum = 0usize;
    let mut power = 1usize;
    for m in 1..=l * l {
        sum = (sum + power) % l;
        if sum == 0 {
            return Ok(m);
        }
        power = (power * j) % l;
    }
    Err(Error::Internal(format!(
        "no repetition order for j={j} mod L={l} within L^2 iterations; \
         (j, L) is outside the counting formula's domain"
    )))
}

/// `c(j, t)`: the number of cycles of `u -> j*u + t mod n`, evaluated as
/// `sum over u in [0, n) of 1 / M(j, n / gcd(n, u*(j-1) + t))` in exact
/// rationals. Errors if `j` is not a unit mod `n` or the sum fails to be an
/// integer (which would indicate a bug, not bad input).
pub fn cycle_count(j: usize, t: usize, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    if gcd(j % n, n) != 1 && n > 1 {
        return Err(Error::NotAUnit {
            multiplier: j,
            modulus: n,
        });
    }
    let t = t % n;
    let j = j % n;
    // j - 1 reduced mod n, kept nonnegative (j = 0 only occurs when n = 1).
    let j_minus_1 = (j + n - 1) % n;
    let mut sum: BigRational = Ratio::zero();
    for u in 0..n {
        let l = n / gcd(n, (u * j_minus_1 + t) % n);
        let m = repetition_order(j, l)?;
        sum += Ratio::new(BigInt::one(), BigInt::from(m));
    }
    if !sum.is_integer() {
        return Err(Error::Internal(format!(
            "cycle count c({j}, {t}) mod {n} is not an integer: {sum}"
        )));
    }
    let value = sum.to_integer();
    usize::try_from(&value).map_err(|_| {
        Error::Internal(format!("cycle count c({j}, {t}) mod {n} overflows usize"))
    })
}

/// The full table of `c(j, t)` over units `j` and shifts `t` for one `n`.
#[derive(Debug, Clone)]
pub struct CycleCountTable {
    n: usize,
    units: Vec<usize>,
    // table[ui][t] = c(units[ui], t)
    table: Vec<Vec<usize>>,
}

impl CycleCountTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        let units = if n == 1 { vec![1] } else { units(n) };
        let mut table = Vec::with_capacity(units.len());
        for &j in &units {
            let row: Vec<usize> = (0..n)
                .map(|t| cycle_count(j, t, n))
                .collect::<Result<_>>()?;
            table.push(row);
        }
        Ok(CycleCountTable { n, units, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn get(&self, j: usize, t: usize) -> Option<usize> {
        let ui = self.units.iter().position(|&u| u == j)?;
        self.table[ui].get(t).copied()
    }

    fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.iter().map(|r| r.as_slice())
    }
}

/// Exact number of charm-bracelet classes of length `n` over `k` symbols.
///
/// `n = 1` is special-cased to `k` (each symbol is its own class); the
/// formula's unit sum is empty there. The divisibility of the double sum by
/// `n * phi(n)` is asserted on every call.
pub fn count_charm_bracelets(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    if k == 0 {
        return Err(Error::InvalidInput("alphabet size must be positive".into()));
    }
    if n == 1 {
        return Ok(BigUint::from(k));
    }
    let table = CycleCountTable::new(n)?;
    let base = BigUint::from(k);
    let mut total = BigUint::zero();
    for row in table.rows() {
        for &c in row {
            total += base.pow(c as u32);
        }
    }
    let divisor = BigUint::from(n * totient(n));
    if (&total % &divisor) != BigUint::zero() {
        return Err(Error::Internal(format!(
            "charm-bracelet sum for n={n}, k={k} is not divisible by n*phi(n)"
        )));
    }
    Ok(total / divisor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_charm_bracelets, ClassKind};

    /// Cycles of the permutation u -> j*u + t mod n, counted directly.
    fn permutation_cycles(j: usize, t: usize, n: usize) -> usize {
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut u = start;
            while !seen[u] {
                seen[u] = true;
                u = (j * u + t) % n;
            }
        }
        cycles
    }

    #[test]
    fn repetition_order_examples() {
        for j in [0, 1, 2, 5, 100] {
            assert_eq!(repetition_order(j, 1).unwrap(), 1);
        }
        for l in 1..=12 {
            assert_eq!(repetition_order(1, l).unwrap(), l);
        }
        assert_eq!(repetition_order(2, 7).unwrap(), 3);
    }

    #[test]
    fn repetition_order_rejects_stuck_sums() {
        // j = 0 mod L leaves every partial sum at 1.
        assert!(repetition_order(0, 5).is_err());
        assert!(repetition_order(10, 5).is_err());
    }

    #[test]
    fn cycle_count_examples() {
        for n in 1..=10 {
            assert_eq!(cycle_count(1, 0, n).unwrap(), n);
        }
        assert_eq!(cycle_count(1, 1, 5).unwrap(), 1);
        assert_eq!(cycle_count(3, 0, 5).unwrap(), 2);
    }

    #[test]
    fn cycle_count_matches_permutation_cycles() {
        for n in 1..=12 {
            let js = if n == 1 { vec![1] } else { units(n) };
            for j in js {
                for t in 0..n {
                    assert_eq!(
                        cycle_count(j, t, n).unwrap(),
                        permutation_cycles(j, t, n),
                        "j={j} t={t} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn cycle_count_rejects_non_units() {
        assert!(matches!(
            cycle_count(2, 0, 6),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn table_invariants() {
        for n in 2..=10 {
            let table = CycleCountTable::new(n).unwrap();
            assert_eq!(table.get(1, 0), Some(n));
            for &j in table.units() {
                for t in 0..n {
                    assert!(table.get(j, t).unwrap() >= 1);
                }
            }
        }
    }

    #[test]
    fn count_single_position_is_alphabet_size() {
        assert_eq!(count_charm_bracelets(1, 5).unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn count_matches_generation() {
        for n in 1..=10 {
            for k in 2..=3 {
                let counted = count_charm_bracelets(n, k).unwrap();
                let generated = generate_charm_bracelets(n, k, |_| ()).unwrap();
                assert_eq!(counted, BigUint::from(generated), "n={n} k={k}");
            }
        }
        assert_eq!(
            count_charm_bracelets(5, 4).unwrap(),
            BigUint::from(generate_charm_bracelets(5, 4, |_| ()).unwrap())
        );
    }

    #[test]
    fn count_is_monotone_in_alphabet_size() {
        for n in 1..=8 {
            for k in 1..=4 {
                assert!(
                    count_charm_bracelets(n, k).unwrap()
                        <= count_charm_bracelets(n, k + 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn count_below_bracelets_below_necklaces() {
        use crate::generate::generate_representatives;
        for n in 2..=9 {
            let charm = count_charm_bracelets(n, 2).unwrap();
            let bracelets =
                generate_representatives(n, 2, ClassKind::Bracelet, |_| ()).unwrap();
            let necklaces =
                generate_representatives(n, 2, ClassKind::Necklace, |_| ()).unwrap();
            assert!(charm <= BigUint::from(bracelets));
            assert!(bracelets <= necklaces);
        }
    }

    #[test]
    fn count_rejects_degenerate_parameters() {
        assert!(count_charm_bracelets(0, 2).is_err());
        assert!(count_charm_bracelets(3, 0).is_err());
    }
}
