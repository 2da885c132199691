//! Equivalence of binary pairs under the periodic-Golay-preserving group.
//!
//! The group is generated by three families: independent cyclic shifts of
//! either sequence, independent reversals of either sequence, and a
//! simultaneous multiplier `x_i -> x_{k*i mod v}` applied to both (for a
//! unit `k`). Optionally, per-sequence negation and swapping the pair can
//! be adjoined; both preserve the periodic-Golay property but are excluded
//! from the default group.
//!
//! Canonical forms compare entries numerically, so `-1 < +1`; in sign
//! notation that is `'-' < '+'`.

use crate::error::{Error, Result};
use crate::sequences::{BinaryPair, BinarySequence};
use crate::words::{gcd, least_rotation, units};

/// Modular inverse for `gcd(a, m) = 1`, via extended Euclid. `m = 1` maps
/// everything to 0.
fn mod_inverse(a: usize, m: usize) -> usize {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a as i64 % m as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r.abs(), 1, "inverse of non-unit");
    old_s.rem_euclid(m as i64) as usize
}

/// One element of the transform group, applied in the fixed order:
/// simultaneous multiplier, then per-side reversal, then per-side shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairTransform {
    modulus: usize,
    multiplier: usize,
    reverse_a: bool,
    shift_a: usize,
    reverse_b: bool,
    shift_b: usize,
}

impl PairTransform {
    pub fn new(
        modulus: usize,
        multiplier: usize,
        reverse_a: bool,
        shift_a: usize,
        reverse_b: bool,
        shift_b: usize,
    ) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        let multiplier = multiplier % modulus;
        if gcd(multiplier, modulus) != 1 {
            return Err(Error::NotAUnit {
                multiplier,
                modulus,
            });
        }
        Ok(PairTransform {
            modulus,
            multiplier,
            reverse_a,
            shift_a: shift_a % modulus,
            reverse_b,
            shift_b: shift_b % modulus,
        })
    }

    pub fn identity(modulus: usize) -> Result<Self> {
        PairTransform::new(modulus, 1, false, 0, false, 0)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    fn apply_side(&self, xs: &[i64], reverse: bool, shift: usize) -> Vec<i64> {
        let v = self.modulus;
        let k = self.multiplier;
        let mut out: Vec<i64> = (0..v).map(|i| xs[(k * i) % v]).collect();
        if reverse {
            out.reverse();
        }
        out.rotate_left(shift);
        out
    }

    /// Applies the transform; errors if the pair length does not match the
    /// transform's modulus.
    pub fn apply(&self, pair: &BinaryPair) -> Result<BinaryPair> {
        if pair.len() != self.modulus {
            return Err(Error::LengthMismatch {
                left: self.modulus,
                right: pair.len(),
            });
        }
        let a = self.apply_side(pair.a().entries(), self.reverse_a, self.shift_a);
        let b = self.apply_side(pair.b().entries(), self.reverse_b, self.shift_b);
        BinaryPair::new(BinarySequence::new(a)?, BinarySequence::new(b)?)
    }

    /// Per-side affine index form: the side's output is
    /// `out[i] = in[(alpha*i + beta) mod v]`.
    fn to_affine(&self) -> ((usize, usize), (usize, usize)) {
        let v = self.modulus;
        let k = self.multiplier;
        let side = |reverse: bool, shift: usize| -> (usize, usize) {
            if reverse {
                (((v - k) % v), (k * (v - 1 - shift)) % v)
            } else {
                (k, (k * shift) % v)
            }
        };
        (
            side(self.reverse_a, self.shift_a),
            side(self.reverse_b, self.shift_b),
        )
    }

    fn from_affine(
        v: usize,
        (alpha_a, beta_a): (usize, usize),
        (alpha_b, beta_b): (usize, usize),
    ) -> Result<Self> {
        // Parameterize with reverse_a = false, so the multiplier is alpha_a.
        let k = alpha_a;
        let k_inv = mod_inverse(k, v);
        let shift_a = (k_inv * beta_a) % v;
        let (reverse_b, shift_b) = if alpha_b == k {
            (false, (k_inv * beta_b) % v)
        } else if alpha_b == (v - k) % v {
            (true, v - 1 - (k_inv * beta_b) % v)
        } else {
            return Err(Error::Internal(
                "affine sides disagree on the multiplier magnitude".into(),
            ));
        };
        PairTransform::new(v, k, false, shift_a, reverse_b, shift_b)
    }

    /// The composite transform equal to applying `self` first, then `next`.
    pub fn then(&self, next: &PairTransform) -> Result<PairTransform> {
        if self.modulus != next.modulus {
            return Err(Error::LengthMismatch {
                left: self.modulus,
                right: next.modulus,
            });
        }
        let v = self.modulus;
        // Gathers compose contravariantly: (t2 of t1)[i] = in[f1(f2(i))].
        let comp = |(a1, b1): (usize, usize), (a2, b2): (usize, usize)| {
            ((a1 * a2) % v, (a1 * b2 + b1) % v)
        };
        let (fa1, fb1) = self.to_affine();
        let (fa2, fb2) = next.to_affine();
        PairTransform::from_affine(v, comp(fa1, fa2), comp(fb1, fb2))
    }

    /// The transform undoing `self`.
    pub fn inverse(&self) -> PairTransform {
        let v = self.modulus;
        let inv = |(alpha, beta): (usize, usize)| {
            let ai = mod_inverse(alpha, v);
            (ai, (v - (ai * beta) % v) % v)
        };
        let (fa, fb) = self.to_affine();
        PairTransform::from_affine(v, inv(fa), inv(fb))
            .expect("inverse of a valid transform is valid")
    }
}

/// Which optional symmetries to adjoin to the three core families.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EquivalenceGroup {
    /// Allow negating either sequence independently.
    pub allow_negation: bool,
    /// Allow exchanging the two sequences.
    pub allow_swap: bool,
}

fn min_rotation_of(xs: &[i64]) -> Vec<i64> {
    let t = least_rotation(xs);
    let mut out = xs.to_vec();
    out.rotate_left(t);
    out
}

impl EquivalenceGroup {
    /// The three core families only.
    pub fn standard() -> Self {
        EquivalenceGroup::default()
    }

    /// Core families plus per-side negation and pair swap.
    pub fn extended() -> Self {
        EquivalenceGroup {
            allow_negation: true,
            allow_swap: true,
        }
    }

    /// Least sequence reachable from `xs` by rotations, reversal, and
    /// (optionally) negation.
    fn side_min(&self, xs: &[i64]) -> Vec<i64> {
        let mut best = min_rotation_of(xs);
        let mut consider = |candidate: &[i64]| {
            let m = min_rotation_of(candidate);
            if m < best {
                best = m;
            }
        };
        let reversed: Vec<i64> = xs.iter().rev().copied().collect();
        consider(&reversed);
        if self.allow_negation {
            let negated: Vec<i64> = xs.iter().map(|&e| -e).collect();
            let negated_rev: Vec<i64> = negated.iter().rev().copied().collect();
            consider(&negated);
            consider(&negated_rev);
        }
        best
    }

    /// The lexicographically least pair in the orbit of `pair`, comparing
    /// the first sequence and then the second, entries numerically.
    ///
    /// The shift/reversal/negation choices of the two sides are independent
    /// once the shared multiplier is fixed, so the orbit minimum decomposes
    /// as the per-side minimum for the best multiplier; the scan is
    /// O(phi(v) * v) instead of the group order 4 * v^2 * phi(v).
    pub fn canonical_form(&self, pair: &BinaryPair) -> BinaryPair {
        let v = pair.len();
        let multipliers = if v == 1 { vec![1] } else { units(v) };
        let mut best: Option<(Vec<i64>, Vec<i64>)> = None;
        for &k in &multipliers {
            let da: Vec<i64> = (0..v).map(|i| pair.a().entries()[(k * i) % v]).collect();
            let db: Vec<i64> = (0..v).map(|i| pair.b().entries()[(k * i) % v]).collect();
            let mut arrangements = vec![(self.side_min(&da), self.side_min(&db))];
            if self.allow_swap {
                let (fst, snd) = arrangements[0].clone();
                arrangements.push((snd, fst));
            }
            for cand in arrangements {
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let (a, b) = best.expect("at least one multiplier");
        BinaryPair::new(
            BinarySequence::new(a).expect("orbit preserves the alphabet"),
            BinarySequence::new(b).expect("orbit preserves the alphabet"),
        )
        .expect("orbit preserves lengths")
    }

    /// Whether the pairs lie in the same orbit; errors on length mismatch.
    pub fn are_equivalent(&self, p: &BinaryPair, q: &BinaryPair) -> Result<bool> {
        if p.len() != q.len() {
            return Err(Error::LengthMismatch {
                left: p.len(),
                right: q.len(),
            });
        }
        Ok(self.canonical_form(p) == self.canonical_form(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn pair(a: &str, b: &str) -> BinaryPair {
        BinaryPair::new(a.parse().unwrap(), b.parse().unwrap()).unwrap()
    }

    fn random_pair(rng: &mut ChaCha8Rng, v: usize) -> BinaryPair {
        let seq = |rng: &mut ChaCha8Rng| {
            BinarySequence::new((0..v).map(|_| *[-1, 1].choose(rng).unwrap()).collect()).unwrap()
        };
        BinaryPair::new(seq(rng), seq(rng)).unwrap()
    }

    fn random_transform(rng: &mut ChaCha8Rng, v: usize) -> PairTransform {
        let us = if v == 1 { vec![1] } else { units(v) };
        PairTransform::new(
            v,
            *us.choose(rng).unwrap(),
            rng.random(),
            rng.random_range(0..v),
            rng.random(),
            rng.random_range(0..v),
        )
        .unwrap()
    }

    #[test]
    fn identity_leaves_pairs_unchanged() {
        let p = pair("+-+-+", "--+++");
        let id = PairTransform::identity(5).unwrap();
        assert_eq!(id.apply(&p).unwrap(), p);
    }

    #[test]
    fn apply_hand_example() {
        // multiplier 3 on [+,-,+,+] gathers indices 0,3,2,1 -> [+,+,+,-];
        // reversal gives [-,+,+,+]; shift 1 gives [+,+,+,-].
        // On B = [-,-,+,-]: gather -> [-,-,+,-]; shift 2 -> [+,-,-,-].
        let p = pair("+-++", "--+-");
        let t = PairTransform::new(4, 3, true, 1, false, 2).unwrap();
        assert_eq!(t.apply(&p).unwrap(), pair("+++-", "+---"));
    }

    #[test]
    fn rejects_non_unit_multipliers() {
        assert!(PairTransform::new(6, 3, false, 0, false, 0).is_err());
    }

    #[test]
    fn group_axioms_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc09e);
        for _ in 0..300 {
            let v = rng.random_range(1..=12);
            let p = random_pair(&mut rng, v);
            let t1 = random_transform(&mut rng, v);
            let t2 = random_transform(&mut rng, v);
            let sequential = t2.apply(&t1.apply(&p).unwrap()).unwrap();
            let composite = t1.then(&t2).unwrap().apply(&p).unwrap();
            assert_eq!(sequential, composite, "v={v}");
            let undone = t1.inverse().apply(&t1.apply(&p).unwrap()).unwrap();
            assert_eq!(undone, p, "v={v}");
        }
    }

    #[test]
    fn transforms_preserve_periodic_golay() {
        let p = pair("+++-", "++-+");
        assert!(p.is_periodic_golay());
        let mut rng = ChaCha8Rng::seed_from_u64(0x901a);
        for _ in 0..100 {
            let t = random_transform(&mut rng, 4);
            assert!(t.apply(&p).unwrap().is_periodic_golay());
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1d31);
        let group = EquivalenceGroup::standard();
        for _ in 0..200 {
            let v = rng.random_range(1..=10);
            let p = random_pair(&mut rng, v);
            let c = group.canonical_form(&p);
            assert_eq!(group.canonical_form(&c), c);
            let t = random_transform(&mut rng, v);
            assert_eq!(group.canonical_form(&t.apply(&p).unwrap()), c);
            // The canonical form is itself in the orbit's comparison order.
            assert!(
                (c.a().entries(), c.b().entries()) <= (p.a().entries(), p.b().entries())
            );
        }
    }

    #[test]
    fn canonical_order_is_numeric() {
        let p = pair("+++-", "++++");
        let c = EquivalenceGroup::standard().canonical_form(&p);
        assert_eq!(c, pair("-+++", "++++"));
    }

    #[test]
    fn negation_only_merges_classes_when_allowed() {
        let p = pair("++", "+-");
        let negated_a = pair("--", "+-");
        let standard = EquivalenceGroup::standard();
        let with_negation = EquivalenceGroup {
            allow_negation: true,
            allow_swap: false,
        };
        assert!(!standard.are_equivalent(&p, &negated_a).unwrap());
        assert!(with_negation.are_equivalent(&p, &negated_a).unwrap());
    }

    #[test]
    fn swap_only_merges_classes_when_allowed() {
        let p = pair("++", "+-");
        let swapped = pair("+-", "++");
        let standard = EquivalenceGroup::standard();
        let with_swap = EquivalenceGroup {
            allow_negation: false,
            allow_swap: true,
        };
        assert!(!standard.are_equivalent(&p, &swapped).unwrap());
        assert!(with_swap.are_equivalent(&p, &swapped).unwrap());
    }

    #[test]
    fn equivalence_needs_equal_lengths() {
        let p = pair("++", "+-");
        let q = pair("+++", "+-+");
        assert!(EquivalenceGroup::standard().are_equivalent(&p, &q).is_err());
    }
}
