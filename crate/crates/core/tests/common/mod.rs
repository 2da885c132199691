//! Randomized suites shared by the property tests and the acceptance
//! gate. Each suite runs a caller-chosen number of cases from a fixed
//! seed and panics on the first violation.

use charms::equiv::{EquivalenceGroup, PairTransform};
use charms::sequences::{paf, psd, BinaryPair, BinarySequence};
use charms::words::{units, AffineMap, KaryString};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn random_pair(rng: &mut ChaCha8Rng, v: usize) -> BinaryPair {
    let seq = |rng: &mut ChaCha8Rng| {
        BinarySequence::new((0..v).map(|_| *[-1, 1].choose(rng).unwrap()).collect()).unwrap()
    };
    BinaryPair::new(seq(rng), seq(rng)).unwrap()
}

pub fn random_transform(rng: &mut ChaCha8Rng, v: usize) -> PairTransform {
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

fn negated(seq: &BinarySequence) -> BinarySequence {
    BinarySequence::new(seq.entries().iter().map(|&e| -e).collect()).unwrap()
}

/// PAF(s) = PAF(v - s) for every shift, and PAF(0) is the energy.
pub fn paf_symmetry_suite(cases: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7061_6631);
    for case in 0..cases {
        let v = rng.random_range(1..=64);
        let xs: Vec<i64> = (0..v).map(|_| rng.random_range(-3..=3)).collect();
        let profile = paf(&xs);
        let values = profile.values();
        assert_eq!(values.len(), v, "case {case}: profile length");
        let energy: i64 = xs.iter().map(|&e| e * e).sum();
        assert_eq!(profile.at_zero(), energy, "case {case}: PAF(0)");
        for s in 0..v {
            assert_eq!(
                values[s],
                values[(v - s) % v],
                "case {case}: v={v} s={s}"
            );
        }
    }
}

/// PSD(s) equals the DFT of the PAF profile at s, computed here with an
/// independent summation.
pub fn wiener_khinchin_suite(cases: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7073_6432);
    for case in 0..cases {
        let v = rng.random_range(1..=48);
        let xs: Vec<i64> = (0..v).map(|_| rng.random_range(-3..=3)).collect();
        let spectrum = psd(&xs);
        let profile = paf(&xs);
        for s in 0..v {
            let mut re = 0.0;
            let mut im = 0.0;
            for (r, &p) in profile.values().iter().enumerate() {
                let angle = 2.0 * std::f64::consts::PI * ((r * s) % v) as f64 / v as f64;
                re += p as f64 * angle.cos();
                im += p as f64 * angle.sin();
            }
            assert!(
                im.abs() < 1e-6 * (v as f64),
                "case {case}: imaginary residue at v={v} s={s}"
            );
            let got = spectrum.values()[s];
            assert!(
                (got - re).abs() < 1e-6 * (v as f64).max(re.abs()),
                "case {case}: v={v} s={s}: {got} vs {re}"
            );
        }
    }
}

/// Applying (s2, m2) then (s1, m1) to indices equals the single map
/// (s2 + m2 * s1, m2 * m1), and the identity map fixes every string.
pub fn affine_homomorphism_suite(cases: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6166_6633);
    for case in 0..cases {
        let n = rng.random_range(1..=24);
        let k = rng.random_range(2..=4);
        let symbols: Vec<u8> = (0..n).map(|_| rng.random_range(0..k) as u8).collect();
        let word = KaryString::new(symbols, k).unwrap();
        let us = if n == 1 { vec![1] } else { units(n) };
        let (m1, m2) = (*us.choose(&mut rng).unwrap(), *us.choose(&mut rng).unwrap());
        let (s1, s2) = (rng.random_range(0..n), rng.random_range(0..n));
        let d1 = AffineMap::new(s1, m1, n).unwrap();
        let d2 = AffineMap::new(s2, m2, n).unwrap();
        let composed = AffineMap::new((s2 + m2 * s1) % n, (m2 * m1) % n, n).unwrap();
        assert_eq!(
            d1.apply(&d2.apply(&word).unwrap()).unwrap(),
            composed.apply(&word).unwrap(),
            "case {case}: n={n} maps ({s1},{m1}) after ({s2},{m2})"
        );
        let identity = AffineMap::new(0, 1, n).unwrap();
        assert_eq!(identity.apply(&word).unwrap(), word, "case {case}: identity");
    }
}

/// Transform composition matches sequential application, inverses undo,
/// and the identity transform fixes every pair.
pub fn transform_group_suite(cases: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7472_6634);
    for case in 0..cases {
        let v = rng.random_range(1..=12);
        let p = random_pair(&mut rng, v);
        let t1 = random_transform(&mut rng, v);
        let t2 = random_transform(&mut rng, v);
        assert_eq!(
            t1.then(&t2).unwrap().apply(&p).unwrap(),
            t2.apply(&t1.apply(&p).unwrap()).unwrap(),
            "case {case}: composition at v={v}"
        );
        assert_eq!(
            t1.inverse().apply(&t1.apply(&p).unwrap()).unwrap(),
            p,
            "case {case}: inverse at v={v}"
        );
        assert_eq!(
            PairTransform::identity(v).unwrap().apply(&p).unwrap(),
            p,
            "case {case}: identity at v={v}"
        );
    }
}

/// Canonical forms are idempotent and constant on orbits, for both the
/// default group and the one extended by negation and swap.
pub fn canonical_form_suite(cases: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6361_6e35);
    let standard = EquivalenceGroup::standard();
    let extended = EquivalenceGroup::extended();
    for case in 0..cases {
        let v = rng.random_range(1..=10);
        let p = random_pair(&mut rng, v);
        let t = random_transform(&mut rng, v);
        let moved = t.apply(&p).unwrap();
        for group in [&standard, &extended] {
            let canon = group.canonical_form(&p);
            assert_eq!(
                group.canonical_form(&canon),
                canon,
                "case {case}: idempotence at v={v}"
            );
            assert_eq!(
                group.canonical_form(&moved),
                canon,
                "case {case}: invariance at v={v}"
            );
            assert!(group.are_equivalent(&p, &moved).unwrap());
        }
        // Negation and swap only preserve the extended canonical form.
        let mut warped = moved.clone();
        if rng.random() {
            warped = BinaryPair::new(negated(warped.a()), warped.b().clone()).unwrap();
        }
        if rng.random() {
            warped = BinaryPair::new(warped.a().clone(), negated(warped.b())).unwrap();
        }
        if rng.random() {
            warped = BinaryPair::new(warped.b().clone(), warped.a().clone()).unwrap();
        }
        assert_eq!(
            extended.canonical_form(&warped),
            extended.canonical_form(&p),
            "case {case}: extended invariance at v={v}"
        );
        assert!(extended.are_equivalent(&p, &warped).unwrap());
    }
}
