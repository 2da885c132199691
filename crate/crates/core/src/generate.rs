//! Exhaustive generation of necklaces, bracelets, and charm bracelets.
//!
//! The engine is the classic recursive prenecklace scheme: strings are built
//! one symbol at a time while tracking the period `p` of the prefix, and a
//! completed string is a necklace exactly when `n mod p == 0`. Bracelet and
//! charm-bracelet representatives are obtained by filtering the generated
//! necklaces with the corresponding membership test; the extra cost is
//! amortized against the ratio of class sizes, so the whole enumeration
//! stays within a constant factor of the output size in practice.

use crate::error::{Error, Result};
use crate::words::{is_bracelet_slice, is_charm_slice, units, Content};
use std::ops::ControlFlow;

/// Which equivalence classes the generator should emit representatives of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Necklace,
    Bracelet,
    CharmBracelet,
}

impl std::str::FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "necklace" => Ok(ClassKind::Necklace),
            "bracelet" => Ok(ClassKind::Bracelet),
            "charm" | "charm-bracelet" => Ok(ClassKind::CharmBracelet),
            other => Err(Error::Parse(format!(
                "unknown class kind {other:?} (expected necklace, bracelet, or charm)"
            ))),
        }
    }
}

struct Engine<'a, F>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    n: usize,
    k: usize,
    // 1-based working array; a[0] = 0 is the sentinel the recursion
    // compares against at t = 1.
    a: Vec<u8>,
    kind: ClassKind,
    units: Vec<usize>,
    scratch: Vec<u8>,
    // Remaining multiplicity per symbol; empty when content is free.
    avail: Vec<usize>,
    emitted: u64,
    visit: &'a mut F,
}

impl<F> Engine<'_, F>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    fn leaf(&mut self, p: usize) -> ControlFlow<()> {
        if self.n % p != 0 {
            return ControlFlow::Continue(());
        }
        let accept = match self.kind {
            ClassKind::Necklace => true,
            ClassKind::Bracelet => is_bracelet_slice(&self.a[1..=self.n], &mut self.scratch),
            ClassKind::CharmBracelet => {
                is_charm_slice(&self.a[1..=self.n], &self.units, &mut self.scratch)
            }
        };
        if accept {
            self.emitted += 1;
            return (self.visit)(&self.a[1..=self.n]);
        }
        ControlFlow::Continue(())
    }

    fn recurse(&mut self, t: usize, p: usize) -> ControlFlow<()> {
        if t > self.n {
            return self.leaf(p);
        }
        let low = self.a[t - p];
        for i in low..self.k as u8 {
            if !self.avail.is_empty() {
                if self.avail[i as usize] == 0 {
                    continue;
                }
                self.avail[i as usize] -= 1;
            }
            self.a[t] = i;
            let next_p = if i == low { p } else { t };
            let flow = self.recurse(t + 1, next_p);
            if !self.avail.is_empty() {
                self.avail[i as usize] += 1;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn run(&mut self) -> ControlFlow<()> {
        self.recurse(1, 1)
    }
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    if k == 0 || k > crate::words::MAX_ALPHABET {
        return Err(Error::InvalidInput(format!(
            "alphabet size {k} out of range 1..={}",
            crate::words::MAX_ALPHABET
        )));
    }
    Ok(())
}

/// Emits every class representative of the given kind for length `n` over
/// `k` symbols, in lexicographic order; the visitor may stop the enumeration
/// early. Returns how many representatives were emitted.
pub fn generate_controlled<F>(n: usize, k: usize, kind: ClassKind, mut visit: F) -> Result<u64>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    check_params(n, k)?;
    let mut engine = Engine {
        n,
        k,
        a: vec![0; n + 1],
        kind,
        units: units(n),
        scratch: Vec::with_capacity(n),
        avail: Vec::new(),
        emitted: 0,
        visit: &mut visit,
    };
    let _ = engine.run();
    Ok(engine.emitted)
}

/// [`generate_controlled`] without early exit.
pub fn generate_representatives<F>(n: usize, k: usize, kind: ClassKind, mut visit: F) -> Result<u64>
where
    F: FnMut(&[u8]),
{
    generate_controlled(n, k, kind, |w| {
        visit(w);
        ControlFlow::Continue(())
    })
}

pub fn generate_necklaces<F: FnMut(&[u8])>(n: usize, k: usize, visit: F) -> Result<u64> {
    generate_representatives(n, k, ClassKind::Necklace, visit)
}

pub fn generate_bracelets<F: FnMut(&[u8])>(n: usize, k: usize, visit: F) -> Result<u64> {
    generate_representatives(n, k, ClassKind::Bracelet, visit)
}

pub fn generate_charm_bracelets<F: FnMut(&[u8])>(n: usize, k: usize, visit: F) -> Result<u64> {
    generate_representatives(n, k, ClassKind::CharmBracelet, visit)
}

/// Emits representatives whose symbol multiset equals `content`, with early
/// exit. The length and alphabet size are implied by the content.
pub fn generate_fixed_content_controlled<F>(
    content: &Content,
    kind: ClassKind,
    mut visit: F,
) -> Result<u64>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    let n = content.total();
    let k = content.alphabet_size();
    check_params(n, k)?;
    let mut engine = Engine {
        n,
        k,
        a: vec![0; n + 1],
        kind,
        units: units(n),
        scratch: Vec::with_capacity(n),
        avail: content.counts().to_vec(),
        emitted: 0,
        visit: &mut visit,
    };
    let _ = engine.run();
    Ok(engine.emitted)
}

/// [`generate_fixed_content_controlled`] without early exit.
pub fn generate_fixed_content<F>(content: &Content, kind: ClassKind, mut visit: F) -> Result<u64>
where
    F: FnMut(&[u8]),
{
    generate_fixed_content_controlled(content, kind, |w| {
        visit(w);
        ControlFlow::Continue(())
    })
}
