//! Combinatorial generation of necklaces, bracelets, and charm bracelets,
//! with applications to the search for periodic Golay pairs.
//!
//! The library has three layers:
//!
//! * [`words`], [`generate`], [`counting`]: k-ary strings under rotation,
//!   reversal, and affine index maps; exhaustive generation of class
//!   representatives; exact counting of charm bracelets.
//! * [`sequences`]: periodic autocorrelation, power spectral density,
//!   compression, and Golay-pair predicates for integer sequences.
//! * [`search`], [`equiv`], [`sds`]: a compression-based search for periodic
//!   Golay pairs, equivalence-class canonicalization for pairs, and
//!   supplementary difference sets.

pub mod counting;
pub mod equiv;
pub mod error;
pub mod generate;
pub mod search;
pub mod sds;
pub mod sequences;
pub mod words;

pub use error::{Error, Result};
pub use words::{Content, KaryString};
