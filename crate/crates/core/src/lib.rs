//! Edge ideals, their matching powers, and a verifier for the classification
//! of graphs whose matching powers are all bi-Cohen-Macaulay.
//!
//! Monomials and faces are bit masks over at most 32 variables. All internal
//! indices are 0-based; everything printed or serialized is 1-based, so the
//! variable `x1` is bit 0.
//!
//! The crate is organized as:
//!
//! * [`graph`]: simple graphs, matchings, isomorphism, enumeration, graph6 and
//!   edge-list I/O.
//! * [`ideal`]: squarefree monomial ideals, squarefree and matching powers,
//!   matching products and principal t-spread Borel ideals.
//! * [`homology`]: Stanley-Reisner complexes, Alexander duality, homology over
//!   GF(p), Hochster Betti tables and the Cohen-Macaulay predicates built on
//!   them.
//! * [`verify`]: exhaustive and targeted verifiers producing [`verify::Verdict`]s.

pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Matching};
pub use homology::{BettiTable, PrimeField, SimplicialComplex};
pub use ideal::{Monomial, SpreadVector, SquarefreeIdeal};
pub use verify::Verdict;

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterate the set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
