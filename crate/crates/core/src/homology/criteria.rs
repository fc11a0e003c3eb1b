//! Cohen-Macaulay, linear-resolution and Betti-splitting predicates.

use serde::Serialize;

use super::betti::{betti_table, betti_table_or_zero, BettiTable};
use super::complex::{alexander_dual, stanley_reisner, SimplicialComplex};
use super::field::PrimeField;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;

fn require_proper_nonzero(ideal: &SquarefreeIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// Reisner's criterion: for every face `F` (including `∅`),
/// `H̃_i(lk F) = 0` for all `i < dim lk F`.
pub fn complex_is_cohen_macaulay(delta: &SimplicialComplex, field: PrimeField) -> bool {
    delta.faces().into_iter().all(|face| {
        let lk = delta.link(face);
        let top = lk.max_facet_size();
        // entries 0..top are H̃_{-1} .. H̃_{dim lk - 1}
        lk.reduced_homology(field)[..top].iter().all(|&h| h == 0)
    })
}

pub fn is_cohen_macaulay(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<bool> {
    require_proper_nonzero(ideal)?;
    Ok(complex_is_cohen_macaulay(&stanley_reisner(ideal)?, field))
}

/// `depth k[Δ]` from link homology: the least `|F| + i + 1` over faces `F`
/// with `H̃_i(lk F) != 0`. Independent of any Betti computation.
pub fn depth_via_links(delta: &SimplicialComplex, field: PrimeField) -> Option<usize> {
    delta
        .faces()
        .into_iter()
        .filter_map(|face| {
            let h = delta.link(face).reduced_homology(field);
            // h[r] = H̃_{r-1}, so |F| + (r - 1) + 1 = |F| + r
            h.iter()
                .position(|&x| x != 0)
                .map(|r| face.count_ones() as usize + r)
        })
        .min()
}

/// Betti-table route: every `β_{i,j}(I)` sits on `j = i + d`.
pub fn has_linear_resolution(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<bool> {
    require_proper_nonzero(ideal)?;
    let d = ideal.generating_degree().ok_or(Error::NotEquigenerated)?;
    Ok(betti_table(ideal, field)?.is_linear(d))
}

/// Eagon-Reiner route: `I` has a linear resolution iff `I^∨` is Cohen-Macaulay.
pub fn has_linear_resolution_via_dual(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<bool> {
    require_proper_nonzero(ideal)?;
    ideal.generating_degree().ok_or(Error::NotEquigenerated)?;
    is_cohen_macaulay(&alexander_dual(ideal)?, field)
}

/// Both routes to bi-CM evaluated side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiCmReport {
    pub cohen_macaulay: bool,
    /// Linearity of the Betti table.
    pub linear_resolution: bool,
    /// Cohen-Macaulayness of the Alexander dual.
    pub dual_cohen_macaulay: bool,
}

impl BiCmReport {
    pub fn is_bi_cm(&self) -> bool {
        self.cohen_macaulay && self.linear_resolution
    }

    /// Whether `I` and `I^∨` both being CM agrees with CM plus linear resolution.
    pub fn routes_agree(&self) -> bool {
        self.linear_resolution == self.dual_cohen_macaulay
    }
}

pub fn bi_cm_report(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<BiCmReport> {
    require_proper_nonzero(ideal)?;
    let d = ideal.generating_degree().ok_or(Error::NotEquigenerated)?;
    Ok(BiCmReport {
        cohen_macaulay: is_cohen_macaulay(ideal, field)?,
        linear_resolution: betti_table(ideal, field)?.is_linear(d),
        dual_cohen_macaulay: is_cohen_macaulay(&alexander_dual(ideal)?, field)?,
    })
}

/// `I` is Cohen-Macaulay with a linear resolution (equivalently, `I` and
/// `I^∨` are both Cohen-Macaulay).
pub fn is_bi_cm(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<bool> {
    Ok(bi_cm_report(ideal, field)?.is_bi_cm())
}

/// Whether `I = I1 + I2` satisfies
/// `β_{i,j}(I) = β_{i,j}(I1) + β_{i,j}(I2) + β_{i-1,j}(I1 ∩ I2)` for all `i, j`.
///
/// `G(I)` must be the disjoint union of `G(I1)` and `G(I2)`.
pub fn is_betti_splitting(
    ideal: &SquarefreeIdeal,
    part1: &SquarefreeIdeal,
    part2: &SquarefreeIdeal,
    field: PrimeField,
) -> Result<bool> {
    let n = ideal.ambient();
    for p in [part1, part2] {
        if p.ambient() != n {
            return Err(Error::AmbientMismatch(n, p.ambient()));
        }
    }
    let mut combined: Vec<_> = part1
        .generators()
        .iter()
        .chain(part2.generators())
        .copied()
        .collect();
    let total = combined.len();
    combined.sort();
    combined.dedup();
    if combined.len() != total || combined != ideal.generators() {
        return Err(Error::GeneratorPartition);
    }
    let whole = betti_table_or_zero(ideal, field)?;
    let b1 = betti_table_or_zero(part1, field)?;
    let b2 = betti_table_or_zero(part2, field)?;
    let meet = betti_table_or_zero(&part1.intersect(part2)?, field)?;
    Ok(splitting_formula_holds(&whole, &b1, &b2, &meet))
}

fn splitting_formula_holds(
    whole: &BettiTable,
    b1: &BettiTable,
    b2: &BettiTable,
    meet: &BettiTable,
) -> bool {
    let mut keys: Vec<(usize, usize)> = whole
        .entries()
        .chain(b1.entries())
        .chain(b2.entries())
        .map(|(k, _)| k)
        .chain(meet.entries().map(|((i, j), _)| (i + 1, j)))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter().all(|(i, j)| {
        let shifted = if i == 0 { 0 } else { meet.get(i - 1, j) };
        whole.get(i, j) == b1.get(i, j) + b2.get(i, j) + shifted
    })
}
