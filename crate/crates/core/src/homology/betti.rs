//! Graded Betti numbers of squarefree ideals via Hochster's formula.
//!
//! Tables hold `β_{i,j}(I)`, the Betti numbers of the ideal. For the quotient,
//! `β_{i+1,j}(S/I) = β_{i,j}(I)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::complex::stanley_reisner;
use super::field::PrimeField;
use crate::bits;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub field: PrimeField,
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn empty(field: PrimeField) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    /// `β_{i,j}`, zero when absent.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, rank: usize) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_default() += rank;
        }
    }

    /// Nonzero entries `((i, j), β_{i,j})` in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry (`pd I`).
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `reg I = max(j - i)`.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|(&(a, _), _)| a == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Every nonzero entry lies on `j = i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + d)
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            convention: "ideal".into(),
            p: self.field.modulus(),
            entries: self.entries().map(|((i, j), r)| [i, j, r]).collect(),
        }
    }

    pub fn from_json(j: &BettiJson) -> Result<Self> {
        if j.convention != "ideal" {
            return Err(Error::Parse(format!(
                "unknown Betti convention {:?}",
                j.convention
            )));
        }
        let mut t = BettiTable::empty(PrimeField::new(j.p)?);
        for &[i, jj, r] in &j.entries {
            t.add(i, jj, r);
        }
        Ok(t)
    }
}

/// `{"convention": "ideal", "p": 2, "entries": [[i, j, rank], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub convention: String,
    pub p: u32,
    pub entries: Vec<[usize; 3]>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BettiTable::from_json(&BettiJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Graded Betti numbers of `I` over `field`:
/// `β_{i,σ}(I) = dim H̃_{|σ|-i-2}(Δ|σ)`, summed over `σ` with `|σ| = j`.
///
/// Subsets containing a variable outside `supp(I)` restrict `Δ` to a cone and
/// contribute nothing, so only subsets of the support are visited.
pub fn betti_table(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let delta = stanley_reisner(ideal)?;
    let support = ideal.support();
    let sigmas: Vec<u32> = {
        let mut v = Vec::with_capacity(1 << support.count_ones());
        let mut s = support;
        loop {
            v.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & support;
        }
        v
    };
    let contributions: Vec<(usize, usize, usize)> = sigmas
        .par_iter()
        .flat_map_iter(|&sigma| {
            let size = sigma.count_ones() as usize;
            let h = delta.restrict(sigma).reduced_homology(field);
            // h[r] = dim H̃_{r-1}; r - 1 = size - i - 2  =>  i = size - r - 1
            h.into_iter()
                .enumerate()
                .filter(move |&(r, rank)| rank > 0 && r < size)
                .map(move |(r, rank)| (size - r - 1, size, rank))
        })
        .collect();
    let mut table = BettiTable::empty(field);
    for (i, j, r) in contributions {
        table.add(i, j, r);
    }
    Ok(table)
}

/// Ideals with no generators have the zero table.
pub(crate) fn betti_table_or_zero(
    ideal: &SquarefreeIdeal,
    field: PrimeField,
) -> Result<BettiTable> {
    if ideal.is_zero() {
        Ok(BettiTable::empty(field))
    } else {
        betti_table(ideal, field)
    }
}

/// Homological invariants of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalProfile {
    /// Projective dimension of `S/I`.
    pub pd: usize,
    pub depth: usize,
    /// Krull dimension of `S/I`.
    pub dim: usize,
    /// Regularity of the ideal `I`.
    pub regularity: usize,
    pub is_unmixed: bool,
}

pub fn homological_profile(
    ideal: &SquarefreeIdeal,
    field: PrimeField,
) -> Result<HomologicalProfile> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let table = betti_table(ideal, field)?;
    profile_from_table(ideal, &table)
}

pub(crate) fn profile_from_table(
    ideal: &SquarefreeIdeal,
    table: &BettiTable,
) -> Result<HomologicalProfile> {
    let delta = stanley_reisner(ideal)?;
    let pd = 1 + table.max_index().ok_or(Error::ZeroIdeal)?;
    Ok(HomologicalProfile {
        pd,
        depth: ideal.ambient() - pd,
        dim: delta.max_facet_size(),
        regularity: table.regularity().unwrap_or(0),
        is_unmixed: delta.is_pure(),
    })
}

/// Degree histogram of `G(I)` as a map `j -> count`.
pub fn generator_degrees(ideal: &SquarefreeIdeal) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for g in ideal.generators() {
        *h.entry(bits(g.mask()).count()).or_insert(0) += 1;
    }
    h
}
