//! Simplicial complexes on `[n]` given by facets, Stanley-Reisner
//! correspondence and reduced homology over GF(p).

use std::fmt;

use super::field::{PrimeField, SparseMatrix};
use crate::error::{Error, Result};
use crate::ideal::{Monomial, SquarefreeIdeal};
use crate::{bits, full_mask};

/// A simplicial complex on the vertex set `[n]`, stored as its facets.
///
/// The void complex has no faces at all; the irrelevant complex `{∅}` has the
/// single facet `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u32>,
}

fn maximal_antichain(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut out: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&f| s & !f == 0) {
            out.push(s);
        }
    }
    out.sort_unstable_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
    out
}

/// Minimal sets meeting every mask in `sets` (Berge's incremental method).
pub(crate) fn minimal_transversals(sets: &[u32]) -> Vec<u32> {
    let mut tr = vec![0u32];
    for &s in sets {
        let mut next = Vec::with_capacity(tr.len() * 2);
        for &t in &tr {
            if t & s != 0 {
                next.push(t);
            } else {
                next.extend(bits(s).map(|v| t | (1 << v)));
            }
        }
        next.sort_unstable_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
        next.dedup();
        let mut minimal: Vec<u32> = Vec::with_capacity(next.len());
        for t in next {
            if !minimal.iter().any(|&m| m & !t == 0) {
                minimal.push(t);
            }
        }
        tr = minimal;
    }
    tr
}

impl SimplicialComplex {
    /// Complex generated by `facets` (non-maximal entries are dropped).
    pub fn from_facets(n: usize, facets: &[u32]) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::VertexCount(n));
        }
        if facets.iter().any(|&f| f & !full_mask(n) != 0) {
            return Err(Error::VertexSet(format!("face outside [{n}]")));
        }
        Ok(SimplicialComplex {
            n,
            facets: maximal_antichain(facets.to_vec()),
        })
    }

    pub fn void(n: usize) -> Result<Self> {
        Self::from_facets(n, &[])
    }

    pub fn irrelevant(n: usize) -> Result<Self> {
        Self::from_facets(n, &[0])
    }

    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_facets(n, &[full_mask(n)])
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `max |F| - 1` over facets; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    /// Largest facet size (the Krull dimension of the face ring).
    pub fn max_facet_size(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains(&self, face: u32) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// All faces, ordered by size then mask.
    pub fn faces(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &f in &self.facets {
            // every submask of f
            let mut s = f;
            loop {
                out.push(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out.sort_unstable_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
        out.dedup();
        out
    }

    /// `Δ|σ = {F ∈ Δ : F ⊆ σ}`.
    pub fn restrict(&self, sigma: u32) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            facets: maximal_antichain(self.facets.iter().map(|&f| f & sigma).collect()),
        }
    }

    /// `lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`; void if `F ∉ Δ`.
    pub fn link(&self, face: u32) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            facets: maximal_antichain(
                self.facets
                    .iter()
                    .filter(|&&f| face & !f == 0)
                    .map(|&f| f & !face)
                    .collect(),
            ),
        }
    }

    /// Reduced homology ranks over `field`; entry `r` is `dim H̃_{r-1}`, so
    /// the vector runs from `H̃_{-1}` to `H̃_{dim Δ}`. The void complex yields
    /// `[0]` and `{∅}` yields `[1]`.
    pub fn reduced_homology(&self, field: PrimeField) -> Vec<usize> {
        if self.is_void() {
            return vec![0];
        }
        let top = self.max_facet_size();
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for f in self.faces() {
            by_size[f.count_ones() as usize].push(f);
        }
        // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
        let mut ranks = vec![0usize; top + 2];
        for s in 1..=top {
            let lower = &by_size[s - 1];
            let rows = by_size[s]
                .iter()
                .map(|&f| {
                    bits(f)
                        .enumerate()
                        .map(|(pos, v)| {
                            let col = lower
                                .binary_search(&(f & !(1 << v)))
                                .expect("boundary face present");
                            (col, if pos % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            let m = SparseMatrix {
                ncols: lower.len(),
                rows,
            };
            ranks[s] = field.rank(&m);
        }
        (0..=top)
            .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
            .collect()
    }

    /// Minimal non-faces, i.e. the generators of the Stanley-Reisner ideal.
    pub fn stanley_reisner_ideal(&self) -> SquarefreeIdeal {
        let complements: Vec<u32> = self
            .facets
            .iter()
            .map(|&f| !f & full_mask(self.n))
            .collect();
        SquarefreeIdeal::minimalize(
            minimal_transversals(&complements)
                .into_iter()
                .map(Monomial::from_mask),
            self.n,
        )
        .expect("masks stay inside [n]")
    }
}

/// `Δ(I)`: faces are the subsets of `[n]` containing no generator of `I`.
/// Facets are the complements of the minimal transversals of `G(I)`.
pub fn stanley_reisner(ideal: &SquarefreeIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.ambient();
    let gens: Vec<u32> = ideal.generators().iter().map(|g| g.mask()).collect();
    let facets: Vec<u32> = minimal_transversals(&gens)
        .into_iter()
        .map(|t| !t & full_mask(n))
        .collect();
    SimplicialComplex::from_facets(n, &facets)
}

/// Alexander dual `I^∨`, generated by `x_{[n] \ F}` over facets `F` of `Δ(I)`.
pub fn alexander_dual(ideal: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let delta = stanley_reisner(ideal)?;
    let n = ideal.ambient();
    SquarefreeIdeal::minimalize(
        delta
            .facets()
            .iter()
            .map(|&f| Monomial::from_mask(!f & full_mask(n))),
        n,
    )
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets={})", self.n, self)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, &face) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (m, v) in bits(face).enumerate() {
                if m > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, "}}")?;
        }
        write!(f, ">")
    }
}
