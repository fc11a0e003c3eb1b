//! Squarefree monomial ideals.
//!
//! A squarefree monomial is its support, stored as a bit mask; divisibility is
//! mask inclusion. A [`SquarefreeIdeal`] keeps its minimal generating set as a
//! sorted antichain, so two ideals are equal exactly when their generator
//! lists are.

mod borel;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{bits, full_mask};

pub use borel::{is_t_spread, t_spread_borel, t_spread_borel_by_exchange, SpreadVector};

/// A squarefree monomial `x_A`, identified with its support `A`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u32);

impl Monomial {
    pub const UNIT: Monomial = Monomial(0);

    pub fn from_mask(mask: u32) -> Self {
        Monomial(mask)
    }

    /// From 0-based variable indices, each below 32.
    pub fn from_vars(vars: &[usize]) -> Self {
        Monomial(vars.iter().fold(0, |m, &v| m | (1 << v)))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    /// Sorted 0-based support.
    pub fn vars(self) -> Vec<usize> {
        bits(self.0).collect()
    }
}

/// Generator order: by degree, then lexicographically on sorted supports.
fn generator_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        let diff = a.0 ^ b.0;
        if diff == 0 {
            Ordering::Equal
        } else if a.0 & diff & diff.wrapping_neg() != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        generator_order(self, other)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for v in bits(self.0) {
            write!(f, "x{}", v + 1)?;
        }
        Ok(())
    }
}

/// A squarefree monomial ideal in `K[x1, ..., xn]`, held as its minimal
/// generating set `G(I)`.
///
/// No generators is the zero ideal; the single generator `1` is the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Summary invariants of a nonzero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealStats {
    /// Number of minimal generators.
    pub mu: usize,
    pub support: u32,
    /// Smallest set of variables meeting every generator.
    pub height: usize,
    /// Largest family of generators with pairwise disjoint supports.
    pub monomial_grade: usize,
    pub is_equigenerated: bool,
    pub degree: Option<usize>,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > 32 {
        Err(Error::VertexCount(n))
    } else {
        Ok(())
    }
}

/// Keep only the inclusion-minimal masks, sorted in generator order.
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(g)) {
            out.push(g);
        }
    }
    out
}

impl SquarefreeIdeal {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SquarefreeIdeal { n, gens: vec![] })
    }

    pub fn unit(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SquarefreeIdeal {
            n,
            gens: vec![Monomial::UNIT],
        })
    }

    /// The maximal ideal `m = (x1, ..., xn)`.
    pub fn maximal(n: usize) -> Result<Self> {
        Self::generated_by_variables(n, full_mask(n))
    }

    /// The monomial prime generated by the variables in `vars`.
    pub fn generated_by_variables(n: usize, vars: u32) -> Result<Self> {
        Self::minimalize(bits(vars).map(|v| Monomial(1 << v)), n)
    }

    /// All squarefree monomials of degree `d` in the variables `vars`
    /// (the squarefree Veronese ideal `(x_vars)^[d]`).
    pub fn squarefree_veronese_on(n: usize, vars: u32, d: usize) -> Result<Self> {
        check_n(n)?;
        let pool: Vec<usize> = bits(vars & full_mask(n)).collect();
        let mut gens = Vec::new();
        subsets_of_size(&pool, d, 0, 0, &mut gens);
        Self::minimalize(gens.into_iter().map(Monomial), n)
    }

    /// `m^[d]`, the set `M_d` of all squarefree monomials of degree `d`.
    pub fn squarefree_veronese(n: usize, d: usize) -> Result<Self> {
        Self::squarefree_veronese_on(n, full_mask(n), d)
    }

    /// Minimal generating set of the ideal generated by `gens`.
    pub fn minimalize<I: IntoIterator<Item = Monomial>>(gens: I, n: usize) -> Result<Self> {
        check_n(n)?;
        let full = full_mask(n);
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|m| m.0 & !full != 0) {
            let index = 31 - bad.0.leading_zeros() as usize;
            return Err(Error::VariableOutOfRange { index, n });
        }
        Ok(SquarefreeIdeal {
            n,
            gens: minimal_antichain(gens),
        })
    }

    pub fn from_masks(masks: &[u32], n: usize) -> Result<Self> {
        Self::minimalize(masks.iter().map(|&m| Monomial(m)), n)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_unit())
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> u32 {
        self.gens.iter().fold(0, |acc, g| acc | g.0)
    }

    /// Common degree of the generators, if there is one.
    pub fn generating_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &SquarefreeIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains(g))
    }

    fn same_ring(&self, other: &SquarefreeIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.n, other.n))
        }
    }

    /// Same generators viewed in a polynomial ring with `n` variables.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        Self::minimalize(self.gens.iter().copied(), n)
    }

    pub fn sum(&self, other: &SquarefreeIdeal) -> Result<Self> {
        self.same_ring(other)?;
        Self::minimalize(self.gens.iter().chain(&other.gens).copied(), self.n)
    }

    /// `I ∩ J`, generated by the pairwise least common multiples.
    pub fn intersect(&self, other: &SquarefreeIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|u| other.gens.iter().map(move |v| Monomial(u.0 | v.0)));
        Self::minimalize(lcms, self.n)
    }

    /// Matching product `I * J`: products `uv` of generators with disjoint supports.
    pub fn matching_product(&self, other: &SquarefreeIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let prods = self.gens.iter().flat_map(|u| {
            other
                .gens
                .iter()
                .filter(move |v| u.0 & v.0 == 0)
                .map(move |v| Monomial(u.0 | v.0))
        });
        Self::minimalize(prods, self.n)
    }

    /// `k`-th squarefree power `I^[k]`.
    ///
    /// Built from `k`-subsets of `G(I)` with pairwise disjoint supports; a
    /// product of squarefree monomials is squarefree exactly when the factors
    /// are pairwise coprime.
    pub fn squarefree_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("squarefree power needs k >= 1".into()));
        }
        let mut out = Vec::new();
        disjoint_unions(&self.gens, k, 0, 0, &mut out);
        Self::minimalize(out.into_iter().map(Monomial), self.n)
    }

    /// `x_i · I`.
    pub fn multiply_variable(&self, i: usize) -> Result<Self> {
        if i >= self.n {
            return Err(Error::VariableOutOfRange {
                index: i,
                n: self.n,
            });
        }
        if self.support() & (1 << i) != 0 {
            return Err(Error::VariableInSupport(i));
        }
        Self::minimalize(self.gens.iter().map(|g| Monomial(g.0 | (1 << i))), self.n)
    }

    /// `(I, x_i)`.
    pub fn with_variable(&self, i: usize) -> Result<Self> {
        if i >= self.n {
            return Err(Error::VariableOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Self::minimalize(
            self.gens
                .iter()
                .copied()
                .chain(std::iter::once(Monomial(1 << i))),
            self.n,
        )
    }

    pub fn stats(&self) -> Result<IdealStats> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let degree = self.generating_degree();
        Ok(IdealStats {
            mu: self.mu(),
            support: self.support(),
            height: self.height(),
            monomial_grade: self.monomial_grade(),
            is_equigenerated: degree.is_some(),
            degree,
        })
    }

    /// Minimum size of a set of variables meeting every generator; 0 for the
    /// zero ideal and `usize::MAX` for the unit ideal (no prime contains it).
    pub fn height(&self) -> usize {
        if self.is_unit() {
            return usize::MAX;
        }
        let masks: Vec<u32> = self.gens.iter().map(|g| g.0).collect();
        let mut best = self.support().count_ones() as usize;
        min_transversal(&masks, 0, 0, &mut best);
        best
    }

    /// Monomial grade `ν(I)`: the largest `k` with `I^[k] != 0`.
    pub fn monomial_grade(&self) -> usize {
        if self.is_unit() {
            return usize::MAX;
        }
        let masks: Vec<u32> = self.gens.iter().map(|g| g.0).collect();
        let mut best = 0;
        max_disjoint(&masks, 0, 0, 0, &mut best);
        best
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            n: self.n,
            gens: self
                .gens
                .iter()
                .map(|g| bits(g.0).map(|v| v + 1).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &IdealJson) -> Result<Self> {
        check_n(j.n)?;
        let mut gens = Vec::with_capacity(j.gens.len());
        for g in &j.gens {
            let mut m = 0u32;
            for &v in g {
                if v == 0 {
                    return Err(Error::Parse("variables are numbered from 1".into()));
                }
                if v > j.n {
                    return Err(Error::VariableOutOfRange {
                        index: v - 1,
                        n: j.n,
                    });
                }
                m |= 1 << (v - 1);
            }
            gens.push(Monomial(m));
        }
        Self::minimalize(gens, j.n)
    }
}

/// Serialized form: `{"n": 4, "gens": [[1, 3], [2, 4]]}` with 1-based variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<usize>>,
}

impl Serialize for SquarefreeIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SquarefreeIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = IdealJson::deserialize(d)?;
        SquarefreeIdeal::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {} variables", self, self.n)
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Edge ideal `I(G)`.
pub fn edge_ideal(g: &Graph) -> SquarefreeIdeal {
    let gens = g
        .edges()
        .into_iter()
        .map(|(i, j)| Monomial((1 << i) | (1 << j)));
    SquarefreeIdeal::minimalize(gens, g.order()).expect("graph order is within range")
}

/// Matching power `I(G)^[k]`, generated by `x_V(M)` over all `k`-matchings `M`.
pub fn matching_power(g: &Graph, k: usize) -> Result<SquarefreeIdeal> {
    if k == 0 {
        return Err(Error::OutOfRange("matching power needs k >= 1".into()));
    }
    let gens = g.matchings(k).into_iter().map(|m| Monomial(m.vertex_set));
    SquarefreeIdeal::minimalize(gens, g.order())
}

fn subsets_of_size(pool: &[usize], d: usize, start: usize, acc: u32, out: &mut Vec<u32>) {
    if d == 0 {
        out.push(acc);
        return;
    }
    for k in start..pool.len() {
        if pool.len() - k < d {
            break;
        }
        subsets_of_size(pool, d - 1, k + 1, acc | (1 << pool[k]), out);
    }
}

fn disjoint_unions(gens: &[Monomial], k: usize, start: usize, acc: u32, out: &mut Vec<u32>) {
    if k == 0 {
        out.push(acc);
        return;
    }
    for idx in start..gens.len() {
        if gens.len() - idx < k {
            break;
        }
        let g = gens[idx].0;
        if g & acc == 0 {
            disjoint_unions(gens, k - 1, idx + 1, acc | g, out);
        }
    }
}

fn min_transversal(gens: &[u32], chosen: u32, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match gens.iter().find(|&&g| g & chosen == 0) {
        None => *best = size,
        Some(&g) => {
            for v in bits(g) {
                min_transversal(gens, chosen | (1 << v), size + 1, best);
            }
        }
    }
}

fn max_disjoint(gens: &[u32], start: usize, used: u32, size: usize, best: &mut usize) {
    *best = (*best).max(size);
    for idx in start..gens.len() {
        if size + (gens.len() - idx) <= *best {
            return;
        }
        if gens[idx] & used == 0 {
            max_disjoint(gens, idx + 1, used | gens[idx], size + 1, best);
        }
    }
}

#[cfg(test)]
mod tests;
