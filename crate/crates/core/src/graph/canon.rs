//! Canonical forms and enumeration of small graphs.
//!
//! The canonical code of a graph is the minimum, over vertex orderings, of the
//! upper-triangle adjacency bit string read column by column (graph6 order,
//! first pair most significant). Only orderings compatible with an
//! isomorphism-invariant ordered partition of the vertices are searched; the
//! partition starts from degrees and is refined by neighbor counts per cell.

use std::collections::HashSet;

use super::Graph;
use crate::bits;
use crate::error::{Error, Result};

/// Largest order for which the code fits in a `u64`.
pub const MAX_CODE_VERTICES: usize = 11;
/// Largest order accepted by up-to-isomorphism enumeration.
pub const MAX_ISO_ENUM_VERTICES: usize = 8;

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Code of the graph under its current labeling.
#[cfg(test)]
pub(crate) fn labeled_code(g: &Graph) -> u64 {
    let mut code = 0u64;
    for j in 1..g.order() {
        for i in 0..j {
            code = (code << 1) | u64::from(g.has_edge(i, j));
        }
    }
    code
}

pub(crate) fn from_labeled_code(n: usize, code: u64) -> Graph {
    let m = pair_count(n);
    let mut adj = vec![0u32; n];
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (m - 1 - pos)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            pos += 1;
        }
    }
    Graph { n, adj }
}

/// Ordered partition of the vertices, refined until neighbor counts into
/// every cell are constant on each cell.
fn refined_cells(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let ncolors = color.iter().max().map_or(0, |c| c + 1);
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; ncolors];
                for w in bits(g.neighbors(v)) {
                    counts[color[w]] += 1;
                }
                (color[v], counts, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0usize; n];
        let mut c = 0;
        for k in 0..n {
            if k > 0 && (sigs[k].0 != sigs[k - 1].0 || sigs[k].1 != sigs[k - 1].1) {
                c += 1;
            }
            next[sigs[k].2] = c;
        }
        let before = color.iter().collect::<HashSet<_>>().len();
        let after = c + 1;
        color = next;
        if after == before {
            break;
        }
    }
    let ncells = color.iter().max().map_or(0, |c| c + 1);
    let mut cells = vec![0u32; ncells];
    for (v, &c) in color.iter().enumerate() {
        cells[c] |= 1 << v;
    }
    cells
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: usize,
    // slot -> cell mask it must be filled from
    slot_cell: Vec<u32>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn run(&mut self, pos: usize, used: u32, prefix: u64, prefix_bits: usize, tied: bool) {
        let n = self.g.order();
        if pos == n {
            match &self.best {
                Some((b, _)) if *b <= prefix => {}
                _ => self.best = Some((prefix, self.order.clone())),
            }
            return;
        }
        let candidates = self.slot_cell[pos] & !used;
        for v in bits(candidates) {
            let mut code = prefix;
            for &u in &self.order[..pos] {
                code = (code << 1) | u64::from(self.g.has_edge(u, v));
            }
            let nbits = prefix_bits + pos;
            let mut still_tied = tied;
            if tied {
                if let Some((b, _)) = &self.best {
                    let best_prefix = if nbits == 0 {
                        0
                    } else {
                        b >> (self.total_bits - nbits)
                    };
                    if code > best_prefix {
                        continue;
                    }
                    still_tied = code == best_prefix;
                }
            }
            self.order.push(v);
            self.run(pos + 1, used | (1 << v), code, nbits, still_tied);
            self.order.pop();
        }
    }
}

/// Canonical code and the ordering realizing it (`order[slot] = vertex`).
fn canonical_search(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.order();
    let cells = refined_cells(g);
    let slot_cell = cells
        .iter()
        .flat_map(|&c| std::iter::repeat_n(c, c.count_ones() as usize))
        .collect();
    let mut search = CanonSearch {
        g,
        total_bits: pair_count(n),
        slot_cell,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0, 0, 0, true);
    search.best.expect("at least one ordering exists")
}

/// Canonical code of `g` (at most 11 vertices).
pub fn canonical_code(g: &Graph) -> Result<u64> {
    if g.order() > MAX_CODE_VERTICES {
        return Err(Error::OutOfRange(format!(
            "canonical form supports at most {MAX_CODE_VERTICES} vertices"
        )));
    }
    Ok(canonical_search(g).0)
}

/// The canonically relabeled representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    canonical_code(g).map(|code| from_labeled_code(g.order(), code))
}

/// Stream graphs on `n` vertices in a deterministic order.
///
/// Without `up_to_iso` this walks all `2^C(n,2)` labeled graphs by code
/// (`n <= 11`). With `up_to_iso` it yields one canonical representative per
/// isomorphism class, ordered by canonical code (`n <= 8`). `no_isolated`
/// drops graphs with a vertex of degree zero.
pub fn enumerate_graphs(
    n: usize,
    no_isolated: bool,
    up_to_iso: bool,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    if n == 0 || n > super::MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    if up_to_iso {
        if n > MAX_ISO_ENUM_VERTICES {
            return Err(Error::OutOfRange(format!(
                "isomorphism-class enumeration supports n <= {MAX_ISO_ENUM_VERTICES}"
            )));
        }
        let classes = iso_classes(n);
        return Ok(Box::new(
            classes
                .into_iter()
                .map(move |code| from_labeled_code(n, code))
                .filter(move |g| !no_isolated || !g.has_isolated_vertices()),
        ));
    }
    if n > MAX_CODE_VERTICES {
        return Err(Error::OutOfRange(format!(
            "labeled enumeration supports n <= {MAX_CODE_VERTICES}"
        )));
    }
    let m = pair_count(n);
    Ok(Box::new(
        (0..(1u64 << m))
            .map(move |code| from_labeled_code(n, code))
            .filter(move |g| !no_isolated || !g.has_isolated_vertices()),
    ))
}

/// Canonical codes of all graphs on `n` vertices, sorted. Every graph on `n`
/// vertices arises from one on `n - 1` by adding a vertex, so classes are
/// grown one vertex at a time.
fn iso_classes(n: usize) -> Vec<u64> {
    let mut classes = vec![0u64];
    for m in 2..=n {
        let mut next = HashSet::new();
        for &code in &classes {
            let base = from_labeled_code(m - 1, code);
            for nb in 0u32..(1 << (m - 1)) {
                let mut adj = base.adj.clone();
                for w in bits(nb) {
                    adj[w] |= 1 << (m - 1);
                }
                adj.push(nb);
                let g = Graph { n: m, adj };
                next.insert(canonical_search(&g).0);
            }
        }
        classes = next.into_iter().collect();
        classes.sort_unstable();
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, no_isolated: bool, iso: bool) -> usize {
        enumerate_graphs(n, no_isolated, iso).unwrap().count()
    }

    #[test]
    fn class_counts() {
        assert_eq!(count(3, true, true), 2);
        assert_eq!(count(4, true, true), 7);
        assert_eq!(count(5, true, true), 23);
        // OEIS A000088
        assert_eq!(count(5, false, true), 34);
        assert_eq!(count(6, false, true), 156);
    }

    #[test]
    fn labeled_counts() {
        for n in 1..=5 {
            assert_eq!(count(n, false, false), 1 << pair_count(n));
        }
    }

    #[test]
    fn iso_enumeration_rejects_large_n() {
        assert!(enumerate_graphs(9, true, true).is_err());
    }

    /// Independent oracle: canonical code as a plain minimum over all n! orderings.
    fn brute_code(g: &Graph) -> u64 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for k in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.order())
            .into_iter()
            .map(|p| labeled_code(&g.relabel(&p).unwrap()))
            .min()
            .unwrap()
    }

    #[test]
    fn class_count_five_matches_brute_force_dedup() {
        let mut codes = HashSet::new();
        for code in 0..(1u64 << 10) {
            let g = from_labeled_code(5, code);
            if !g.has_isolated_vertices() {
                codes.insert(brute_code(&g));
            }
        }
        assert_eq!(codes.len(), 23);
    }

    #[test]
    fn canonical_code_is_a_class_invariant() {
        for code in (0..(1u64 << 15)).step_by(97) {
            let g = from_labeled_code(6, code);
            let c = canonical_code(&g).unwrap();
            let h = g.relabel(&[3, 5, 0, 1, 4, 2]).unwrap();
            assert_eq!(canonical_code(&h).unwrap(), c);
            assert!(canonical_form(&g).unwrap().is_isomorphic(&g).is_some());
        }
    }

    #[test]
    fn labeled_code_roundtrip() {
        let g = Graph::path(5).unwrap().complement();
        assert_eq!(from_labeled_code(5, labeled_code(&g)), g);
    }
}
