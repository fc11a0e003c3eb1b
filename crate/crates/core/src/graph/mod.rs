//! Finite simple graphs on at most 32 vertices.
//!
//! A [`Graph`] stores one neighbor mask per vertex. Vertices are 0-based in
//! the API and printed 1-based.

mod canon;
mod io;

use std::fmt;

use crate::error::{Error, Result};
use crate::{bits, full_mask};

pub use canon::{canonical_code, canonical_form, enumerate_graphs};
pub use io::{from_edge_list, from_graph6, read_graphs, to_edge_list, to_graph6};

pub const MAX_VERTICES: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

/// A set of pairwise disjoint edges together with the vertices it covers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
    pub vertex_set: u32,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build from 0-based edge pairs. Loops and out-of-range endpoints are rejected,
    /// repeated edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::VertexSet(format!(
                    "edge {{{}, {}}} outside [{}]",
                    i + 1,
                    j + 1,
                    n
                )));
            }
            if i == j {
                return Err(Error::VertexSet(format!("loop at vertex {}", i + 1)));
            }
            g.adj[i] |= 1 << j;
            g.adj[j] |= 1 << i;
        }
        Ok(g)
    }

    /// Build from raw adjacency rows, checking symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<u32>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let full = full_mask(n);
        for (i, &row) in adj.iter().enumerate() {
            if row & !full != 0 || row & (1 << i) != 0 {
                return Err(Error::VertexSet(format!("bad adjacency row {}", i + 1)));
            }
            for j in bits(row) {
                if adj[j] & (1 << i) == 0 {
                    return Err(Error::VertexSet("adjacency not symmetric".into()));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = full_mask(n);
        for i in 0..n {
            g.adj[i] = full & !(1 << i);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::VertexCount(n));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.adj[i] & (1 << j) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in bits(self.adj[i] & !full_mask(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u32 {
        full_mask(self.n)
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &r)| !r & full & !(1 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on the vertex set `set`, relabeled `0..|set|` in
    /// increasing order.
    pub fn induced_subgraph(&self, set: u32) -> Result<Graph> {
        if set == 0 {
            return Err(Error::VertexSet("empty vertex set".into()));
        }
        if set & !self.vertex_mask() != 0 {
            return Err(Error::VertexSet(format!(
                "vertex set not contained in [{}]",
                self.n
            )));
        }
        let keep: Vec<usize> = bits(set).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[v] & (1 << w) != 0)
                    .fold(0u32, |acc, (k, _)| acc | (1 << k))
            })
            .collect();
        Ok(Graph { n: keep.len(), adj })
    }

    /// Delete vertex `v`, relabeling the rest in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.induced_subgraph(self.vertex_mask() & !(1 << v))
    }

    /// Apply a relabeling: vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::VertexSet("permutation length mismatch".into()));
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= self.n || seen & (1 << p) != 0 {
                return Err(Error::VertexSet("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u32; self.n];
        for i in 0..self.n {
            adj[perm[i]] = bits(self.adj[i]).fold(0, |acc, j| acc | (1 << perm[j]));
        }
        Ok(Graph { n: self.n, adj })
    }

    /// All `k`-matchings in lexicographic order of their edge-index tuples.
    pub fn matchings(&self, k: usize) -> Vec<Matching> {
        let edges = self.edges();
        let mut out = Vec::new();
        if k == 0 {
            return out;
        }
        let mut chosen = Vec::with_capacity(k);
        collect_matchings(&edges, 0, 0, k, &mut chosen, &mut out);
        out
    }

    /// Maximum matching size ν(G).
    pub fn matching_number(&self) -> usize {
        fn go(adj: &[u32], free: u32) -> usize {
            // lowest free vertex that still has a free neighbor
            let mut rest = free;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let nb = adj[v] & free;
                if nb == 0 {
                    continue;
                }
                let without = free & !(1 << v);
                let mut best = go(adj, without);
                for w in bits(nb) {
                    best = best.max(1 + go(adj, without & !(1 << w)));
                }
                return best;
            }
            0
        }
        go(&self.adj, self.vertex_mask())
    }

    /// Search for a bijection mapping the edges of `self` onto those of `other`.
    /// On success `witness[i]` is the image of vertex `i`.
    pub fn is_isomorphic(&self, other: &Graph) -> Option<Vec<usize>> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return None;
        }
        let mut da: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        let (ia, ib) = (da.clone(), db.clone());
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return None;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = 0u32;
        if iso_extend(self, other, &ia, &ib, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }
}

fn collect_matchings(
    edges: &[(usize, usize)],
    start: usize,
    covered: u32,
    k: usize,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
) {
    if chosen.len() == k {
        out.push(Matching {
            edges: chosen.clone(),
            vertex_set: covered,
        });
        return;
    }
    let need = k - chosen.len();
    for idx in start..edges.len() {
        if edges.len() - idx < need {
            break;
        }
        let (i, j) = edges[idx];
        let m = (1u32 << i) | (1 << j);
        if covered & m == 0 {
            chosen.push((i, j));
            collect_matchings(edges, idx + 1, covered | m, k, chosen, out);
            chosen.pop();
        }
    }
}

fn iso_extend(
    a: &Graph,
    b: &Graph,
    deg_a: &[usize],
    deg_b: &[usize],
    v: usize,
    map: &mut [usize],
    used: &mut u32,
) -> bool {
    if v == a.n {
        return true;
    }
    for w in 0..b.n {
        if *used & (1 << w) != 0 || deg_a[v] != deg_b[w] {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if iso_extend(a, b, deg_a, deg_b, v + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E={})", self.n, self)
    }
}

/// `{12,13,24}` style, 1-based.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if self.n > 9 {
                write!(f, "{}-{}", i + 1, j + 1)?;
            } else {
                write!(f, "{}{}", i + 1, j + 1)?;
            }
        }
        write!(f, "}}")
    }
}
