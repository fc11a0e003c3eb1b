//! Vertex splittings `I = x_i I1 + I2`.

use std::collections::HashMap;

use crate::ideal::{Monomial, SquarefreeIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSplitting {
    /// 0-based splitting variable.
    pub variable: usize,
    /// `(u / x_i : x_i | u)`.
    pub i1: SquarefreeIdeal,
    /// `(u : x_i ∤ u)`.
    pub i2: SquarefreeIdeal,
}

/// The decomposition at `x_i` when it is a vertex splitting: `I2 ⊆ I1` and
/// `G(I)` is the disjoint union of `G(x_i I1)` and `G(I2)`.
pub fn vertex_splitting_at(ideal: &SquarefreeIdeal, i: usize) -> Option<VertexSplitting> {
    let n = ideal.ambient();
    if i >= n || !ideal.is_proper_nonzero() {
        return None;
    }
    let bit = 1u32 << i;
    let (with, without): (Vec<Monomial>, Vec<Monomial>) =
        ideal.generators().iter().partition(|g| g.mask() & bit != 0);
    let i1 =
        SquarefreeIdeal::minimalize(with.iter().map(|g| Monomial::from_mask(g.mask() & !bit)), n)
            .ok()?;
    let i2 = SquarefreeIdeal::minimalize(without.iter().copied(), n).ok()?;
    if i1.is_zero() || !i1.contains_ideal(&i2) {
        return None;
    }
    // x_i I1 must reproduce exactly the generators divisible by x_i
    let lifted: Vec<Monomial> = i1
        .generators()
        .iter()
        .map(|g| Monomial::from_mask(g.mask() | bit))
        .collect();
    let mut expected = with;
    expected.sort();
    let mut lifted_sorted = lifted;
    lifted_sorted.sort();
    if lifted_sorted != expected || i2.generators().len() != without.len() {
        return None;
    }
    Some(VertexSplitting {
        variable: i,
        i1,
        i2,
    })
}

/// First splitting vertex, searching from `x_n` down to `x_1`.
pub fn find_vertex_splitting(ideal: &SquarefreeIdeal) -> Option<VertexSplitting> {
    (0..ideal.ambient())
        .rev()
        .find_map(|i| vertex_splitting_at(ideal, i))
}

/// Recursive vertex splittability: `(u)`, `0` and `S` are splittable, and so
/// is any `x_i I1 + I2` vertex splitting with both parts splittable.
pub fn is_vertex_splittable(ideal: &SquarefreeIdeal) -> bool {
    fn go(ideal: &SquarefreeIdeal, memo: &mut HashMap<Vec<u32>, bool>) -> bool {
        if ideal.mu() <= 1 {
            return true;
        }
        let key: Vec<u32> = ideal.generators().iter().map(|g| g.mask()).collect();
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let ans = (0..ideal.ambient()).rev().any(|i| {
            vertex_splitting_at(ideal, i).is_some_and(|s| go(&s.i1, memo) && go(&s.i2, memo))
        });
        memo.insert(key, ans);
        ans
    }
    go(ideal, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ideal::edge_ideal;

    #[test]
    fn complete_graph_splits_at_last_vertex() {
        let k4 = edge_ideal(&Graph::complete(4).unwrap());
        let s = vertex_splitting_at(&k4, 3).unwrap();
        assert_eq!(
            s.i1,
            SquarefreeIdeal::generated_by_variables(4, 0b0111).unwrap()
        );
        assert_eq!(
            s.i2,
            edge_ideal(&Graph::complete(3).unwrap())
                .with_ambient(4)
                .unwrap()
        );
        assert_eq!(find_vertex_splitting(&k4).unwrap().variable, 3);
        assert!(is_vertex_splittable(&k4));
    }

    #[test]
    fn path_complement_splits() {
        let p4c = edge_ideal(&Graph::path(4).unwrap().complement());
        let s = vertex_splitting_at(&p4c, 3).unwrap();
        assert_eq!(
            s.i1,
            SquarefreeIdeal::generated_by_variables(4, 0b0011).unwrap()
        );
        assert_eq!(s.i2, SquarefreeIdeal::from_masks(&[0b0101], 4).unwrap());
        assert!(is_vertex_splittable(&p4c));
    }

    #[test]
    fn disjoint_edges_do_not_split() {
        let i = SquarefreeIdeal::from_masks(&[0b0011, 0b1100], 4).unwrap();
        assert!((0..4).all(|v| vertex_splitting_at(&i, v).is_none()));
        assert!(find_vertex_splitting(&i).is_none());
        assert!(!is_vertex_splittable(&i));
    }

    #[test]
    fn base_cases() {
        assert!(is_vertex_splittable(&SquarefreeIdeal::zero(3).unwrap()));
        assert!(is_vertex_splittable(&SquarefreeIdeal::unit(3).unwrap()));
        assert!(is_vertex_splittable(
            &SquarefreeIdeal::from_masks(&[0b101], 3).unwrap()
        ));
        // (x1, x2x3): split at x1 gives I1 = S, I2 = (x2x3)
        let i = SquarefreeIdeal::from_masks(&[0b001, 0b110], 3).unwrap();
        let s = vertex_splitting_at(&i, 0).unwrap();
        assert!(s.i1.is_unit());
        assert!(is_vertex_splittable(&i));
    }
}
