//! t-spread monomials and principal t-spread Borel ideals.

use std::collections::BTreeSet;

use super::{Monomial, SquarefreeIdeal};
use crate::error::{Error, Result};
use crate::{bits, full_mask};

/// Gap bounds `(t1, ..., t_{d-1})` between consecutive support indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpreadVector(pub Vec<usize>);

impl SpreadVector {
    pub fn uniform(t: usize, len: usize) -> Self {
        SpreadVector(vec![t; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Whether consecutive support indices `i_j < i_{j+1}` of `u` satisfy
/// `i_{j+1} - i_j >= t_j`. Entries of `t` past `deg(u) - 1` are ignored and
/// gaps past the end of `t` are unconstrained.
pub fn is_t_spread(u: Monomial, t: &SpreadVector) -> bool {
    let vars = u.vars();
    vars.windows(2)
        .zip(t.0.iter())
        .all(|(w, &gap)| w[1] - w[0] >= gap)
}

fn validate(u: Monomial, t: &SpreadVector, n: usize) -> Result<()> {
    if n == 0 || n > 32 {
        return Err(Error::VertexCount(n));
    }
    if u.is_unit() || u.degree() != t.len() + 1 || t.0.contains(&0) {
        return Err(Error::SpreadLength(t.0.clone(), u.degree()));
    }
    if u.mask() & !full_mask(n) != 0 {
        return Err(Error::VariableOutOfRange {
            index: 31 - u.mask().leading_zeros() as usize,
            n,
        });
    }
    if !is_t_spread(u, t) {
        return Err(Error::NotTSpread(u.to_string(), t.0.clone()));
    }
    Ok(())
}

/// Principal t-spread Borel ideal `B_t(u)`: all t-spread `x_b1 ... x_bd` with
/// `b_j <= a_j` for every `j`, where `u = x_a1 ... x_ad`.
///
/// Spread entries must be at least 1 so that every generator is squarefree.
pub fn t_spread_borel(u: Monomial, t: &SpreadVector, n: usize) -> Result<SquarefreeIdeal> {
    validate(u, t, n)?;
    let a = u.vars();
    let mut out = Vec::new();
    fill_below(&a, &t.0, 0, 0, 0, &mut out);
    SquarefreeIdeal::minimalize(out.into_iter().map(Monomial), n)
}

fn fill_below(a: &[usize], t: &[usize], j: usize, lo: usize, acc: u32, out: &mut Vec<u32>) {
    if j == a.len() {
        out.push(acc);
        return;
    }
    for b in lo..=a[j] {
        let next_lo = if j < t.len() { b + t[j] } else { b + 1 };
        fill_below(a, t, j + 1, next_lo, acc | (1 << b), out);
    }
}

/// `B_t(u)` as the closure of `{u}` under the moves `v -> x_i (v / x_j)`,
/// `i < j`, that keep the monomial t-spread.
pub fn t_spread_borel_by_exchange(
    u: Monomial,
    t: &SpreadVector,
    n: usize,
) -> Result<SquarefreeIdeal> {
    validate(u, t, n)?;
    let mut seen = BTreeSet::from([u.mask()]);
    let mut frontier = vec![u.mask()];
    while let Some(v) = frontier.pop() {
        for j in bits(v) {
            for i in 0..j {
                if v & (1 << i) != 0 {
                    continue;
                }
                let w = (v & !(1 << j)) | (1 << i);
                if is_t_spread(Monomial(w), t) && seen.insert(w) {
                    frontier.push(w);
                }
            }
        }
    }
    SquarefreeIdeal::minimalize(seen.into_iter().map(Monomial), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ideal::edge_ideal;

    fn m(vars1: &[usize]) -> Monomial {
        Monomial::from_vars(&vars1.iter().map(|v| v - 1).collect::<Vec<_>>())
    }

    #[test]
    fn spread_predicate() {
        assert!(is_t_spread(m(&[2, 4]), &SpreadVector(vec![2])));
        assert!(!is_t_spread(m(&[2, 3]), &SpreadVector(vec![2])));
        assert!(is_t_spread(m(&[3]), &SpreadVector(vec![])));
        assert!(is_t_spread(m(&[1, 3, 4]), &SpreadVector(vec![2, 1, 7])));
    }

    #[test]
    fn borel_examples() {
        let k4 = edge_ideal(&Graph::complete(4).unwrap());
        assert_eq!(
            t_spread_borel(m(&[3, 4]), &SpreadVector(vec![1]), 4).unwrap(),
            k4
        );
        let p4c = edge_ideal(&Graph::path(4).unwrap().complement());
        assert_eq!(
            t_spread_borel(m(&[2, 4]), &SpreadVector(vec![2]), 4).unwrap(),
            p4c
        );
        let b = t_spread_borel(m(&[2, 4]), &SpreadVector(vec![1]), 4).unwrap();
        let expected =
            SquarefreeIdeal::from_masks(&[0b0011, 0b0101, 0b1001, 0b0110, 0b1010], 4).unwrap();
        assert_eq!(b, expected);
        assert_eq!(
            t_spread_borel_by_exchange(m(&[2, 4]), &SpreadVector(vec![1]), 4).unwrap(),
            expected
        );
    }

    #[test]
    fn borel_errors() {
        let t2 = SpreadVector(vec![2]);
        assert!(matches!(
            t_spread_borel(m(&[2, 3]), &t2, 4),
            Err(Error::NotTSpread(..))
        ));
        assert!(matches!(
            t_spread_borel(m(&[1, 2, 4]), &t2, 4),
            Err(Error::SpreadLength(..))
        ));
        assert!(t_spread_borel(m(&[2, 5]), &t2, 4).is_err());
        assert!(t_spread_borel(m(&[2, 4]), &SpreadVector(vec![0]), 4).is_err());
    }
}
