use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::graph::{enumerate_graphs, Graph};

fn ideal(n: usize, gens1: &[&[usize]]) -> SquarefreeIdeal {
    SquarefreeIdeal::minimalize(
        gens1
            .iter()
            .map(|g| Monomial::from_vars(&g.iter().map(|v| v - 1).collect::<Vec<_>>())),
        n,
    )
    .unwrap()
}

fn is_antichain(i: &SquarefreeIdeal) -> bool {
    let g = i.generators();
    g.iter()
        .enumerate()
        .all(|(a, u)| g.iter().enumerate().all(|(b, v)| a == b || !u.divides(*v)))
}

/// Literal `I^k`: every k-fold product of generators (with repetition) as an
/// exponent vector, keeping only the squarefree ones, then minimal elements.
fn squarefree_part_of_power(i: &SquarefreeIdeal, k: usize) -> BTreeSet<Vec<u8>> {
    let n = i.ambient();
    let gens: Vec<Vec<u8>> = i
        .generators()
        .iter()
        .map(|g| (0..n).map(|v| u8::from(g.mask() >> v & 1 == 1)).collect())
        .collect();
    let mut products: BTreeSet<Vec<u8>> = BTreeSet::from([vec![0u8; n]]);
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for p in &products {
            for g in &gens {
                next.insert(p.iter().zip(g).map(|(a, b)| a + b).collect::<Vec<u8>>());
            }
        }
        products = next;
    }
    let sqfree: Vec<Vec<u8>> = products
        .into_iter()
        .filter(|e| e.iter().all(|&x| x <= 1))
        .collect();
    sqfree
        .iter()
        .filter(|e| {
            !sqfree
                .iter()
                .any(|f| f != *e && f.iter().zip(e.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect()
}

fn as_exponents(i: &SquarefreeIdeal) -> BTreeSet<Vec<u8>> {
    let n = i.ambient();
    i.generators()
        .iter()
        .map(|g| (0..n).map(|v| u8::from(g.mask() >> v & 1 == 1)).collect())
        .collect()
}

#[test]
fn edge_ideal_examples() {
    let k4 = edge_ideal(&Graph::complete(4).unwrap());
    assert_eq!(k4.to_string(), "(x1x2, x1x3, x1x4, x2x3, x2x4, x3x4)");
    let p4c = edge_ideal(&Graph::path(4).unwrap().complement());
    assert_eq!(p4c.to_string(), "(x1x3, x1x4, x2x4)");
    assert!(edge_ideal(&Graph::empty(3).unwrap()).is_zero());
}

#[test]
fn minimalize_examples() {
    assert_eq!(ideal(3, &[&[1, 2], &[1, 2, 3]]), ideal(3, &[&[1, 2]]));
    assert_eq!(ideal(3, &[&[1], &[2], &[1, 2]]).to_string(), "(x1, x2)");
    let a = ideal(4, &[&[1, 3], &[2, 4]]);
    assert_eq!(
        SquarefreeIdeal::minimalize(a.generators().to_vec(), 4).unwrap(),
        a
    );
    assert!(SquarefreeIdeal::from_masks(&[0b10000], 4).is_err());
}

#[test]
fn squarefree_power_examples() {
    let k4 = edge_ideal(&Graph::complete(4).unwrap());
    assert_eq!(k4.squarefree_power(2).unwrap(), ideal(4, &[&[1, 2, 3, 4]]));
    let p5c = edge_ideal(&Graph::path(5).unwrap().complement());
    assert_eq!(
        p5c.squarefree_power(2).unwrap(),
        SquarefreeIdeal::squarefree_veronese(5, 4).unwrap()
    );
    let p4 = edge_ideal(&Graph::path(4).unwrap());
    assert_eq!(p4.monomial_grade(), 2);
    assert!(p4.squarefree_power(3).unwrap().is_zero());
    assert!(p4.squarefree_power(0).is_err());
}

#[test]
fn matching_power_examples() {
    let k6 = Graph::complete(6).unwrap();
    assert_eq!(
        matching_power(&k6, 3).unwrap(),
        SquarefreeIdeal::squarefree_veronese(6, 6).unwrap()
    );
    assert_eq!(
        matching_power(&Graph::path(4).unwrap(), 2).unwrap(),
        ideal(4, &[&[1, 2, 3, 4]])
    );
    let p4c = Graph::path(4).unwrap().complement();
    assert_eq!(matching_power(&p4c, 1).unwrap(), edge_ideal(&p4c));
}

#[test]
fn matching_product_examples() {
    let i = ideal(4, &[&[1], &[2]]);
    assert!(i.matching_product(&ideal(4, &[&[1, 2]])).unwrap().is_zero());
    assert_eq!(
        i.matching_product(&ideal(4, &[&[3, 4]])).unwrap(),
        ideal(4, &[&[1, 3, 4], &[2, 3, 4]])
    );
    assert!(i.matching_product(&ideal(5, &[&[3]])).is_err());
}

/// I(K5)^[2] = x5 (P * I(K4)^[1]) + I(K4)^[2] with P = (x1, ..., x4).
#[test]
fn splitting_identity_on_k5() {
    let k5 = Graph::complete(5).unwrap();
    let lhs = matching_power(&k5, 2).unwrap();
    let p = SquarefreeIdeal::generated_by_variables(5, 0b01111).unwrap();
    let h = edge_ideal(&k5.delete_vertex(4).unwrap())
        .with_ambient(5)
        .unwrap();
    let rhs = p
        .matching_product(&h)
        .unwrap()
        .multiply_variable(4)
        .unwrap()
        .sum(&h.squarefree_power(2).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
    // and x5 P + I(H) = I(K5)
    let rebuilt = p.multiply_variable(4).unwrap().sum(&h).unwrap();
    assert_eq!(rebuilt, edge_ideal(&k5));
}

#[test]
fn stats_examples() {
    let p4c = edge_ideal(&Graph::path(4).unwrap().complement())
        .stats()
        .unwrap();
    assert_eq!((p4c.mu, p4c.height, p4c.monomial_grade), (3, 2, 2));
    assert_eq!(p4c.degree, Some(2));
    let k5 = edge_ideal(&Graph::complete(5).unwrap()).stats().unwrap();
    assert_eq!((k5.mu, k5.height, k5.monomial_grade), (10, 4, 2));
    let m = SquarefreeIdeal::maximal(4).unwrap().stats().unwrap();
    assert_eq!(
        (m.mu, m.height, m.monomial_grade, m.support),
        (4, 4, 4, 0b1111)
    );
    assert_eq!(
        SquarefreeIdeal::zero(3).unwrap().stats(),
        Err(Error::ZeroIdeal)
    );
    let mixed = ideal(3, &[&[1], &[2, 3]]).stats().unwrap();
    assert!(!mixed.is_equigenerated);
    assert_eq!(mixed.degree, None);
}

#[test]
fn intersect_examples() {
    let x1 = ideal(3, &[&[1]]);
    assert_eq!(
        x1.intersect(&ideal(3, &[&[2]])).unwrap(),
        ideal(3, &[&[1, 2]])
    );
    let i = ideal(4, &[&[1, 3], &[2, 4]]);
    assert_eq!(i.intersect(&i).unwrap(), i);
    assert_eq!(
        ideal(3, &[&[1], &[2]])
            .intersect(&ideal(3, &[&[1, 2]]))
            .unwrap(),
        ideal(3, &[&[1, 2]])
    );
}

#[test]
fn variable_operations() {
    let i = ideal(3, &[&[1], &[2]]);
    assert_eq!(
        i.multiply_variable(2).unwrap(),
        ideal(3, &[&[1, 3], &[2, 3]])
    );
    assert_eq!(i.multiply_variable(0), Err(Error::VariableInSupport(0)));
    assert_eq!(
        ideal(3, &[&[1, 2]]).with_variable(0).unwrap(),
        ideal(3, &[&[1]])
    );
}

#[test]
fn zero_and_unit_ideals() {
    let z = SquarefreeIdeal::zero(3).unwrap();
    let u = SquarefreeIdeal::unit(3).unwrap();
    let i = ideal(3, &[&[1, 2]]);
    assert!(z.squarefree_power(2).unwrap().is_zero());
    assert_eq!(i.matching_product(&u).unwrap(), i);
    assert_eq!(u.matching_product(&i).unwrap(), i);
    assert!(i.matching_product(&z).unwrap().is_zero());
    assert_eq!(i.sum(&z).unwrap(), i);
    assert_eq!(i.intersect(&u).unwrap(), i);
    assert!(u.is_unit() && !u.is_proper_nonzero());
}

#[test]
fn json_schema() {
    let i = edge_ideal(&Graph::path(4).unwrap().complement());
    let s = serde_json::to_string(&i).unwrap();
    assert_eq!(s, r#"{"n":4,"gens":[[1,3],[1,4],[2,4]]}"#);
    let back: SquarefreeIdeal = serde_json::from_str(&s).unwrap();
    assert_eq!(back, i);
    assert!(serde_json::from_str::<SquarefreeIdeal>(r#"{"n":2,"gens":[[3]]}"#).is_err());
}

#[test]
fn matching_power_equals_literal_squarefree_part_of_power() {
    for n in 2..=6 {
        for g in enumerate_graphs(n, false, n >= 6).unwrap() {
            let i = edge_ideal(&g);
            let nu = g.matching_number();
            assert_eq!(i.monomial_grade(), nu, "{g}");
            for k in 1..=nu + 1 {
                let mp = matching_power(&g, k).unwrap();
                assert_eq!(mp, i.squarefree_power(k).unwrap());
                assert_eq!(mp.is_zero(), k > nu);
                if n <= 5 || k <= 2 {
                    assert_eq!(
                        as_exponents(&mp),
                        squarefree_part_of_power(&i, k),
                        "{g} k={k}"
                    );
                }
                assert!(is_antichain(&mp));
            }
        }
    }
}

#[test]
fn borel_characterizations_agree() {
    for n in 1..=7usize {
        for d in 1..=3usize {
            let ts: Vec<Vec<usize>> = match d {
                1 => vec![vec![]],
                2 => vec![vec![1], vec![2]],
                _ => vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]],
            };
            for t in ts {
                let t = SpreadVector(t);
                for mask in 1u32..(1 << n) {
                    let u = Monomial::from_mask(mask);
                    if u.degree() != d || !is_t_spread(u, &t) {
                        continue;
                    }
                    let a = t_spread_borel(u, &t, n).unwrap();
                    let b = t_spread_borel_by_exchange(u, &t, n).unwrap();
                    assert_eq!(a, b, "u={u} t={t:?}");
                    assert!(a.contains(u));
                    assert!(a.generators().iter().all(|&g| is_t_spread(g, &t)));
                }
            }
        }
    }
}

fn arb_ideal() -> impl Strategy<Value = SquarefreeIdeal> {
    (2usize..=7).prop_flat_map(|n| {
        prop::collection::vec(1u32..(1 << n), 1..8)
            .prop_map(move |masks| SquarefreeIdeal::from_masks(&masks, n).unwrap())
    })
}

proptest! {
    #[test]
    fn matching_product_commutes(i in arb_ideal(), masks in prop::collection::vec(1u32..128, 1..6)) {
        let n = i.ambient();
        let j = SquarefreeIdeal::from_masks(
            &masks.iter().map(|m| m & crate::full_mask(n)).filter(|&m| m != 0).collect::<Vec<_>>(),
            n,
        ).unwrap();
        prop_assert_eq!(i.matching_product(&j).unwrap(), j.matching_product(&i).unwrap());
        prop_assert_eq!(i.matching_product(&SquarefreeIdeal::unit(n).unwrap()).unwrap(), i.clone());
        prop_assert!(is_antichain(&i.intersect(&j).unwrap()));
        prop_assert!(is_antichain(&i.sum(&j).unwrap()));
    }

    #[test]
    fn squarefree_powers_are_antitone(i in arb_ideal()) {
        prop_assert_eq!(i.squarefree_power(1).unwrap(), i.clone());
        let nu = i.monomial_grade();
        for k in 2..=nu + 1 {
            let p = i.squarefree_power(k).unwrap();
            prop_assert!(is_antichain(&p));
            if !p.is_zero() {
                prop_assert!(!i.squarefree_power(k - 1).unwrap().is_zero());
            }
            prop_assert_eq!(p.is_zero(), k > nu);
        }
    }

    #[test]
    fn minimalize_is_idempotent(i in arb_ideal()) {
        prop_assert!(is_antichain(&i));
        let again = SquarefreeIdeal::minimalize(i.generators().to_vec(), i.ambient()).unwrap();
        prop_assert_eq!(again, i);
    }
}
