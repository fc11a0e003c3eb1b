//! Cross-checks of the homology layer against independent routes.

use std::collections::BTreeMap;

use super::*;
use crate::graph::{enumerate_graphs, Graph};
use crate::ideal::{edge_ideal, matching_power, SquarefreeIdeal};

fn fields() -> [PrimeField; 3] {
    [
        PrimeField::GF2,
        PrimeField::new(3).unwrap(),
        PrimeField::new(5).unwrap(),
    ]
}

/// Plain dense elimination mod p, kept apart from the library routine.
fn oracle_rank(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = (1..p).find(|&x| x * rows[rank][c] % p == 1).unwrap();
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c] * inv % p;
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers of `I` from the Taylor complex tensored with the field: in
/// multidegree `σ`, the basis in position `q` is the `q`-subsets of generators
/// with lcm `σ`, and the differential keeps only faces with the same lcm.
fn taylor_betti(ideal: &SquarefreeIdeal, p: u32) -> BTreeMap<(usize, usize), usize> {
    let gens: Vec<u32> = ideal.generators().iter().map(|g| g.mask()).collect();
    let m = gens.len();
    let lcm = |set: u32| {
        (0..m)
            .filter(|k| set >> k & 1 == 1)
            .fold(0u32, |acc, k| acc | gens[k])
    };
    let mut by_sigma: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for set in 1u32..(1 << m) {
        by_sigma.entry(lcm(set)).or_default().push(set);
    }
    let mut out = BTreeMap::new();
    for (sigma, sets) in by_sigma {
        let at = |q: usize| -> Vec<u32> {
            sets.iter()
                .copied()
                .filter(|s| s.count_ones() as usize == q)
                .collect()
        };
        let rank_of = |q: usize| -> usize {
            // d_q : position q -> position q-1, q >= 2 (position 0 is S itself, lcm ∅ = 1)
            if q < 2 {
                return 0;
            }
            let src = at(q);
            let dst = at(q - 1);
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let rows = src
                .iter()
                .map(|&s| {
                    let mut row = vec![0i64; dst.len()];
                    for (pos, k) in (0..m).filter(|k| s >> k & 1 == 1).enumerate() {
                        let t = s & !(1 << k);
                        if let Some(c) = dst.iter().position(|&d| d == t) {
                            row[c] += if pos % 2 == 0 { 1 } else { -1 };
                        }
                    }
                    row
                })
                .collect();
            oracle_rank(rows, i64::from(p))
        };
        for q in 1..=m {
            let dim = at(q).len();
            let b = dim - rank_of(q) - rank_of(q + 1);
            if b > 0 {
                *out.entry((q - 1, sigma.count_ones() as usize)).or_insert(0) += b;
            }
        }
    }
    out
}

fn table_map(t: &BettiTable) -> BTreeMap<(usize, usize), usize> {
    t.entries().collect()
}

fn small_graph_ideals(max_n: usize) -> Vec<SquarefreeIdeal> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for g in enumerate_graphs(n, true, true).unwrap() {
            for k in 1..=g.matching_number() {
                out.push(matching_power(&g, k).unwrap());
            }
        }
    }
    out
}

#[test]
fn hochster_matches_taylor_on_few_generators() {
    let mut checked = 0;
    for i in small_graph_ideals(5) {
        if i.mu() > 5 {
            continue;
        }
        for f in fields() {
            assert_eq!(
                table_map(&betti_table(&i, f).unwrap()),
                taylor_betti(&i, f.modulus()),
                "{i:?} over {f}"
            );
        }
        checked += 1;
    }
    // a few non-graph ideals with mixed degrees
    for masks in [
        &[0b0001u32, 0b0110, 0b1100][..],
        &[0b00111, 0b01100, 0b11000, 0b10001],
        &[0b011, 0b101, 0b110],
        &[0b000111, 0b111000, 0b100100, 0b010010],
    ] {
        let n = 32 - masks.iter().fold(0, |a, m| a | m).leading_zeros() as usize;
        let i = SquarefreeIdeal::from_masks(masks, n).unwrap();
        for f in fields() {
            assert_eq!(
                table_map(&betti_table(&i, f).unwrap()),
                taylor_betti(&i, f.modulus())
            );
        }
        checked += 1;
    }
    assert!(checked > 40, "only {checked} ideals checked");
}

#[test]
fn sweep_invariants() {
    let f = PrimeField::GF2;
    for i in small_graph_ideals(6) {
        let n = i.ambient();
        let table = betti_table(&i, f).unwrap();
        let prof = homological_profile(&i, f).unwrap();
        let delta = stanley_reisner(&i).unwrap();

        // β_0 row is the degree histogram of G(I)
        let row0: BTreeMap<usize, usize> = table
            .entries()
            .filter(|((a, _), _)| *a == 0)
            .map(|((_, j), v)| (j, v))
            .collect();
        assert_eq!(row0, generator_degrees(&i));

        // Auslander-Buchsbaum, and depth from local cohomology of links
        assert_eq!(prof.depth + prof.pd, n);
        assert_eq!(depth_via_links(&delta, f), Some(prof.depth), "{i:?}");

        let cm = is_cohen_macaulay(&i, f).unwrap();
        assert!(prof.depth <= prof.dim);
        assert_eq!(cm, prof.depth == prof.dim, "{i:?}");
        if cm {
            assert!(prof.is_unmixed);
        }

        let dual = alexander_dual(&i).unwrap();
        assert_eq!(alexander_dual(&dual).unwrap(), i);
        assert_eq!(
            has_linear_resolution(&i, f).unwrap(),
            has_linear_resolution_via_dual(&i, f).unwrap(),
            "{i:?}"
        );
    }
}

/// Induced subgraphs inherit linear resolutions of matching powers.
#[test]
fn linear_resolution_passes_to_induced_subgraphs() {
    let f = PrimeField::GF2;
    for n in 3..=6 {
        for g in enumerate_graphs(n, true, true).unwrap() {
            for k in 1..=g.matching_number() {
                if !has_linear_resolution(&matching_power(&g, k).unwrap(), f).unwrap() {
                    continue;
                }
                for sub in 1u32..(1 << n) {
                    let h = g.induced_subgraph(sub).unwrap();
                    let p = matching_power(&h, k).unwrap();
                    if !p.is_zero() {
                        assert!(
                            has_linear_resolution(&p, f).unwrap(),
                            "{g} k={k} sub={sub:b}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn verdicts_do_not_depend_on_the_field_for_small_graphs() {
    for i in small_graph_ideals(5) {
        let base = bi_cm_report(&i, PrimeField::GF2).unwrap();
        for f in &fields()[1..] {
            assert_eq!(bi_cm_report(&i, *f).unwrap(), base);
        }
    }
}

#[test]
fn vertex_splitting_reconstructs_ideal() {
    for i in small_graph_ideals(5) {
        if let Some(s) = find_vertex_splitting(&i) {
            let rebuilt =
                s.i1.multiply_variable(s.variable)
                    .unwrap()
                    .sum(&s.i2)
                    .unwrap();
            assert_eq!(rebuilt, i);
            assert!(s.i1.contains_ideal(&s.i2));
            assert_eq!(s.i2.support() & (1 << s.variable), 0);
        }
    }
    let k5 = Graph::complete(5).unwrap();
    assert!(is_vertex_splittable(&edge_ideal(&k5)));
}
