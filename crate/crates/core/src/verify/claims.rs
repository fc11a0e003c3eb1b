use std::time::Instant;

use super::audit::{audited_bi_cm, audited_cohen_macaulay, audited_profile, Audit};
use super::{Verdict, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{is_betti_splitting, vertex_splitting_at, PrimeField};
use crate::ideal::{
    edge_ideal, matching_power, t_spread_borel, Monomial, SpreadVector, SquarefreeIdeal,
};
use crate::{bits, full_mask};

const MAX_PROP_KP: usize = 10;
const MAX_NOTCM: usize = 9;
const MAX_VERONESE: usize = 10;

fn families(n: usize) -> Result<[(String, Graph); 2]> {
    Ok([
        (format!("K{n}"), Graph::complete(n)?),
        (format!("P{n}c"), Graph::path(n)?.complement()),
    ])
}

/// Bi-CM of all matching powers of `K_n` and `P_n^c`, their depths, the
/// Borel descriptions of both edge ideals, and `I^[k] = m^[2k]`.
pub fn verify_prop_kp(n: usize, field: PrimeField) -> Result<Verdict> {
    if !(4..=MAX_PROP_KP).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "expected 4 <= n <= {MAX_PROP_KP}, got {n}"
        )));
    }
    let started = Instant::now();
    let mut audit = Audit::default();
    let mut witnesses = Vec::new();
    let mut instances = 0;
    let last = Monomial::from_vars(&[n - 1]);

    for (idx, (name, g)) in families(n)?.into_iter().enumerate() {
        let spread = idx + 1;
        let i = edge_ideal(&g);
        let u = Monomial::from_mask(last.mask() | (1 << (n - 1 - spread)));
        let borel = t_spread_borel(u, &SpreadVector(vec![spread]), n)?;
        let depth = audited_profile(&i, field, &mut audit)?.depth;
        witnesses.push(
            Witness::new(name.clone())
                .graph(&g)
                .fact("borel_u", u.to_string())
                .fact("borel_identity", borel == i)
                .fact("depth", depth)
                .fact("expected_depth", spread)
                .expect(borel == i && depth == spread),
        );
        instances += 1;

        let nu = g.matching_number();
        for k in 1..=nu {
            let power = matching_power(&g, k)?;
            let report = audited_bi_cm(&power, field, &mut audit)?;
            let veronese = SquarefreeIdeal::squarefree_veronese(n, 2 * k)?;
            // P_n^c at k = 1 is the edge ideal itself, not m^[2]
            let must_equal = spread == 1 || k >= 2;
            let equal = power == veronese;
            instances += 1;
            witnesses.push(
                Witness::new(name.clone())
                    .graph(&g)
                    .k(k)
                    .fact("bi_cm", report.is_bi_cm())
                    .fact("cohen_macaulay", report.cohen_macaulay)
                    .fact("linear_resolution", report.linear_resolution)
                    .fact("equals_m_2k", equal)
                    .expect(report.is_bi_cm() && (!must_equal || equal)),
            );
        }
        let nu_ok = nu == n / 2;
        witnesses.push(
            Witness::new(name)
                .graph(&g)
                .fact("matching_number", nu)
                .expect(nu_ok),
        );
    }
    Ok(Verdict::finish(
        "prop-kp",
        field,
        instances,
        format!("K{n} and P{n}c: depths, Borel identities and all matching powers checked"),
        witnesses,
        audit,
        started,
    ))
}

fn k_subsets(n: usize, d: usize) -> Vec<u32> {
    (0u32..=full_mask(n))
        .filter(|m| m.count_ones() as usize == d)
        .collect()
}

/// Every `M_d ∖ {u}` in `n` variables fails to be Cohen-Macaulay. For the
/// last `u` in the lexicographic order it also checks `M_d ∖ {u} = B_1(v)`
/// with `v = x_{n-d} (u / x_{n-d+1})`.
pub fn verify_lemma_notcm(n: usize, d: usize, field: PrimeField) -> Result<Verdict> {
    if n > MAX_NOTCM {
        return Err(Error::OutOfRange(format!(
            "expected n <= {MAX_NOTCM}, got {n}"
        )));
    }
    if !(d > 1 && d < n) {
        return Err(Error::OutOfRange(format!(
            "expected 1 < d < n, got d = {d}, n = {n}"
        )));
    }
    let started = Instant::now();
    let mut audit = Audit::default();
    let mut witnesses = Vec::new();
    let all = k_subsets(n, d);
    for &u in &all {
        let gens = all
            .iter()
            .copied()
            .filter(|&m| m != u)
            .map(Monomial::from_mask);
        let ideal = SquarefreeIdeal::minimalize(gens, n)?;
        let cm = audited_cohen_macaulay(&ideal, field, &mut audit)?;
        witnesses.push(
            Witness::new(format!("M{d} minus {}", Monomial::from_mask(u)))
                .ideal(&ideal)
                .fact("cohen_macaulay", cm)
                .expect(!cm),
        );
    }

    let top = full_mask(n) & !full_mask(n - d);
    let v = (top & !(1 << (n - d))) | (1 << (n - d - 1));
    let v = Monomial::from_mask(v);
    let borel = t_spread_borel(v, &SpreadVector::uniform(1, d - 1), n)?;
    let removed = SquarefreeIdeal::minimalize(
        all.iter()
            .copied()
            .filter(|&m| m != top)
            .map(Monomial::from_mask),
        n,
    )?;
    witnesses.push(
        Witness::new(format!("B_1({v})"))
            .ideal(&borel)
            .fact("equals_M_d_minus_u", borel == removed)
            .expect(borel == removed),
    );

    Ok(Verdict::finish(
        "lemma-notcm",
        field,
        all.len(),
        format!(
            "{} ideals M{d} minus one generator in {n} variables",
            all.len()
        ),
        witnesses,
        audit,
        started,
    ))
}

fn record_err(result: Result<bool>) -> Result<bool> {
    match result {
        Err(Error::GeneratorPartition) => Ok(false),
        other => other,
    }
}

/// Depth of `S/J`, where the zero ideal gives `n`.
fn depth_or_full(j: &SquarefreeIdeal, field: PrimeField, audit: &mut Audit) -> Result<usize> {
    if j.is_zero() {
        Ok(j.ambient())
    } else {
        Ok(audited_profile(j, field, audit)?.depth)
    }
}

fn cm_or_trivial(j: &SquarefreeIdeal, field: PrimeField, audit: &mut Audit) -> Result<bool> {
    if j.is_zero() {
        Ok(true)
    } else {
        audited_cohen_macaulay(j, field, audit)
    }
}

/// Splitting checks at one vertex `v` of `g`: the power identity, the Betti
/// splitting, the generator count of `P`, and the Cohen-Macaulay criterion
/// for splittings.
fn splitting_witnesses(
    name: &str,
    g: &Graph,
    v: usize,
    field: PrimeField,
    audit: &mut Audit,
    out: &mut Vec<Witness>,
) -> Result<usize> {
    let n = g.order();
    let i = edge_ideal(g);
    let Some(split) = vertex_splitting_at(&i, v) else {
        return Ok(0);
    };
    let p = split.i1;
    let ih = split.i2;
    let mut checked = 0;

    // neighbors of v generate P, G - v gives I2
    let h = g.delete_vertex(v)?;
    let p_expected = SquarefreeIdeal::generated_by_variables(n, g.neighbors(v))?;
    let ih_small = edge_ideal(&h);
    let relabeled: Vec<Monomial> = ih_small
        .generators()
        .iter()
        .map(|m| {
            let mut mask = 0u32;
            for b in bits(m.mask()) {
                mask |= 1 << if b >= v { b + 1 } else { b };
            }
            Monomial::from_mask(mask)
        })
        .collect();
    let ih_expected = SquarefreeIdeal::minimalize(relabeled, n)?;

    let cm = audited_cohen_macaulay(&i, field, audit)?;
    let depth_h = if ih_small.is_zero() {
        n - 1
    } else {
        audited_profile(&ih_small, field, audit)?.depth
    };
    let mu_ok = !cm || p.mu() == n - depth_h;
    checked += 1;
    out.push(
        Witness::new(format!("{name} split at x{}", v + 1))
            .graph(g)
            .fact("P_is_neighborhood", p == p_expected)
            .fact("I2_is_I(G-v)", ih == ih_expected)
            .fact("cohen_macaulay", cm)
            .fact("mu_P", p.mu())
            .fact("n_minus_depth_H", n - depth_h)
            .expect(p == p_expected && ih == ih_expected && mu_ok),
    );

    for k in 1..=g.matching_number() {
        let whole = matching_power(g, k)?;
        let inner = if k == 1 {
            p.clone()
        } else {
            p.matching_product(&ih.squarefree_power(k - 1)?)?
        };
        let part1 = inner.multiply_variable(v)?;
        let part2 = ih.squarefree_power(k)?;
        let identity = part1.sum(&part2)? == whole;
        let betti = identity && record_err(is_betti_splitting(&whole, &part1, &part2, field))?;

        // CM of the whole ideal against CM of the parts plus the depth condition
        let whole_cm = audited_cohen_macaulay(&whole, field, audit)?;
        let parts = if inner.is_proper_nonzero() && betti && inner.contains_ideal(&part2) {
            let i1_cm = cm_or_trivial(&inner, field, audit)?;
            let i2_cm = cm_or_trivial(&part2, field, audit)?;
            let d1 = depth_or_full(&inner, field, audit)?;
            let d2 = depth_or_full(&part2.with_variable(v)?, field, audit)?;
            Some(i1_cm && i2_cm && d1 == d2)
        } else {
            None
        };
        let criterion_ok = parts.is_none_or(|b| b == whole_cm);
        checked += 1;
        let mut w = Witness::new(format!("{name} split at x{}", v + 1))
            .graph(g)
            .k(k)
            .fact("identity", identity)
            .fact("betti_splitting", betti)
            .fact("cohen_macaulay", whole_cm);
        if let Some(b) = parts {
            w = w.fact("parts_criterion", b);
        }
        out.push(w.expect(identity && betti && criterion_ok));
    }
    Ok(checked)
}

/// `P_{n-1}^c` on the first `n - 1` vertices plus a vertex `n` joined to all
/// of them except `i` (1-based).
fn case_two_one_graph(n: usize, i: usize) -> Result<Graph> {
    let h = Graph::path(n - 1)?.complement();
    let mut edges = h.edges();
    edges.extend((0..n - 1).filter(|&j| j != i - 1).map(|j| (j, n - 1)));
    Graph::from_edges(n, &edges)
}

/// `K_{n-2}` on the first `n - 2` vertices, and vertex `n` joined to
/// `1, ..., n-3` and `n - 1`.
fn case_one_graph(n: usize) -> Result<Graph> {
    let mut edges = Graph::complete(n - 2)?.edges();
    edges.extend((0..n - 3).map(|j| (j, n - 1)));
    edges.push((n - 2, n - 1));
    Graph::from_edges(n, &edges)
}

/// The ideal identities, splittings and depth values used in the proof of
/// the classification, evaluated on concrete graphs for `5 <= n <= 8`.
pub fn verify_proof_identities(n: usize, field: PrimeField) -> Result<Verdict> {
    if !(5..=8).contains(&n) {
        return Err(Error::OutOfRange(format!("expected 5 <= n <= 8, got {n}")));
    }
    let started = Instant::now();
    let mut audit = Audit::default();
    let mut witnesses = Vec::new();
    let mut instances = 0;

    // splittings of I(K_n) and I(P_n^c) at every vertex where one exists
    for (name, g) in families(n)? {
        let mut found = 0;
        for v in (0..n).rev() {
            let c = splitting_witnesses(&name, &g, v, field, &mut audit, &mut witnesses)?;
            found += usize::from(c > 0);
            instances += c;
        }
        witnesses.push(
            Witness::new(format!("{name} splitting vertices"))
                .graph(&g)
                .fact("count", found)
                .expect(found > 0),
        );
    }

    // the graphs ruled out in the P^c branch
    let m = SquarefreeIdeal::squarefree_veronese(n, 4)?;
    for i in 2..=n - 2 {
        let g = case_two_one_graph(n, i)?;
        let square = matching_power(&g, 2)?;
        let excluded = Monomial::from_vars(&[i - 2, i - 1, i, n - 1]);
        let expected = SquarefreeIdeal::minimalize(
            m.generators().iter().copied().filter(|&u| u != excluded),
            n,
        )?;
        let cm = audited_cohen_macaulay(&square, field, &mut audit)?;
        instances += 1;
        witnesses.push(
            Witness::new(format!("P{}c plus x{n} missing x{i}", n - 1))
                .graph(&g)
                .k(2)
                .fact("excluded", excluded.to_string())
                .fact("generator_identity", square == expected)
                .fact("cohen_macaulay", cm)
                .expect(square == expected && !cm),
        );
    }

    // the graph ruled out in the K branch
    let g = case_one_graph(n)?;
    let square = matching_power(&g, 2)?;
    let first = SquarefreeIdeal::squarefree_veronese_on(n, full_mask(n - 1), 3)?;
    let tail = if n >= 6 {
        SquarefreeIdeal::squarefree_veronese_on(n, full_mask(n - 2), 4)?
    } else {
        SquarefreeIdeal::zero(n)?
    };
    let part1 = first.multiply_variable(n - 1)?;
    let identity = part1.sum(&tail)? == square;
    let betti = identity && record_err(is_betti_splitting(&square, &part1, &tail, field))?;
    let prof = audited_profile(&square, field, &mut audit)?;
    let cm = audited_cohen_macaulay(&square, field, &mut audit)?;
    instances += 1;
    let mut w = Witness::new(format!("K{} branch", n - 2))
        .graph(&g)
        .k(2)
        .fact("identity", identity)
        .fact("betti_splitting", betti)
        .fact("unmixed", prof.is_unmixed)
        .fact("cohen_macaulay", cm);
    let mut ok = identity && betti && !cm;
    if n == 5 {
        ok &= !prof.is_unmixed;
    } else {
        let d1 = audited_profile(&first, field, &mut audit)?.depth;
        let d2 = audited_profile(&tail.with_variable(n - 1)?, field, &mut audit)?.depth;
        w = w.fact("depth_first", d1).fact("depth_second", d2);
        ok &= d1 == 3 && d2 == 4;
    }
    witnesses.push(w.expect(ok));

    Ok(Verdict::finish(
        "proof-identities",
        field,
        instances,
        format!("splittings, generator identities and depths on {n} vertices"),
        witnesses,
        audit,
        started,
    ))
}

/// Uniform `t`-spread Veronese ideal of degree `d`: `B_t(x_{n-(d-1)t} ... x_{n-t} x_n)`.
pub fn t_spread_veronese(n: usize, d: usize, t: usize) -> Result<SquarefreeIdeal> {
    if d < 2 || t == 0 || n <= (d - 1) * t {
        return Err(Error::OutOfRange(format!(
            "no uniform {t}-spread Veronese ideal of degree {d} in {n} variables"
        )));
    }
    let vars: Vec<usize> = (0..d).map(|j| n - 1 - (d - 1 - j) * t).collect();
    t_spread_borel(
        Monomial::from_vars(&vars),
        &SpreadVector::uniform(t, d - 1),
        n,
    )
}

/// Bi-CM of every nonzero squarefree power of the uniform `t`-spread Veronese
/// ideal of degree `d` in `n` variables.
pub fn probe_veronese_conjecture(
    n: usize,
    d: usize,
    t: usize,
    field: PrimeField,
) -> Result<Verdict> {
    if n > MAX_VERONESE {
        return Err(Error::OutOfRange(format!(
            "expected n <= {MAX_VERONESE}, got {n}"
        )));
    }
    let started = Instant::now();
    let ideal = t_spread_veronese(n, d, t)?;
    let mut audit = Audit::default();
    let mut witnesses = Vec::new();
    let mut k = 1;
    loop {
        let power = ideal.squarefree_power(k)?;
        if power.is_zero() {
            break;
        }
        let report = audited_bi_cm(&power, field, &mut audit)?;
        witnesses.push(
            Witness::new(format!("n={n} d={d} t={t}"))
                .ideal(&power)
                .k(k)
                .fact("bi_cm", report.is_bi_cm())
                .fact("cohen_macaulay", report.cohen_macaulay)
                .fact("linear_resolution", report.linear_resolution)
                .fact("in_conjectured_range", d >= t)
                .expect(report.is_bi_cm()),
        );
        k += 1;
    }
    let powers = witnesses.len();
    Ok(Verdict::finish(
        "veronese-probe",
        field,
        powers,
        format!("{powers} squarefree powers of the {t}-spread Veronese ideal of degree {d} in {n} variables"),
        witnesses,
        audit,
        started,
    ))
}

/// [`probe_veronese_conjecture`] over every feasible `(n, d, t)` with
/// `n <= max_n`, `2 <= d <= max_d`, `1 <= t <= max_t`.
pub fn veronese_grid(
    max_n: usize,
    max_d: usize,
    max_t: usize,
    field: PrimeField,
) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in 2..=max_d {
            for t in 1..=max_t {
                if n > (d - 1) * t {
                    out.push(probe_veronese_conjecture(n, d, t, field)?);
                }
            }
        }
    }
    Ok(out)
}
