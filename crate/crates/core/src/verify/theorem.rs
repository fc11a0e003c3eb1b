//! The classification sweep: among graphs without isolated vertices, all
//! matching powers are bi-CM exactly for `K_n` and `P_n^c`.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::audit::{audited_bi_cm, Audit};
use super::checkpoint::{Checkpoint, CheckpointEntry};
use super::{Verdict, Witness};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, to_graph6, Graph};
use crate::homology::PrimeField;
use crate::ideal::matching_power;

/// Per-`k` bi-CM results for `I(G)^[k]`, `k = 1..=ν(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingPowerVerdict {
    pub all_bi_cm: bool,
    pub per_k: Vec<bool>,
}

/// Evaluate bi-CM for every nonzero matching power of `g`.
pub fn all_matching_powers_bicm(g: &Graph, field: PrimeField) -> Result<MatchingPowerVerdict> {
    all_matching_powers_audited(g, field, &mut Audit::default())
}

fn all_matching_powers_audited(
    g: &Graph,
    field: PrimeField,
    audit: &mut Audit,
) -> Result<MatchingPowerVerdict> {
    if g.has_isolated_vertices() {
        return Err(Error::IsolatedVertex);
    }
    let per_k = (1..=g.matching_number())
        .map(|k| Ok(audited_bi_cm(&matching_power(g, k)?, field, audit)?.is_bi_cm()))
        .collect::<Result<Vec<bool>>>()?;
    Ok(MatchingPowerVerdict {
        all_bi_cm: per_k.iter().all(|&b| b),
        per_k,
    })
}

#[derive(Clone, Debug, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Permit the long `n = 7` sweep.
    pub allow_long: bool,
    /// Directory for a resumable checkpoint file.
    pub checkpoint_dir: Option<PathBuf>,
}

impl SweepOptions {
    /// Options with the checkpoint directory taken from `BICM_CHECKPOINT_DIR`.
    pub fn from_env() -> Self {
        SweepOptions {
            checkpoint_dir: std::env::var_os("BICM_CHECKPOINT_DIR").map(PathBuf::from),
            ..Default::default()
        }
    }
}

const CHUNK: usize = 64;
pub(crate) const MAX_SWEEP: usize = 7;
pub(crate) const LONG_SWEEP: usize = 7;

fn expected_survivors(n: usize) -> Result<[(String, Graph); 2]> {
    Ok([
        (format!("K{n}"), Graph::complete(n)?),
        (format!("P{n}c"), Graph::path(n)?.complement()),
    ])
}

fn survivor_label(g: &Graph, targets: &[(String, Graph)]) -> Option<String> {
    targets
        .iter()
        .find(|(_, t)| g.is_isomorphic(t).is_some())
        .map(|(name, _)| name.clone())
}

/// Check every isomorphism class on `n` vertices without isolated vertices.
///
/// The claim holds when the classes whose matching powers are all bi-CM are
/// exactly the classes of `K_n` and `P_n^c`. Supported for `4 <= n <= 7`;
/// `n = 7` needs `opts.allow_long`.
pub fn verify_main_theorem(n: usize, field: PrimeField, opts: &SweepOptions) -> Result<Verdict> {
    if !(4..=MAX_SWEEP).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "the classification sweep supports 4 <= n <= {MAX_SWEEP}, got {n}"
        )));
    }
    if n >= LONG_SWEEP && !opts.allow_long {
        return Err(Error::OutOfRange(format!(
            "n = {n} is a long run; pass the long-run option to enable it"
        )));
    }
    let started = Instant::now();
    let targets = expected_survivors(n)?;
    let classes: Vec<Graph> = enumerate_graphs(n, true, true)?.collect();
    let mut checkpoint = match &opts.checkpoint_dir {
        Some(dir) => Some(Checkpoint::open(dir, n, field.modulus())?),
        None => None,
    };

    let pool = match opts.jobs {
        Some(j) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::OutOfRange(e.to_string()))?,
        ),
        None => None,
    };

    let mut audit = Audit::default();
    let mut witnesses = Vec::with_capacity(classes.len());
    let mut survivors = Vec::new();
    let mut resumed = 0;

    for chunk in classes.chunks(CHUNK) {
        let todo: Vec<(usize, &Graph)> = chunk
            .iter()
            .enumerate()
            .filter(|(_, g)| {
                checkpoint
                    .as_ref()
                    .is_none_or(|c| c.get(&to_graph6(g)).is_none())
            })
            .collect();
        let run = || {
            todo.par_iter()
                .map(|&(idx, g)| {
                    let mut a = Audit::default();
                    all_matching_powers_audited(g, field, &mut a).map(|v| (idx, v, a))
                })
                .collect::<Result<Vec<_>>>()
        };
        let computed = match &pool {
            Some(p) => p.install(run)?,
            None => run()?,
        };
        let mut results: Vec<Option<MatchingPowerVerdict>> = vec![None; chunk.len()];
        for (idx, v, a) in computed {
            audit.absorb(a);
            results[idx] = Some(v);
        }
        for (g, slot) in chunk.iter().zip(results) {
            let g6 = to_graph6(g);
            let verdict = match slot {
                Some(v) => v,
                None => {
                    resumed += 1;
                    let e = checkpoint
                        .as_ref()
                        .and_then(|c| c.get(&g6))
                        .expect("skipped only when stored");
                    MatchingPowerVerdict {
                        all_bi_cm: e.bicm,
                        per_k: e.per_k.clone(),
                    }
                }
            };
            if let Some(c) = checkpoint.as_mut() {
                c.record(CheckpointEntry {
                    graph6: g6.clone(),
                    bicm: verdict.all_bi_cm,
                    per_k: verdict.per_k.clone(),
                });
            }
            let label = survivor_label(g, &targets);
            let expected = label.is_some();
            if verdict.all_bi_cm {
                survivors.push(label.clone().unwrap_or_else(|| g6.clone()));
            }
            witnesses.push(
                Witness::new(label.unwrap_or_default())
                    .graph(g)
                    .fact("bi_cm", verdict.all_bi_cm)
                    .fact("expected", expected)
                    .fact("per_k", verdict.per_k)
                    .expect(verdict.all_bi_cm == expected),
            );
        }
        if let Some(c) = &checkpoint {
            c.save()?;
        }
    }

    survivors.sort();
    let count_ok = survivors.len() == targets.len();
    if !count_ok {
        witnesses.push(
            Witness::new("survivor count")
                .fact("expected", targets.len())
                .fact("found", survivors.len())
                .expect(false),
        );
    }
    let mut summary = format!(
        "{} classes, survivors: {}",
        classes.len(),
        if survivors.is_empty() {
            "none".to_string()
        } else {
            survivors.join(", ")
        }
    );
    if resumed > 0 {
        summary.push_str(&format!(" ({resumed} resumed from checkpoint)"));
    }
    Ok(Verdict::finish(
        "main-theorem",
        field,
        classes.len(),
        summary,
        witnesses,
        audit,
        started,
    ))
}

/// Graphs on two and three vertices: `K_2` and `K_3` have all matching powers
/// bi-CM, `P_3` does not.
pub fn verify_small_graphs(field: PrimeField) -> Result<Verdict> {
    let started = Instant::now();
    let mut audit = Audit::default();
    let mut witnesses = Vec::new();
    let mut count = 0;
    for n in 2..=3 {
        let complete = Graph::complete(n)?;
        for g in enumerate_graphs(n, true, true)? {
            let v = all_matching_powers_audited(&g, field, &mut audit)?;
            let expected = g.is_isomorphic(&complete).is_some();
            let label = if expected {
                format!("K{n}")
            } else {
                format!("P{n}")
            };
            count += 1;
            witnesses.push(
                Witness::new(label)
                    .graph(&g)
                    .fact("bi_cm", v.all_bi_cm)
                    .fact("expected", expected)
                    .expect(v.all_bi_cm == expected),
            );
        }
    }
    Ok(Verdict::finish(
        "small-graphs",
        field,
        count,
        format!("{count} classes on 2 and 3 vertices"),
        witnesses,
        audit,
        started,
    ))
}
