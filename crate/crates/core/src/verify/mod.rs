//! Verifiers for the classification and the facts its proof relies on.
//!
//! Each verifier returns a [`Verdict`]: a pass flag, the number of instances
//! examined, and witness records for every instance (counterexamples first).
//! Every ideal a verifier touches also passes through an [`Audit`], which
//! re-derives the same facts along independent routes and counts
//! disagreements.

mod audit;
mod checkpoint;
mod claims;
mod theorem;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::graph::{to_graph6, Graph};
use crate::homology::PrimeField;
use crate::ideal::{IdealJson, SquarefreeIdeal};

pub use audit::{audited_bi_cm, audited_cohen_macaulay, audited_profile, Audit, Tally};
pub use checkpoint::{Checkpoint, CheckpointEntry};
pub use claims::{
    probe_veronese_conjecture, t_spread_veronese, verify_lemma_notcm, verify_proof_identities,
    verify_prop_kp, veronese_grid,
};
pub use theorem::{
    all_matching_powers_bicm, verify_main_theorem, verify_small_graphs, MatchingPowerVerdict,
    SweepOptions,
};

/// One confirmation or counterexample record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub counterexample: bool,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default)]
    pub facts: BTreeMap<String, Value>,
}

impl Witness {
    pub fn new(label: impl Into<String>) -> Self {
        Witness {
            counterexample: false,
            label: label.into(),
            graph6: None,
            ideal: None,
            k: None,
            facts: BTreeMap::new(),
        }
    }

    pub fn graph(mut self, g: &Graph) -> Self {
        self.graph6 = Some(to_graph6(g));
        self
    }

    pub fn ideal(mut self, i: &SquarefreeIdeal) -> Self {
        self.ideal = Some(i.to_json());
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn fact(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.facts.insert(key.to_string(), value.into());
        self
    }

    /// Mark as a counterexample unless `ok`.
    pub fn expect(mut self, ok: bool) -> Self {
        self.counterexample |= !ok;
        self
    }
}

/// A witness with field-independent content only: label, graph6, `k`, facts.
pub type Outcome = (
    String,
    Option<String>,
    Option<usize>,
    BTreeMap<String, Value>,
);

/// Structured report of one verifier run.
///
/// `passed` holds exactly when no witness is a counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim_id: String,
    pub p: u32,
    pub passed: bool,
    pub instances_checked: usize,
    pub summary: String,
    pub witnesses: Vec<Witness>,
    pub audit: Audit,
    /// Wall time in seconds.
    pub elapsed: f64,
}

impl Verdict {
    pub(crate) fn finish(
        claim_id: &str,
        field: PrimeField,
        instances_checked: usize,
        summary: String,
        mut witnesses: Vec<Witness>,
        audit: Audit,
        started: Instant,
    ) -> Verdict {
        // stable: counterexamples first, each group in generation order
        witnesses.sort_by_key(|w| !w.counterexample);
        let passed = !witnesses.iter().any(|w| w.counterexample) && audit.is_clean();
        Verdict {
            claim_id: claim_id.to_string(),
            p: field.modulus(),
            passed,
            instances_checked,
            summary,
            witnesses,
            audit,
            elapsed: started.elapsed().as_secs_f64(),
        }
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.counterexample)
    }

    /// Witness records with the field and timing stripped, for comparing runs.
    pub fn outcomes(&self) -> Vec<Outcome> {
        self.witnesses
            .iter()
            .map(|w| (w.label.clone(), w.graph6.clone(), w.k, w.facts.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests;
