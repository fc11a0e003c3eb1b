use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{
    alexander_dual, betti_table, complex_is_cohen_macaulay, depth_via_links, profile_from_table,
    stanley_reisner, BiCmReport, HomologicalProfile, PrimeField,
};
use crate::ideal::SquarefreeIdeal;

const MAX_RECORDED: usize = 32;

/// How often one cross-route check ran and how often the routes disagreed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
}

impl Tally {
    fn add(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
    }
}

/// Tallies of cross-route checks run on every ideal a verifier touches.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Audit {
    pub ideals: usize,
    /// Linear Betti table vs. Cohen-Macaulay Alexander dual.
    pub eagon_reiner: Tally,
    /// `(I^∨)^∨ = I`.
    pub duality: Tally,
    /// `n - pd` from the Betti table vs. depth from link homology.
    pub auslander_buchsbaum: Tally,
    /// Reisner's criterion vs. `depth = dim`.
    pub cm_depth: Tally,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Audit {
    pub fn disagreements(&self) -> usize {
        self.eagon_reiner.failed
            + self.duality.failed
            + self.auslander_buchsbaum.failed
            + self.cm_depth.failed
    }

    pub fn is_clean(&self) -> bool {
        self.disagreements() == 0
    }

    pub fn absorb(&mut self, other: Audit) {
        self.ideals += other.ideals;
        self.eagon_reiner.add(other.eagon_reiner);
        self.duality.add(other.duality);
        self.auslander_buchsbaum.add(other.auslander_buchsbaum);
        self.cm_depth.add(other.cm_depth);
        for n in other.notes {
            if self.notes.len() < MAX_RECORDED {
                self.notes.push(n);
            }
        }
    }
}

fn record(
    tally: &mut Tally,
    notes: &mut Vec<String>,
    ok: bool,
    what: &str,
    ideal: &SquarefreeIdeal,
) {
    tally.checked += 1;
    if !ok {
        tally.failed += 1;
        if notes.len() < MAX_RECORDED {
            notes.push(format!("{what}: {ideal}"));
        }
    }
}

struct Checked {
    profile: HomologicalProfile,
    /// Betti-table linearity and dual Cohen-Macaulayness, when equigenerated.
    linear: Option<(bool, bool)>,
    cm: bool,
}

fn check(ideal: &SquarefreeIdeal, field: PrimeField, audit: &mut Audit) -> Result<Checked> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    audit.ideals += 1;
    let delta = stanley_reisner(ideal)?;
    let table = betti_table(ideal, field)?;
    let profile = profile_from_table(ideal, &table)?;

    record(
        &mut audit.auslander_buchsbaum,
        &mut audit.notes,
        depth_via_links(&delta, field) == Some(profile.depth),
        "depth from links differs from n - pd",
        ideal,
    );

    let cm = complex_is_cohen_macaulay(&delta, field);
    record(
        &mut audit.cm_depth,
        &mut audit.notes,
        cm == (profile.depth == profile.dim),
        "Reisner disagrees with depth = dim",
        ideal,
    );

    let dual = alexander_dual(ideal)?;
    let involution = alexander_dual(&dual)? == *ideal;
    record(
        &mut audit.duality,
        &mut audit.notes,
        involution,
        "Alexander duality is not an involution",
        ideal,
    );

    let linear = match ideal.generating_degree() {
        Some(d) => {
            let linear = table.is_linear(d);
            let dual_cm = complex_is_cohen_macaulay(&stanley_reisner(&dual)?, field);
            record(
                &mut audit.eagon_reiner,
                &mut audit.notes,
                linear == dual_cm,
                "Eagon-Reiner routes disagree",
                ideal,
            );
            Some((linear, dual_cm))
        }
        None => None,
    };
    Ok(Checked {
        profile,
        linear,
        cm,
    })
}

/// [`crate::homology::bi_cm_report`] with every cross-route check recorded.
pub fn audited_bi_cm(
    ideal: &SquarefreeIdeal,
    field: PrimeField,
    audit: &mut Audit,
) -> Result<BiCmReport> {
    let c = check(ideal, field, audit)?;
    let (linear, dual_cm) = c.linear.ok_or(Error::NotEquigenerated)?;
    Ok(BiCmReport {
        cohen_macaulay: c.cm,
        linear_resolution: linear,
        dual_cohen_macaulay: dual_cm,
    })
}

pub fn audited_cohen_macaulay(
    ideal: &SquarefreeIdeal,
    field: PrimeField,
    audit: &mut Audit,
) -> Result<bool> {
    Ok(check(ideal, field, audit)?.cm)
}

pub fn audited_profile(
    ideal: &SquarefreeIdeal,
    field: PrimeField,
    audit: &mut Audit,
) -> Result<HomologicalProfile> {
    Ok(check(ideal, field, audit)?.profile)
}
