use super::*;
use crate::error::Error;
use crate::graph::Graph;
use crate::homology::PrimeField;
use crate::ideal::{edge_ideal, SquarefreeIdeal};

const GF2: PrimeField = PrimeField::GF2;

#[test]
fn matching_power_verdict_examples() {
    let k5 = all_matching_powers_bicm(&Graph::complete(5).unwrap(), GF2).unwrap();
    assert_eq!(k5.per_k, vec![true, true]);
    assert!(k5.all_bi_cm);
    let p3 = all_matching_powers_bicm(&Graph::path(3).unwrap(), GF2).unwrap();
    assert_eq!(p3.per_k, vec![false]);
    let c4 = all_matching_powers_bicm(&Graph::cycle(4).unwrap(), GF2).unwrap();
    assert!(!c4.per_k[0]);
    let isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
    assert_eq!(
        all_matching_powers_bicm(&isolated, GF2),
        Err(Error::IsolatedVertex)
    );
}

#[test]
fn theorem_small_n() {
    let v = verify_main_theorem(4, GF2, &SweepOptions::default()).unwrap();
    assert!(v.passed, "{v:?}");
    assert_eq!(v.instances_checked, 7);
    assert_eq!(v.summary, "7 classes, survivors: K4, P4c");
    assert!(v.audit.eagon_reiner.checked > 0 && v.audit.is_clean());

    let v5 = verify_main_theorem(5, GF2, &SweepOptions::default()).unwrap();
    assert!(v5.passed);
    assert_eq!(v5.instances_checked, 23);

    for n in [3, 8] {
        assert!(matches!(
            verify_main_theorem(n, GF2, &SweepOptions::default()),
            Err(Error::OutOfRange(_))
        ));
    }
    assert!(verify_main_theorem(7, GF2, &SweepOptions::default()).is_err());
}

#[test]
fn verdicts_are_reproducible() {
    let a = verify_main_theorem(
        5,
        GF2,
        &SweepOptions {
            jobs: Some(1),
            ..Default::default()
        },
    )
    .unwrap();
    let b = verify_main_theorem(
        5,
        GF2,
        &SweepOptions {
            jobs: Some(3),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(a.witnesses, b.witnesses);
    assert_eq!(a.instances_checked, b.instances_checked);
    assert_eq!(a.audit, b.audit);
}

#[test]
fn checkpoint_resume_gives_same_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let opts = SweepOptions {
        checkpoint_dir: Some(dir.path().to_path_buf()),
        ..Default::default()
    };
    let first = verify_main_theorem(5, GF2, &opts).unwrap();
    let ck = Checkpoint::open(dir.path(), 5, 2).unwrap();
    assert_eq!(ck.len(), 23);
    let second = verify_main_theorem(5, GF2, &opts).unwrap();
    assert_eq!(first.witnesses, second.witnesses);
    assert!(second.summary.ends_with("(23 resumed from checkpoint)"));
}

#[test]
fn small_graph_preamble() {
    let v = verify_small_graphs(GF2).unwrap();
    assert!(v.passed);
    assert_eq!(v.instances_checked, 3);
    let labels: Vec<(&str, bool)> = v
        .witnesses
        .iter()
        .map(|w| (w.label.as_str(), w.facts["bi_cm"].as_bool().unwrap()))
        .collect();
    assert!(labels.contains(&("K2", true)));
    assert!(labels.contains(&("K3", true)));
    assert!(labels.contains(&("P3", false)));
}

#[test]
fn prop_kp_examples() {
    for n in 4..=6 {
        let v = verify_prop_kp(n, GF2).unwrap();
        assert!(v.passed, "{v:?}");
    }
    assert!(verify_prop_kp(3, GF2).is_err());
}

#[test]
fn lemma_notcm_examples() {
    let v = verify_lemma_notcm(4, 2, GF2).unwrap();
    assert!(v.passed);
    assert_eq!(v.instances_checked, 6);
    assert_eq!(verify_lemma_notcm(5, 3, GF2).unwrap().instances_checked, 10);
    assert!(verify_lemma_notcm(4, 4, GF2).is_err());
    assert!(verify_lemma_notcm(4, 1, GF2).is_err());
}

#[test]
fn proof_identities_examples() {
    let v = verify_proof_identities(6, GF2).unwrap();
    assert!(v.passed, "{:#?}", v.counterexamples().collect::<Vec<_>>());
    let claim = v
        .witnesses
        .iter()
        .find(|w| w.label == "P5c plus x6 missing x3")
        .unwrap();
    assert_eq!(claim.facts["excluded"], "x2x3x4x6");
    assert_eq!(claim.facts["cohen_macaulay"], false);
    let k1 = v.witnesses.iter().find(|w| w.label == "K4 branch").unwrap();
    assert_eq!(
        (
            k1.facts["depth_first"].as_u64(),
            k1.facts["depth_second"].as_u64()
        ),
        (Some(3), Some(4))
    );
    let k6 = v
        .witnesses
        .iter()
        .find(|w| w.label == "K6 split at x6" && w.k.is_none())
        .unwrap();
    assert_eq!(k6.facts["mu_P"], 5);
    assert_eq!(k6.facts["n_minus_depth_H"], 5);
    assert!(verify_proof_identities(4, GF2).is_err());
    assert!(verify_proof_identities(9, GF2).is_err());
}

#[test]
fn veronese_examples() {
    assert_eq!(
        t_spread_veronese(4, 2, 1).unwrap(),
        edge_ideal(&Graph::complete(4).unwrap())
    );
    let p5c = Graph::path(5).unwrap().complement();
    assert_eq!(t_spread_veronese(5, 2, 2).unwrap(), edge_ideal(&p5c));
    assert!(probe_veronese_conjecture(4, 2, 1, GF2).unwrap().passed);
    assert!(probe_veronese_conjecture(5, 2, 2, GF2).unwrap().passed);
    assert!(probe_veronese_conjecture(4, 3, 2, GF2).is_err());
    assert!(probe_veronese_conjecture(4, 1, 1, GF2).is_err());
    let u = t_spread_veronese(7, 3, 2).unwrap();
    assert!(u.contains(crate::ideal::Monomial::from_vars(&[0, 2, 4])));
    assert!(!u.contains(crate::ideal::Monomial::from_vars(&[0, 1, 4])));
}

#[test]
fn witnesses_serialize() {
    let v = verify_lemma_notcm(4, 2, GF2).unwrap();
    let json = serde_json::to_value(&v).unwrap();
    assert_eq!(json["claim_id"], "lemma-notcm");
    assert_eq!(json["witnesses"][0]["counterexample"], false);
    assert!(json["witnesses"][0]["ideal"]["gens"].is_array());
    let back: Verdict = serde_json::from_value(json).unwrap();
    assert_eq!(back.witnesses, v.witnesses);
    let _ = SquarefreeIdeal::maximal(2).unwrap();
}
