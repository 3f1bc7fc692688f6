//! End-to-end checks on the 12-record hand-written corpus.

use std::collections::BTreeSet;

use zbnet::analytics::{author_indices, collaboration_networks, subfield_pipeline};
use zbnet::builder::{build_networks, BuildOptions, NetworkBundle};
use zbnet::entity::{build_entity_maps, EntityMaps, StopwordList};
use zbnet::record::{parse_records, Encoding, ParseOutcome, Record};
use zbnet::tex::TexNormTable;

const FIXTURE: &str = include_str!("data/fixture.txt");

fn parse() -> ParseOutcome {
    let norm = TexNormTable::default();
    parse_records(FIXTURE.as_bytes(), Encoding::Utf8, &norm)
}

fn maps(records: &[Record]) -> EntityMaps {
    build_entity_maps(
        records,
        Vec::new(),
        Default::default(),
        &[],
        StopwordList::default(),
    )
    .unwrap()
}

fn bundle() -> NetworkBundle {
    let outcome = parse();
    let maps = maps(&outcome.records);
    build_networks(&outcome.records, &maps, BuildOptions::default())
}

#[test]
fn twelve_records_three_warnings() {
    let outcome = parse();
    assert_eq!(outcome.records.len(), 12);
    let mut categories: Vec<&str> = outcome.warnings.iter().map(|w| w.category()).collect();
    categories.sort_unstable();
    assert_eq!(categories, vec!["ai_au_mismatch", "bad_year", "duplicate_work_id"]);
}

#[test]
fn duplicate_id_keeps_the_later_record() {
    let outcome = parse();
    let last = outcome
        .records
        .iter()
        .find(|r| r.id == "10000012")
        .unwrap();
    assert_eq!(
        last.title.as_deref(),
        Some("Fixed point theorems for multivalued maps")
    );
}

#[test]
fn entity_maps_merge_synonyms_and_journals() {
    let outcome = parse();
    let maps = maps(&outcome.records);
    assert_eq!(maps.journals.len(), 3);
    let dm = maps
        .journals
        .iter()
        .find(|j| j.zb_ids.contains("00001111"))
        .unwrap();
    assert!(dm.zb_ids.contains("00001112"));
    assert_eq!(dm.canonical_title, "Discrete Mathematics");
}

#[test]
fn network_sizes_match_hand_counts() {
    let b = bundle();
    assert_eq!(b.counts.works, 12);
    // canonical authors: novak.j, smith.a, kumar.r, li.w, oregan.donal,
    // pecaric.josip-e, et-al., brown.c, extra.n
    assert_eq!(b.wa.cols().len(), 9);
    assert_eq!(b.wa.arc_count(), 19);
    assert_eq!(b.wj.cols().len(), 3);
    assert_eq!(b.wj.arc_count(), 11);
    assert_eq!(b.wm.cols().len(), 11);
    assert_eq!(b.wm.arc_count(), 18);
    assert_eq!(b.wk.arc_count(), 34);
    assert_eq!(
        b.year.classes(),
        &[1998, 1999, 1999, 2000, 2000, 2001, 2001, 2002, 2002, 0, 2003, 2003]
    );
    let labels: BTreeSet<&str> = b.wa.cols().labels().iter().map(String::as_str).collect();
    assert!(labels.contains("oregan.donal"));
    assert!(!labels.contains("o'regan.d"));
    assert!(labels.contains("pecaric.josip-e"));
    assert!(!labels.contains("pecaric.j-e"));
}

#[test]
fn collaboration_matches_hand_computation() {
    let b = bundle();
    let collab = collaboration_networks(&b.wa, true).unwrap();
    let authors = collab.co.nodes();
    let idx = |label: &str| authors.position(label).unwrap();

    // work counts on the Co diagonal
    for (label, works) in [
        ("novak.j", 3.0),
        ("smith.a", 3.0),
        ("kumar.r", 3.0),
        ("li.w", 2.0),
        ("oregan.donal", 2.0),
        ("pecaric.josip-e", 2.0),
        ("brown.c", 2.0),
        ("extra.n", 1.0),
    ] {
        assert_eq!(collab.co.loop_weight(idx(label)), works, "{label}");
    }
    assert_eq!(collab.co.weight(idx("novak.j"), idx("smith.a")), 2.0);

    // Ct': five multi-author works once `et al.` is excluded
    assert!((collab.ct_prime.total_weight() - 5.0).abs() < 1e-12);
    let ct = |a: &str, b_: &str| {
        let (u, v) = (idx(a), idx(b_));
        let (u, v) = (u.min(v), u.max(v));
        collab
            .ct_prime
            .edges()
            .iter()
            .find(|&&(x, y, _)| (x, y) == (u, v))
            .map_or(0.0, |&(_, _, w)| w)
    };
    assert!((ct("novak.j", "smith.a") - 2.0).abs() < 1e-12);
    assert!((ct("smith.a", "kumar.r") - 1.0 / 3.0).abs() < 1e-12);
    assert!((ct("pecaric.josip-e", "kumar.r") - 1.0).abs() < 1e-12);
    assert!((ct("brown.c", "extra.n") - 1.0).abs() < 1e-12);

    // fractional productivity
    for (label, cn_ii) in [
        ("novak.j", 2.0),
        ("smith.a", 4.0 / 3.0),
        ("kumar.r", 11.0 / 6.0),
        ("li.w", 4.0 / 3.0),
        ("oregan.donal", 2.0),
        ("pecaric.josip-e", 1.5),
        ("brown.c", 1.5),
        ("extra.n", 0.5),
    ] {
        assert!(
            (collab.cn.loop_weight(idx(label)) - cn_ii).abs() < 1e-12,
            "{label}"
        );
    }
    let trace: f64 = (0..authors.len()).map(|i| collab.cn.loop_weight(i)).sum();
    assert!((trace - 12.0).abs() < 1e-9);

    let rows = author_indices(&collab);
    for row in &rows {
        assert!((row.s + row.k - 1.0).abs() < 1e-15);
    }
    let novak = rows.iter().find(|r| r.author == "novak.j").unwrap();
    assert!((novak.s - 2.0 / 3.0).abs() < 1e-12);
    assert_eq!(novak.total_works, 3);
}

#[test]
fn graph_theory_subfield() {
    let b = bundle();
    let sub = subfield_pipeline(&b, "05C").unwrap();
    assert_eq!(
        &sub.tau.classes()[..3],
        &[1, 1, 1],
        "the first three works are graph theory"
    );
    assert_eq!(sub.tau.classes().iter().filter(|&&c| c == 1).count(), 3);
    // co-classification: 05C in all 3, 11A in work 1, 60J in work 3
    assert_eq!(
        sub.coclassification,
        vec![
            ("05C".to_string(), 3.0),
            ("11A".to_string(), 1.0),
            ("60J".to_string(), 1.0),
        ]
    );
}
