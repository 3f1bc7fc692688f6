//! Subfield extraction: restrict the corpus networks to the works
//! classified under an MSC prefix and tally their co-classifications.

use std::sync::Arc;

use crate::builder::NetworkBundle;
use crate::error::AnalyticsError;
use crate::net::{Partition, Role, Side, TwoModeNetwork};

/// Networks restricted to the works of one MSC subfield. `wm` keeps all
/// MSC columns so co-classification with other areas stays visible.
#[derive(Debug)]
pub struct SubfieldBundle {
    pub prefix: String,
    /// 1 = work belongs to the subfield.
    pub tau: Partition,
    pub wa: TwoModeNetwork,
    pub wj: TwoModeNetwork,
    pub wk: TwoModeNetwork,
    pub wm: TwoModeNetwork,
    /// Work counts per 3-char class over the subfield works.
    pub coclassification: Vec<(String, f64)>,
}

fn trivial_partition(over: &Arc<crate::net::NodeSet>) -> Partition {
    Partition::new(Arc::clone(over), vec![0; over.len()]).expect("sizes match by construction")
}

/// Restrict all four networks to the works with at least one MSC under
/// `prefix`. The empty prefix selects every work, matched or not.
pub fn subfield_pipeline(
    bundle: &NetworkBundle,
    prefix: &str,
) -> Result<SubfieldBundle, AnalyticsError> {
    let wm = &bundle.wm;
    let works = wm.rows();
    // σ over MSC codes, then τ over works
    let sigma: Vec<bool> = wm
        .cols()
        .labels()
        .iter()
        .map(|l| l.starts_with(prefix))
        .collect();
    let tau_classes: Vec<u32> = if prefix.is_empty() {
        vec![1; works.len()]
    } else {
        (0..works.len())
            .map(|w| u32::from(wm.row_arcs(w).any(|(m, _)| sigma[m])))
            .collect()
    };
    let tau = Partition::new(Arc::clone(works), tau_classes)?;

    let restrict = |net: &TwoModeNetwork| -> Result<TwoModeNetwork, AnalyticsError> {
        let cols = trivial_partition(net.cols());
        Ok(net.extract(&tau, &[1], &cols, &[0], false)?)
    };
    let wa = restrict(&bundle.wa)?;
    let wj = restrict(&bundle.wj)?;
    let wk = restrict(&bundle.wk)?;
    let wm_sub = restrict(wm)?;

    // work counts per 3-char class: binarize after the 3-char shrink so a
    // work with several codes in one class counts once, then collapse all
    // works into a single node
    let (p3, labels3) = Partition::by_label_key(wm_sub.cols(), |l| l.chars().take(3).collect());
    let wm3 = wm_sub
        .shrink(Side::Cols, &p3, labels3, Role::Shrunk)?
        .binarize();
    let all_works = trivial_partition(wm3.rows());
    let collapsed = wm3.shrink(
        Side::Rows,
        &all_works,
        vec!["subfield works".to_string()],
        Role::Works,
    )?;
    let mut coclassification: Vec<(String, f64)> = collapsed
        .arcs()
        .map(|(_, m, w)| (collapsed.cols().label(m).to_string(), w))
        .collect();
    coclassification.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.0.cmp(&b.0))
    });

    Ok(SubfieldBundle {
        prefix: prefix.to_string(),
        tau,
        wa,
        wj,
        wk,
        wm: wm_sub,
        coclassification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::{build_networks, BuildOptions};
    use crate::entity::{build_entity_maps, StopwordList};
    use crate::record::{parse_records, Encoding};
    use crate::tex::TexNormTable;

    fn bundle(text: &str) -> NetworkBundle {
        let norm = TexNormTable::default();
        let outcome = parse_records(text.as_bytes(), Encoding::Utf8, &norm);
        let maps = build_entity_maps(
            &outcome.records,
            Vec::new(),
            Default::default(),
            &[],
            StopwordList::default(),
        )
        .unwrap();
        build_networks(&outcome.records, &maps, BuildOptions::default())
    }

    const CORPUS: &str = "\
an 1\nai a.a\nau A\ncc *05C35 05C38 11A41\nut graph; tree\npy 2000\n\
an 2\nai b.b\nau B\ncc *05C10\nut planarity\npy 2001\n\
an 3\nai a.a; b.b\nau A; B\ncc *11A41\nut prime\npy 2001\n\
an 4\nai c.c\nau C\ncc *60J10 05C81\nut random walk\npy 2002\n";

    #[test]
    fn tau_selects_graph_theory_works() {
        let b = bundle(CORPUS);
        let sub = subfield_pipeline(&b, "05C").unwrap();
        assert_eq!(sub.tau.classes(), &[1, 1, 0, 1]);
        assert_eq!(sub.wa.rows().len(), 3);
        assert_eq!(sub.wm.rows().len(), 3);
    }

    #[test]
    fn coclassification_counts() {
        let b = bundle(CORPUS);
        let sub = subfield_pipeline(&b, "05C").unwrap();
        // works 1,2,4 are in the subfield: 05C appears in all three
        // (binarized per work), 11A in work 1, 60J in work 4
        assert_eq!(
            sub.coclassification,
            vec![
                ("05C".to_string(), 3.0),
                ("11A".to_string(), 1.0),
                ("60J".to_string(), 1.0),
            ]
        );
    }

    #[test]
    fn unmatched_prefix_is_empty_not_an_error() {
        let b = bundle(CORPUS);
        let sub = subfield_pipeline(&b, "99Z").unwrap();
        assert_eq!(sub.wa.rows().len(), 0);
        assert_eq!(sub.wm.arc_count(), 0);
        assert!(sub.coclassification.is_empty());
    }

    #[test]
    fn empty_prefix_selects_everything() {
        let b = bundle(CORPUS);
        let sub = subfield_pipeline(&b, "").unwrap();
        assert_eq!(sub.wa.rows().len(), b.wa.rows().len());
        assert_eq!(sub.wa.arc_count(), b.wa.arc_count());
        assert_eq!(sub.wk.arc_count(), b.wk.arc_count());
        assert_eq!(sub.wm.total_weight(), b.wm.total_weight());
    }
}
