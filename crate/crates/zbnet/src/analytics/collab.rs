//! Collaboration networks over the author set and the per-author
//! self-sufficiency / collaborativeness indices.

use crate::entity::AuthorKey;
use crate::error::NetError;
use crate::net::{
    multiply, DirectedNetwork, NormalizeMode, Product, TwoModeNetwork, UndirectedNetwork,
};

/// Co-authorship networks derived from works×authors:
/// `co` counts common works (loops = work counts), `n` and `nprime` are
/// the normalized works×authors networks, `ct_prime` spreads each work
/// evenly over its author pairs, and `cn` spreads each work evenly over
/// its authors (loops = fractional productivity).
#[derive(Debug)]
pub struct CollabBundle {
    pub co: DirectedNetwork,
    pub n: TwoModeNetwork,
    pub nprime: TwoModeNetwork,
    pub ct_prime: UndirectedNetwork,
    pub cn: DirectedNetwork,
}

fn expect_one_mode(p: Product) -> DirectedNetwork {
    match p {
        Product::OneMode(d) => d,
        Product::TwoMode(_) => unreachable!("author×author product is one-mode"),
    }
}

/// Derive the collaboration bundle from a works×authors network. When
/// `exclude_pseudo` is set, `et al.` pseudo-author columns are dropped
/// before anything is computed.
pub fn collaboration_networks(
    wa: &TwoModeNetwork,
    exclude_pseudo: bool,
) -> Result<CollabBundle, NetError> {
    let wa = if exclude_pseudo {
        let drop: Vec<usize> = wa
            .cols()
            .labels()
            .iter()
            .enumerate()
            .filter(|(_, l)| AuthorKey::new(l.as_str()).is_pseudo())
            .map(|(i, _)| i)
            .collect();
        wa.without_cols(&drop)?
    } else {
        wa.clone()
    };
    let aw = wa.transpose();
    let co = expect_one_mode(multiply(&aw, &wa)?);
    let n = wa.row_normalize(NormalizeMode::ByOutdeg);
    let nprime = wa.row_normalize(NormalizeMode::ByOutdegMinus1);
    let ct_prime = expect_one_mode(multiply(&n.transpose(), &nprime)?).symmetrize_drop_diagonal();
    let cn = expect_one_mode(multiply(&aw, &n)?);
    Ok(CollabBundle {
        co,
        n,
        nprime,
        ct_prime,
        cn,
    })
}

/// Per-author index row: fractional productivity, work count, and the
/// derived self-sufficiency S and collaborativeness K = 1 − S.
#[derive(Debug, Clone, PartialEq)]
pub struct AuthorIndexRow {
    pub author: String,
    pub cn_ii: f64,
    pub total_works: u64,
    pub s: f64,
    pub k: f64,
}

/// Index table for every author with at least one work, in node order.
pub fn author_indices(bundle: &CollabBundle) -> Vec<AuthorIndexRow> {
    let nodes = bundle.cn.nodes();
    (0..nodes.len())
        .filter_map(|i| {
            let total = bundle.co.loop_weight(i);
            if total <= 0.0 {
                return None;
            }
            let cn_ii = bundle.cn.loop_weight(i);
            let s = cn_ii / total;
            Some(AuthorIndexRow {
                author: nodes.label(i).to_string(),
                cn_ii,
                total_works: total.round() as u64,
                s,
                k: 1.0 - s,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::{NodeSet, Role};

    fn wa(n_works: usize, authors: &[&str], arcs: &[(usize, usize)]) -> TwoModeNetwork {
        let works = NodeSet::new(
            Role::Works,
            (0..n_works).map(|i| format!("w{}", i + 1)).collect(),
        )
        .unwrap();
        let authors = NodeSet::new(
            Role::Authors,
            authors.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap();
        TwoModeNetwork::new(
            works,
            authors,
            arcs.iter().map(|&(w, a)| (w, a, 1.0)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_author_work() {
        let b = collaboration_networks(&wa(1, &["a", "b"], &[(0, 0), (0, 1)]), false).unwrap();
        assert_eq!(b.co.loop_weight(0), 1.0);
        assert_eq!(b.co.weight(0, 1), 1.0);
        assert_eq!(b.co.weight(1, 0), 1.0);
        assert_eq!(b.ct_prime.edges(), &[(0, 1, 1.0)]);
        for (u, v) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!((b.cn.weight(u, v) - 0.5).abs() < 1e-12);
        }
        assert!((b.cn.row_sum(0) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn three_author_clique_weight() {
        let b =
            collaboration_networks(&wa(1, &["a", "b", "c"], &[(0, 0), (0, 1), (0, 2)]), false)
                .unwrap();
        assert_eq!(b.ct_prime.edge_count(), 3);
        for &(_, _, w) in b.ct_prime.edges() {
            assert!((w - 1.0 / 3.0).abs() < 1e-12);
        }
        let total: f64 = b.ct_prime.total_weight();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn solo_work_contributes_nothing_to_ct() {
        let b = collaboration_networks(&wa(1, &["a"], &[(0, 0)]), false).unwrap();
        assert_eq!(b.ct_prime.edge_count(), 0);
        assert_eq!(b.cn.loop_weight(0), 1.0);
    }

    #[test]
    fn soloist_indices() {
        let net = wa(3, &["a"], &[(0, 0), (1, 0), (2, 0)]);
        let b = collaboration_networks(&net, false).unwrap();
        let rows = author_indices(&b);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].cn_ii, 3.0);
        assert_eq!(rows[0].total_works, 3);
        assert_eq!(rows[0].s, 1.0);
        assert_eq!(rows[0].k, 0.0);
    }

    #[test]
    fn half_share_for_two_author_work() {
        let net = wa(1, &["a", "b"], &[(0, 0), (0, 1)]);
        let rows = author_indices(&collaboration_networks(&net, false).unwrap());
        assert_eq!(rows[0].cn_ii, 0.5);
        assert_eq!(rows[0].total_works, 1);
        assert_eq!(rows[0].k, 0.5);
    }

    #[test]
    fn pseudo_author_dropped() {
        let net = wa(1, &["a", "et-al."], &[(0, 0), (0, 1)]);
        let b = collaboration_networks(&net, true).unwrap();
        assert_eq!(b.co.nodes().len(), 1);
        assert_eq!(b.cn.loop_weight(0), 1.0);
        let kept = collaboration_networks(&net, false).unwrap();
        assert_eq!(kept.co.nodes().len(), 2);
    }

    #[test]
    fn four_work_fixture_matches_hand_table() {
        // w1{a}, w2{a,b}, w3{a,b,c}, w4{c}
        let net = wa(
            4,
            &["a", "b", "c"],
            &[(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 2)],
        );
        let b = collaboration_networks(&net, false).unwrap();
        let rows = author_indices(&b);
        // cn_aa = 1 + 1/2 + 1/3, cn_bb = 1/2 + 1/3, cn_cc = 1/3 + 1
        assert!((rows[0].cn_ii - (1.0 + 0.5 + 1.0 / 3.0)).abs() < 1e-12);
        assert!((rows[1].cn_ii - (0.5 + 1.0 / 3.0)).abs() < 1e-12);
        assert!((rows[2].cn_ii - (1.0 / 3.0 + 1.0)).abs() < 1e-12);
        assert_eq!(rows[0].total_works, 3);
        assert_eq!(rows[1].total_works, 2);
        assert_eq!(rows[2].total_works, 2);
        // self-contributions over all authors account for every work once
        let cn_trace: f64 = (0..3).map(|i| b.cn.loop_weight(i)).sum();
        assert!((cn_trace - 4.0).abs() < 1e-9);
        // each row sums to the author's work count
        for (i, works) in [3.0, 2.0, 2.0].into_iter().enumerate() {
            assert!((b.cn.row_sum(i) - works).abs() < 1e-9);
        }
        // two multi-author works -> ct' weights sum to 2
        assert!((b.ct_prime.total_weight() - 2.0).abs() < 1e-12);
    }
}
