//! Characteristic keywords per MSC class via TF-IDF over the
//! MSC×keyword network.

use crate::net::TwoModeNetwork;

/// Logarithm base for the IDF factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdfBase {
    Natural,
    Base2,
    Base10,
}

impl IdfBase {
    fn log(self, x: f64) -> f64 {
        match self {
            IdfBase::Natural => x.ln(),
            IdfBase::Base2 => x.log2(),
            IdfBase::Base10 => x.log10(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TfidfRow {
    pub msc: String,
    pub keyword: String,
    pub tf: f64,
    pub idf: f64,
    pub weight: f64,
}

/// TF-IDF per (MSC, keyword) link of `mk` (rows = MSC classes, cols =
/// keywords). TF is the link's share of its MSC row; IDF discounts
/// keywords spread over many classes, with classes counted among the
/// nonempty rows so ubiquitous keywords score exactly 0.
pub fn tfidf(mk: &TwoModeNetwork, base: IdfBase) -> Vec<TfidfRow> {
    let n_rows = mk.rows().len();
    let nonempty = (0..n_rows)
        .filter(|&m| mk.row_arcs(m).next().is_some())
        .count() as f64;
    let mut classes_of_keyword = vec![0u64; mk.cols().len()];
    for (_, k, _) in mk.arcs() {
        classes_of_keyword[k] += 1;
    }
    let mut out = Vec::with_capacity(mk.arc_count());
    for m in 0..n_rows {
        let row_sum: f64 = mk.row_arcs(m).map(|(_, w)| w).sum();
        for (k, w) in mk.row_arcs(m) {
            let tf = w / row_sum;
            let idf = base.log(nonempty / classes_of_keyword[k] as f64);
            out.push(TfidfRow {
                msc: mk.rows().label(m).to_string(),
                keyword: mk.cols().label(k).to_string(),
                tf,
                idf,
                weight: tf * idf,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::{NodeSet, Role};

    fn mk(n_msc: usize, keywords: &[&str], arcs: &[(usize, usize, f64)]) -> TwoModeNetwork {
        let rows = NodeSet::new(
            Role::Shrunk,
            (0..n_msc).map(|i| format!("{:02}X", i)).collect(),
        )
        .unwrap();
        let cols = NodeSet::new(
            Role::Keywords,
            keywords.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap();
        TwoModeNetwork::new(rows, cols, arcs.to_vec()).unwrap()
    }

    #[test]
    fn ubiquitous_keyword_scores_zero() {
        let net = mk(
            3,
            &["everywhere"],
            &[(0, 0, 2.0), (1, 0, 5.0), (2, 0, 1.0)],
        );
        for row in tfidf(&net, IdfBase::Natural) {
            assert_eq!(row.weight, 0.0);
        }
    }

    #[test]
    fn lone_keyword_in_one_of_ten_classes() {
        let mut arcs = vec![(0, 0, 1.0), (0, 1, 4.0)];
        for m in 1..10 {
            arcs.push((m, 1, 1.0));
        }
        let net = mk(10, &["rare", "common"], &arcs);
        let rows = tfidf(&net, IdfBase::Natural);
        let rare = rows
            .iter()
            .find(|r| r.keyword == "rare" && r.msc == "00X")
            .unwrap();
        assert!((rare.tf - 0.2).abs() < 1e-12);
        assert!((rare.weight - 0.2 * 10f64.ln()).abs() < 1e-5);
        assert!((rare.weight - 0.46052).abs() < 1e-4);
    }

    #[test]
    fn tf_sums_to_one_per_class() {
        let net = mk(
            3,
            &["a", "b", "c"],
            &[(0, 0, 1.0), (0, 1, 2.0), (1, 1, 3.0), (1, 2, 0.5), (2, 2, 4.0)],
        );
        for m in ["00X", "01X", "02X"] {
            let sum: f64 = tfidf(&net, IdfBase::Base2)
                .iter()
                .filter(|r| r.msc == m)
                .map(|r| r.tf)
                .sum();
            assert!((sum - 1.0).abs() < 1e-12, "TF of {m} sums to {sum}");
        }
    }

    #[test]
    fn empty_rows_do_not_dilute_idf() {
        // class 2 has no keywords: a keyword on both nonempty classes is
        // still ubiquitous
        let net = mk(3, &["k"], &[(0, 0, 1.0), (1, 0, 1.0)]);
        for row in tfidf(&net, IdfBase::Base10) {
            assert_eq!(row.weight, 0.0);
        }
    }
}
