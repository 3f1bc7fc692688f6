//! Corpus-to-network construction: the four two-mode networks
//! (works×authors, works×journals, works×keywords, works×MSCs) and the
//! publication-year partition.

use std::sync::Arc;

use crate::entity::{
    record_author_keys, tokenize_keywords_counted, EntityMaps, PluralStemmer, Stemmer,
};
use crate::net::{NodeSetBuilder, Partition, Role, TwoModeNetwork};
use crate::record::Record;

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Count repeated tokens within a work instead of collapsing to a set.
    pub keyword_multiplicity: bool,
    /// Tokenize the title alongside the keyword phrases.
    pub tokenize_title: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            keyword_multiplicity: false,
            tokenize_title: false,
        }
    }
}

/// The four corpus networks over a shared works node set, plus the year
/// partition over it.
#[derive(Debug)]
pub struct NetworkBundle {
    pub wa: TwoModeNetwork,
    pub wj: TwoModeNetwork,
    pub wk: TwoModeNetwork,
    pub wm: TwoModeNetwork,
    pub year: Partition,
    pub counts: BuildCounts,
}

/// Coverage tallies gathered while building.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildCounts {
    pub works: usize,
    pub works_without_authors: usize,
    pub works_without_journal: usize,
    pub works_without_keywords: usize,
    pub works_without_msc: usize,
    pub works_without_year: usize,
}

/// Build the four networks and the year partition. Works appear in
/// record order; authors, journals, keywords, and MSCs in first-seen
/// order. Missing fields simply produce no arcs.
pub fn build_networks(records: &[Record], maps: &EntityMaps, options: BuildOptions) -> NetworkBundle {
    build_networks_with(records, maps, options, &PluralStemmer)
}

pub fn build_networks_with(
    records: &[Record],
    maps: &EntityMaps,
    options: BuildOptions,
    stemmer: &dyn Stemmer,
) -> NetworkBundle {
    let mut works = NodeSetBuilder::new();
    let mut authors = NodeSetBuilder::new();
    let mut journals = NodeSetBuilder::new();
    let mut keywords = NodeSetBuilder::new();
    let mut mscs = NodeSetBuilder::new();

    let mut wa_arcs = Vec::new();
    let mut wj_arcs = Vec::new();
    let mut wk_arcs = Vec::new();
    let mut wm_arcs = Vec::new();
    let mut years = Vec::new();
    let mut counts = BuildCounts::default();

    // journal node labels keyed by merged-entry index; canonical titles
    // can collide between distinct journals, so disambiguate with an id
    let mut journal_label: Vec<String> = Vec::with_capacity(maps.journals.len());
    {
        let mut used = std::collections::HashSet::new();
        for entry in &maps.journals {
            let zb = entry.zb_ids.iter().next().map(String::as_str).unwrap_or("");
            let mut label = if entry.canonical_title.is_empty() {
                format!("journal {}", zb)
            } else {
                entry.canonical_title.clone()
            };
            if !used.insert(label.clone()) {
                label = format!("{} [{}]", label, zb);
                used.insert(label.clone());
            }
            journal_label.push(label);
        }
    }

    for record in records {
        let w = works.intern(&record.id);
        years.push(record.year.map(|y| y as u32).unwrap_or(0));
        if record.year.is_none() {
            counts.works_without_year += 1;
        }

        let mut seen_authors = Vec::new();
        for key in record_author_keys(record).into_iter().flatten() {
            let canonical = maps.synonyms.canonical(&key).clone();
            if !seen_authors.contains(&canonical) {
                let a = authors.intern(canonical.as_str());
                wa_arcs.push((w, a, 1.0));
                seen_authors.push(canonical);
            }
        }
        if seen_authors.is_empty() {
            counts.works_without_authors += 1;
        }

        match record
            .journal
            .as_ref()
            .and_then(|jr| maps.journal_of_zb.get(&jr.zb_id))
        {
            Some(&ji) => {
                let j = journals.intern(&journal_label[ji]);
                wj_arcs.push((w, j, 1.0));
            }
            None => counts.works_without_journal += 1,
        }

        let title = if options.tokenize_title {
            record.title.as_deref()
        } else {
            None
        };
        let tokens =
            tokenize_keywords_counted(&record.keywords_raw, title, &maps.stopwords, stemmer);
        if tokens.is_empty() {
            counts.works_without_keywords += 1;
        }
        for (token, count) in tokens {
            let k = keywords.intern(&token);
            let weight = if options.keyword_multiplicity {
                count as f64
            } else {
                1.0
            };
            wk_arcs.push((w, k, weight));
        }

        if record.msc_codes.is_empty() {
            counts.works_without_msc += 1;
        }
        for code in &record.msc_codes {
            let m = mscs.intern(&code.code);
            // repeated codes on one work sum to their multiplicity
            wm_arcs.push((w, m, 1.0));
        }
    }

    counts.works = works.len();
    let works: Arc<_> = works.finish(Role::Works);
    let bundle = NetworkBundle {
        wa: TwoModeNetwork::new(Arc::clone(&works), authors.finish(Role::Authors), wa_arcs)
            .expect("works/authors roles differ and weights are positive"),
        wj: TwoModeNetwork::new(Arc::clone(&works), journals.finish(Role::Journals), wj_arcs)
            .expect("works/journals roles differ and weights are positive"),
        wk: TwoModeNetwork::new(Arc::clone(&works), keywords.finish(Role::Keywords), wk_arcs)
            .expect("works/keywords roles differ and weights are positive"),
        wm: TwoModeNetwork::new(Arc::clone(&works), mscs.finish(Role::Mscs), wm_arcs)
            .expect("works/mscs roles differ and weights are positive"),
        year: Partition::new(Arc::clone(&works), years)
            .expect("one year class per interned work"),
        counts,
    };
    bundle
}

/// Shrink a works×MSC network from 5-char to 3-char codes.
pub fn shrink_msc_to_3char(wm: &TwoModeNetwork) -> TwoModeNetwork {
    let (partition, labels) =
        Partition::by_label_key(wm.cols(), |l| l.chars().take(3).collect());
    wm.shrink(crate::net::Side::Cols, &partition, labels, Role::Shrunk)
        .expect("prefix partition covers every MSC node")
}
