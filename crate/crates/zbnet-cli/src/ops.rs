//! The five pipeline commands and their output files.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use zbnet::analytics::{
    author_indices, bradford_curve, collaboration_networks, distribution_of, journal_bias,
    journal_subject_percentage, journal_subject_profile, link_islands, powerlaw_alpha, ps_core,
    subfield_pipeline, tfidf, CollabBundle,
};
use zbnet::builder::{build_networks_with, shrink_msc_to_3char, BuildOptions, NetworkBundle};
use zbnet::entity::{
    build_entity_maps, load_external_ids, load_journal_rules, load_merge_rules, EntityMaps,
    PluralStemmer, StopwordList,
};
use zbnet::net::{multiply, Product, Side, TwoModeNetwork};
use zbnet::pajek::{write_clu_string, write_net_string, PajekNet};
use zbnet::record::{parse_records, write_records, Encoding, Record};
use zbnet::tex::TexNormTable;

use crate::config::PipelineConfig;

/// Write a file atomically: temp file in the same directory, then rename.
pub fn atomic_write(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)
        .with_context(|| format!("cannot create {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create temp file in {}", dir.display()))?;
    tmp.write_all(contents)?;
    tmp.persist(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn store_path(config: &PipelineConfig, name: &str) -> PathBuf {
    config.out.join(name)
}

fn load_stopwords(config: &PipelineConfig) -> Result<StopwordList> {
    Ok(match &config.stopwords {
        Some(path) => StopwordList::from_file(path)
            .with_context(|| format!("cannot read stopwords {}", path.display()))?,
        None => StopwordList::default(),
    })
}

fn load_maps(config: &PipelineConfig, records: &[Record]) -> Result<EntityMaps> {
    let merge_rules = match &config.author_merge_rules {
        Some(p) => load_merge_rules(p)?,
        None => Vec::new(),
    };
    let external_ids = match &config.author_external_ids {
        Some(p) => load_external_ids(p)?,
        None => BTreeMap::new(),
    };
    let journal_rules = match &config.journal_merge_rules {
        Some(p) => load_journal_rules(p)?,
        None => Vec::new(),
    };
    Ok(build_entity_maps(
        records,
        merge_rules,
        external_ids,
        &journal_rules,
        load_stopwords(config)?,
    )?)
}

/// Re-read the canonical record store written by `ingest`.
fn load_store(config: &PipelineConfig) -> Result<Vec<Record>> {
    let path = store_path(config, "records.txt");
    let bytes = std::fs::read(&path).map_err(|_| {
        anyhow!(
            "record store {} not found: run ingest first",
            path.display()
        )
    })?;
    let norm = TexNormTable::default();
    Ok(parse_records(&bytes, Encoding::Utf8, &norm).records)
}

fn load_bundle(config: &PipelineConfig) -> Result<(Vec<Record>, EntityMaps, NetworkBundle)> {
    let records = load_store(config)?;
    let maps = load_maps(config, &records)?;
    let options = BuildOptions {
        keyword_multiplicity: config.keyword_multiplicity,
        tokenize_title: config.tokenize_title,
    };
    let bundle = build_networks_with(&records, &maps, options, &PluralStemmer);
    Ok((records, maps, bundle))
}

fn csv_string(rows: &[Vec<String>]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row)?;
    }
    Ok(w.into_inner()?)
}

fn json_string(value: &serde_json::Value) -> Vec<u8> {
    let mut out = serde_json::to_string_pretty(value).expect("serializable value");
    out.push('\n');
    out.into_bytes()
}

pub fn cmd_ingest(config: &PipelineConfig) -> Result<()> {
    let input = config
        .records
        .as_ref()
        .ok_or_else(|| anyhow!("config key `records` is required for ingest"))?;
    if !input.exists() {
        bail!("input path {} does not exist", input.display());
    }
    let bytes = std::fs::read(input)
        .with_context(|| format!("cannot read {}", input.display()))?;
    let encoding = if config.latin1 {
        Encoding::Latin1
    } else {
        Encoding::Utf8
    };
    let norm = TexNormTable::default();
    let outcome = parse_records(&bytes, encoding, &norm);
    let maps = load_maps(config, &outcome.records)?;

    atomic_write(
        &store_path(config, "records.txt"),
        write_records(&outcome.records).as_bytes(),
    )?;

    let mut synonym_rows = vec![vec!["key".to_string(), "canonical".to_string()]];
    for (key, canonical) in maps.synonyms.entries() {
        synonym_rows.push(vec![key.to_string(), canonical.to_string()]);
    }
    atomic_write(
        &store_path(config, "author_synonyms.csv"),
        &csv_string(&synonym_rows)?,
    )?;

    let mut journal_rows = vec![vec![
        "zb_ids".to_string(),
        "canonical_title".to_string(),
        "issns".to_string(),
    ]];
    for entry in &maps.journals {
        journal_rows.push(vec![
            entry.zb_ids.iter().cloned().collect::<Vec<_>>().join(";"),
            entry.canonical_title.clone(),
            entry.issns.iter().cloned().collect::<Vec<_>>().join(";"),
        ]);
    }
    atomic_write(
        &store_path(config, "journals.csv"),
        &csv_string(&journal_rows)?,
    )?;

    let mut by_category: BTreeMap<&str, u64> = BTreeMap::new();
    for w in &outcome.warnings {
        *by_category.entry(w.category()).or_insert(0) += 1;
    }
    let mut warning_rows = vec![vec!["category".to_string(), "count".to_string()]];
    for (category, count) in &by_category {
        warning_rows.push(vec![category.to_string(), count.to_string()]);
    }
    atomic_write(
        &store_path(config, "warnings.csv"),
        &csv_string(&warning_rows)?,
    )?;

    println!(
        "ingest: {} records, {} warnings, {} authors at homonym risk",
        outcome.records.len(),
        outcome.warnings.len(),
        maps.homonym_risk.len()
    );
    Ok(())
}

fn write_net_file(config: &PipelineConfig, name: &str, net: &PajekNet) -> Result<()> {
    atomic_write(&store_path(config, name), write_net_string(net).as_bytes())
}

pub fn cmd_build(config: &PipelineConfig) -> Result<()> {
    let (_, _, bundle) = load_bundle(config)?;
    write_net_file(config, "wa.net", &PajekNet::TwoMode(bundle.wa.clone()))?;
    write_net_file(config, "wj.net", &PajekNet::TwoMode(bundle.wj.clone()))?;
    write_net_file(config, "wk.net", &PajekNet::TwoMode(bundle.wk.clone()))?;
    write_net_file(config, "wm.net", &PajekNet::TwoMode(bundle.wm.clone()))?;
    atomic_write(
        &store_path(config, "year.clu"),
        write_clu_string(&bundle.year).as_bytes(),
    )?;

    let sizes = |n: &TwoModeNetwork| {
        serde_json::json!({
            "rows": n.rows().len(),
            "cols": n.cols().len(),
            "arcs": n.arc_count(),
        })
    };
    let report = serde_json::json!({
        "works": bundle.counts.works,
        "wa": sizes(&bundle.wa),
        "wj": sizes(&bundle.wj),
        "wk": sizes(&bundle.wk),
        "wm": sizes(&bundle.wm),
        "works_without_authors": bundle.counts.works_without_authors,
        "works_without_journal": bundle.counts.works_without_journal,
        "works_without_keywords": bundle.counts.works_without_keywords,
        "works_without_msc": bundle.counts.works_without_msc,
        "works_without_year": bundle.counts.works_without_year,
    });
    atomic_write(&store_path(config, "sizes.json"), &json_string(&report))?;
    println!(
        "build: {} works, arcs wa={} wj={} wk={} wm={}",
        bundle.counts.works,
        bundle.wa.arc_count(),
        bundle.wj.arc_count(),
        bundle.wk.arc_count(),
        bundle.wm.arc_count()
    );
    Ok(())
}

fn derive_collab(config: &PipelineConfig, bundle: &NetworkBundle) -> Result<CollabBundle> {
    Ok(collaboration_networks(&bundle.wa, config.exclude_etal)?)
}

pub fn cmd_derive(config: &PipelineConfig) -> Result<()> {
    let (_, _, bundle) = load_bundle(config)?;
    let collab = derive_collab(config, &bundle)?;

    write_net_file(
        config,
        "ct_prime.net",
        &PajekNet::Undirected(collab.ct_prime.clone()),
    )?;
    write_net_file(config, "cn.net", &PajekNet::Directed(collab.cn.clone()))?;

    let mut index_rows = vec![vec![
        "author".to_string(),
        "cn_ii".to_string(),
        "total_works".to_string(),
        "S".to_string(),
        "K".to_string(),
    ]];
    let mut indices = author_indices(&collab);
    indices.sort_by(|a, b| {
        b.cn_ii
            .partial_cmp(&a.cn_ii)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.author.cmp(&b.author))
    });
    for row in &indices {
        index_rows.push(vec![
            row.author.clone(),
            format!("{}", row.cn_ii),
            row.total_works.to_string(),
            format!("{}", row.s),
            format!("{}", row.k),
        ]);
    }
    atomic_write(
        &store_path(config, "author_indices.csv"),
        &csv_string(&index_rows)?,
    )?;

    let core = ps_core(&collab.ct_prime, config.core_t);
    let core_net = collab.ct_prime.induced(&core.members)?;
    write_net_file(config, "core_t.net", &PajekNet::Undirected(core_net))?;

    let islands = link_islands(&collab.ct_prime, config.island_min, config.island_max)?;
    let nodes = collab.ct_prime.nodes();
    let islands_json: Vec<serde_json::Value> = islands
        .iter()
        .map(|island| {
            serde_json::json!({
                "nodes": island
                    .nodes
                    .iter()
                    .map(|&v| nodes.label(v))
                    .collect::<Vec<_>>(),
                "height": island.height,
                "links": island
                    .links
                    .iter()
                    .map(|&(u, v, w)| {
                        serde_json::json!([nodes.label(u), nodes.label(v), w])
                    })
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    atomic_write(
        &store_path(config, "islands.json"),
        &json_string(&serde_json::json!({
            "size_min": config.island_min,
            "size_max": config.island_max,
            "islands": islands_json,
        })),
    )?;
    println!(
        "derive: {} authors indexed, core({}) has {} members, {} islands",
        indices.len(),
        config.core_t,
        core.members.len(),
        islands.len()
    );
    Ok(())
}

pub fn cmd_subject(config: &PipelineConfig, prefix_override: Option<&str>) -> Result<()> {
    let (_, _, bundle) = load_bundle(config)?;
    let prefix = prefix_override.unwrap_or(&config.subject_prefix);
    let sub = subfield_pipeline(&bundle, prefix)?;
    if sub.wa.rows().is_empty() {
        eprintln!("subject: prefix {prefix:?} matches no work; emitting empty tables");
    }

    let wm3 = shrink_msc_to_3char(&bundle.wm);
    let subject: std::collections::BTreeSet<String> = wm3
        .cols()
        .labels()
        .iter()
        .filter(|l| l.starts_with(prefix))
        .cloned()
        .collect();

    let mut bias_rows = vec![vec![
        "journal".to_string(),
        "works".to_string(),
        "subject_works".to_string(),
        "bias".to_string(),
    ]];
    if !subject.is_empty() {
        let mut table = journal_bias(&bundle.wj, &wm3, &subject, config.min_works)?;
        table.sort_by(|a, b| match (a.bias, b.bias) {
            (Some(x), Some(y)) => y
                .partial_cmp(&x)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| a.journal.cmp(&b.journal)),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => a.journal.cmp(&b.journal),
        });
        for row in &table {
            bias_rows.push(vec![
                row.journal.clone(),
                row.works.to_string(),
                row.subject_works.to_string(),
                row.bias.map_or("-inf".to_string(), |b| format!("{b}")),
            ]);
        }
    }
    atomic_write(&store_path(config, "bias.csv"), &csv_string(&bias_rows)?)?;

    let mut pct_rows = vec![vec!["journal".to_string(), "subject_share".to_string()]];
    if !subject.is_empty() {
        let profile = journal_subject_profile(&bundle.wj, &wm3)?;
        for (journal, share) in journal_subject_percentage(&profile, &subject)? {
            pct_rows.push(vec![journal, format!("{share}")]);
        }
    }
    atomic_write(
        &store_path(config, "journal_subject_pct.csv"),
        &csv_string(&pct_rows)?,
    )?;

    let mut co_rows = vec![vec!["msc3".to_string(), "works".to_string()]];
    for (code, count) in &sub.coclassification {
        co_rows.push(vec![code.clone(), format!("{count}")]);
    }
    atomic_write(
        &store_path(config, "coclassification.csv"),
        &csv_string(&co_rows)?,
    )?;

    // MSC×keyword network over the subfield works, 3-char classes
    let mk3 = {
        let wm3_sub = shrink_msc_to_3char(&sub.wm);
        match multiply(&wm3_sub.transpose(), &sub.wk)? {
            Product::TwoMode(n) => n,
            Product::OneMode(_) => unreachable!("MSC and keyword node sets are distinct"),
        }
    };
    let mut rows = tfidf(&mk3, config.idf_base);
    rows.sort_by(|a, b| {
        a.msc.cmp(&b.msc).then(
            b.weight
                .partial_cmp(&a.weight)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| a.keyword.cmp(&b.keyword)),
        )
    });
    let mut tfidf_rows = vec![vec![
        "msc3".to_string(),
        "keyword".to_string(),
        "tf".to_string(),
        "idf".to_string(),
        "tfidf".to_string(),
    ]];
    let mut taken: BTreeMap<String, usize> = BTreeMap::new();
    for row in &rows {
        let k = taken.entry(row.msc.clone()).or_insert(0);
        if *k < config.top_k {
            *k += 1;
            tfidf_rows.push(vec![
                row.msc.clone(),
                row.keyword.clone(),
                format!("{}", row.tf),
                format!("{}", row.idf),
                format!("{}", row.weight),
            ]);
        }
    }
    atomic_write(&store_path(config, "tfidf.csv"), &csv_string(&tfidf_rows)?)?;

    println!(
        "subject {}: {} works, {} co-classes, {} bias rows",
        prefix,
        sub.wa.rows().len(),
        sub.coclassification.len(),
        bias_rows.len() - 1
    );
    Ok(())
}

fn distribution_csv(values: impl IntoIterator<Item = u64>) -> Result<Vec<u8>> {
    let table = distribution_of(values);
    let mut rows = vec![vec!["value".to_string(), "f".to_string(), "g".to_string()]];
    for &(v, f, g) in &table.rows {
        rows.push(vec![v.to_string(), f.to_string(), g.to_string()]);
    }
    csv_string(&rows)
}

pub fn cmd_dist(config: &PipelineConfig) -> Result<()> {
    let (_, _, bundle) = load_bundle(config)?;

    let mut per_year: BTreeMap<u32, u64> = BTreeMap::new();
    for &y in bundle.year.classes() {
        *per_year.entry(y).or_insert(0) += 1;
    }
    let mut year_rows = vec![vec!["year".to_string(), "works".to_string()]];
    for (year, count) in &per_year {
        let label = if *year == 0 {
            "missing".to_string()
        } else {
            year.to_string()
        };
        year_rows.push(vec![label, count.to_string()]);
    }
    atomic_write(&store_path(config, "years.csv"), &csv_string(&year_rows)?)?;

    let degs = |net: &TwoModeNetwork, side: Side| -> Vec<u64> {
        net.degrees(side, false)
            .values()
            .iter()
            .map(|&v| v.round() as u64)
            .collect()
    };
    atomic_write(
        &store_path(config, "works_per_author.csv"),
        &distribution_csv(degs(&bundle.wa, Side::Cols))?,
    )?;
    atomic_write(
        &store_path(config, "authors_per_work.csv"),
        &distribution_csv(degs(&bundle.wa, Side::Rows))?,
    )?;
    atomic_write(
        &store_path(config, "works_per_keyword.csv"),
        &distribution_csv(degs(&bundle.wk, Side::Cols))?,
    )?;
    atomic_write(
        &store_path(config, "works_per_msc.csv"),
        &distribution_csv(degs(&bundle.wm, Side::Cols))?,
    )?;

    let mut bradford_rows = vec![vec![
        "rank".to_string(),
        "journal".to_string(),
        "works".to_string(),
        "cumulative".to_string(),
    ]];
    for (rank, journal, works, cumulative) in bradford_curve(&bundle.wj) {
        bradford_rows.push(vec![
            rank.to_string(),
            journal,
            works.to_string(),
            cumulative.to_string(),
        ]);
    }
    atomic_write(
        &store_path(config, "bradford.csv"),
        &csv_string(&bradford_rows)?,
    )?;

    let productivity = degs(&bundle.wa, Side::Cols);
    let alpha = powerlaw_alpha(&productivity, config.x_min);
    let alpha_json = match &alpha {
        Ok(a) => serde_json::json!({"x_min": config.x_min, "alpha": a, "n": productivity.iter().filter(|&&x| x >= config.x_min).count()}),
        Err(e) => serde_json::json!({"x_min": config.x_min, "alpha": null, "error": e.to_string()}),
    };
    atomic_write(&store_path(config, "alpha.json"), &json_string(&alpha_json))?;

    println!(
        "dist: {} year classes, alpha = {}",
        per_year.len(),
        alpha.map_or_else(|e| format!("n/a ({e})"), |a| format!("{a:.4}"))
    );
    Ok(())
}
