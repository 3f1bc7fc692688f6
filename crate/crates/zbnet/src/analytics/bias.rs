//! Journal subject bias and journal classification profiles.

use std::collections::BTreeSet;

use crate::error::AnalyticsError;
use crate::net::{multiply, NormalizeMode, Product, TwoModeNetwork};

/// Bias of one journal toward a subject: log₂ of the ratio between the
/// journal's subject-work fraction and the overall fraction. `bias` is
/// `None` when the journal has no subject works at all (−∞; listed but
/// not ranked).
#[derive(Debug, Clone, PartialEq)]
pub struct BiasRow {
    pub journal: String,
    pub works: u64,
    pub subject_works: u64,
    pub bias: Option<f64>,
}

/// Whether each work has at least one classification inside the subject,
/// judged on the 3-char-shrunk works×MSC network.
fn subject_works(wm3: &TwoModeNetwork, subject: &BTreeSet<String>) -> Vec<bool> {
    let member: Vec<bool> = wm3
        .cols()
        .labels()
        .iter()
        .map(|l| subject.contains(l))
        .collect();
    (0..wm3.rows().len())
        .map(|w| wm3.row_arcs(w).any(|(m, _)| member[m]))
        .collect()
}

/// Per-journal bias table over journals with at least `min_works` works.
/// Rows come out in journal node order.
pub fn journal_bias(
    wj: &TwoModeNetwork,
    wm3: &TwoModeNetwork,
    subject: &BTreeSet<String>,
    min_works: u64,
) -> Result<Vec<BiasRow>, AnalyticsError> {
    if subject.is_empty() {
        return Err(AnalyticsError::EmptySubject);
    }
    let about = subject_works(wm3, subject);
    let total_works = wj.rows().len() as f64;
    let total_subject = about.iter().filter(|&&b| b).count() as f64;
    let overall = total_subject / total_works;

    let mut per_journal = vec![(0u64, 0u64); wj.cols().len()];
    for (w, j, _) in wj.arcs() {
        per_journal[j].0 += 1;
        if about[w] {
            per_journal[j].1 += 1;
        }
    }
    Ok(per_journal
        .iter()
        .enumerate()
        .filter(|(_, &(works, _))| works >= min_works)
        .map(|(j, &(works, subj))| BiasRow {
            journal: wj.cols().label(j).to_string(),
            works,
            subject_works: subj,
            bias: if subj == 0 || overall == 0.0 {
                None
            } else {
                Some((subj as f64 / works as f64 / overall).log2())
            },
        })
        .collect())
}

/// Journal classification profile: the journals×MSC network
/// JW·b(WM₃), row-normalized so every journal's profile sums to 1.
pub fn journal_subject_profile(
    wj: &TwoModeNetwork,
    wm3: &TwoModeNetwork,
) -> Result<TwoModeNetwork, AnalyticsError> {
    let jm3 = match multiply(&wj.transpose(), &wm3.binarize())? {
        Product::TwoMode(n) => n,
        Product::OneMode(_) => unreachable!("journals and MSCs are distinct node sets"),
    };
    Ok(jm3.row_normalize(NormalizeMode::ByWeightedOutdeg))
}

/// Per-journal share of its classification profile inside the subject.
pub fn journal_subject_percentage(
    profile: &TwoModeNetwork,
    subject: &BTreeSet<String>,
) -> Result<Vec<(String, f64)>, AnalyticsError> {
    if subject.is_empty() {
        return Err(AnalyticsError::EmptySubject);
    }
    let member: Vec<bool> = profile
        .cols()
        .labels()
        .iter()
        .map(|l| subject.contains(l))
        .collect();
    Ok((0..profile.rows().len())
        .map(|j| {
            let share = profile
                .row_arcs(j)
                .filter(|&(m, _)| member[m])
                .map(|(_, w)| w)
                .sum();
            (profile.rows().label(j).to_string(), share)
        })
        .collect())
}
