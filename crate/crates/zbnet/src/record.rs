//! Parser for field-tagged bibliographic records.
//!
//! A record is a block of lines, each starting with a 2-character field
//! tag; a new record starts at an `an` line. Continuation lines begin
//! with whitespace and extend the previous field. The parser is total:
//! any byte stream yields a (possibly empty) record sequence plus
//! warnings.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use crate::tex::{normalize_tex_counting, TexNormTable};

/// A pass-through field the parser does not interpret.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawField {
    pub tag: String,
    pub value: String,
}

/// An MSC code with its primary-classification flag (a leading `*` or
/// `⋆` in the source).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MscCode {
    pub code: String,
    pub primary: bool,
}

/// Journal descriptor from the `se` field: ZB identifier, whole and
/// short title, ISSNs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JournalRef {
    pub zb_id: String,
    pub full_title: String,
    pub short_title: String,
    pub issns: Vec<String>,
}

/// One parsed bibliographic work.
///
/// `authors_unified` and `authors_full` are positionally aligned: slot i
/// of each refers to the same person. A `None` unified slot is a missing
/// ZB-unified name (`-` in the source); an empty display name marks a
/// slot padded to restore alignment.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record {
    pub id: String,
    pub authors_unified: Vec<Option<String>>,
    pub authors_full: Vec<String>,
    pub year: Option<i32>,
    pub msc_codes: Vec<MscCode>,
    pub title: Option<String>,
    pub keywords_raw: Vec<String>,
    pub journal: Option<JournalRef>,
    pub issns: Vec<String>,
    pub source: Option<String>,
    pub extra: Vec<RawField>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WarningKind {
    MalformedRecord,
    DuplicateWorkId,
    UnknownTag(String),
    AiAuMismatch,
    BadYear(String),
    BadMscCode(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub record_id: Option<String>,
    pub kind: WarningKind,
}

impl ParseWarning {
    /// Stable category name used in warning reports.
    pub fn category(&self) -> &'static str {
        match self.kind {
            WarningKind::MalformedRecord => "malformed_record",
            WarningKind::DuplicateWorkId => "duplicate_work_id",
            WarningKind::UnknownTag(_) => "unknown_tag",
            WarningKind::AiAuMismatch => "ai_au_mismatch",
            WarningKind::BadYear(_) => "bad_year",
            WarningKind::BadMscCode(_) => "bad_msc_code",
        }
    }
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}", self.line)?;
        if let Some(id) = &self.record_id {
            write!(f, " (record {})", id)?;
        }
        match &self.kind {
            WarningKind::MalformedRecord => write!(f, ": fields before any `an` line"),
            WarningKind::DuplicateWorkId => write!(f, ": duplicate work id, later record wins"),
            WarningKind::UnknownTag(t) => write!(f, ": unknown tag {:?} kept as pass-through", t),
            WarningKind::AiAuMismatch => {
                write!(f, ": ai/au author counts differ, shorter list padded")
            }
            WarningKind::BadYear(s) => write!(f, ": unusable publication year {:?}", s),
            WarningKind::BadMscCode(s) => write!(f, ": MSC code {:?} does not match the pattern", s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Encoding {
    Utf8,
    Latin1,
}

#[derive(Debug, Default)]
pub struct ParseOutcome {
    pub records: Vec<Record>,
    pub warnings: Vec<ParseWarning>,
    /// Unknown TeX macros seen while normalizing, with occurrence counts.
    pub unknown_macros: BTreeMap<String, usize>,
}

pub fn decode(bytes: &[u8], encoding: Encoding) -> String {
    match encoding {
        Encoding::Utf8 => String::from_utf8_lossy(bytes).into_owned(),
        Encoding::Latin1 => bytes.iter().map(|&b| b as char).collect(),
    }
}

/// Parse a byte stream of tagged records.
pub fn parse_records(bytes: &[u8], encoding: Encoding, norm: &TexNormTable) -> ParseOutcome {
    let text = decode(bytes, encoding);
    let mut outcome = ParseOutcome::default();
    let mut index: HashMap<String, usize> = HashMap::new();

    // Gather (tag, value, line) triples per record block.
    let mut fields: Vec<(String, String, usize)> = Vec::new();
    let mut in_record = false;
    let mut orphan_reported = false;
    let mut record_start_line = 0;

    let flush = |fields: &mut Vec<(String, String, usize)>,
                     start_line: usize,
                     outcome: &mut ParseOutcome,
                     index: &mut HashMap<String, usize>| {
        if fields.is_empty() {
            return;
        }
        let record = build_record(std::mem::take(fields), start_line, norm, outcome);
        if let Some(pos) = index.get(&record.id) {
            outcome.warnings.push(ParseWarning {
                line: start_line,
                record_id: Some(record.id.clone()),
                kind: WarningKind::DuplicateWorkId,
            });
            outcome.records[*pos] = record;
        } else {
            index.insert(record.id.clone(), outcome.records.len());
            outcome.records.push(record);
        }
    };

    for (ln0, line) in text.lines().enumerate() {
        let ln = ln0 + 1;
        if line.trim().is_empty() {
            continue;
        }
        let is_continuation = line.starts_with(char::is_whitespace);
        if is_continuation {
            if let Some(last) = fields.last_mut() {
                if !last.1.is_empty() {
                    last.1.push(' ');
                }
                last.1.push_str(line.trim());
            } else if !orphan_reported {
                outcome.warnings.push(ParseWarning {
                    line: ln,
                    record_id: None,
                    kind: WarningKind::MalformedRecord,
                });
                orphan_reported = true;
            }
            continue;
        }
        let (tag, value) = split_field_line(line);
        if tag.is_empty() {
            // not a tagged line: treat as a continuation when possible
            if let Some(last) = fields.last_mut() {
                if !last.1.is_empty() {
                    last.1.push(' ');
                }
                last.1.push_str(value.trim());
            } else if !orphan_reported {
                outcome.warnings.push(ParseWarning {
                    line: ln,
                    record_id: None,
                    kind: WarningKind::MalformedRecord,
                });
                orphan_reported = true;
            }
            continue;
        }
        if tag == "an" {
            flush(&mut fields, record_start_line, &mut outcome, &mut index);
            in_record = true;
            orphan_reported = false;
            record_start_line = ln;
            fields.push(("an".to_string(), value.to_string(), ln));
        } else if in_record {
            fields.push((tag.to_string(), value.to_string(), ln));
        } else if !orphan_reported {
            outcome.warnings.push(ParseWarning {
                line: ln,
                record_id: None,
                kind: WarningKind::MalformedRecord,
            });
            orphan_reported = true;
        }
    }
    flush(&mut fields, record_start_line, &mut outcome, &mut index);
    outcome
}

/// Split a non-continuation line into its 2-character tag and value.
fn split_field_line(line: &str) -> (&str, &str) {
    let line = line.trim_end();
    if line.len() >= 2 && line.is_char_boundary(2) {
        let (tag, rest) = line.split_at(2);
        if tag.bytes().all(|b| b.is_ascii_lowercase()) {
            return (tag, rest.trim_start());
        }
    }
    ("", line)
}

const KNOWN_TAGS: [&str; 10] = ["an", "ai", "au", "py", "cc", "ti", "ut", "is", "so", "se"];

fn build_record(
    fields: Vec<(String, String, usize)>,
    start_line: usize,
    norm: &TexNormTable,
    outcome: &mut ParseOutcome,
) -> Record {
    let mut record = Record::default();
    // joined values per known tag; field order inside a record is irrelevant
    let mut joined: HashMap<&str, String> = HashMap::new();
    for (tag, value, line) in fields {
        let (value, unknown) = normalize_tex_counting(&value, norm);
        for m in unknown {
            *outcome.unknown_macros.entry(m).or_insert(0) += 1;
        }
        match KNOWN_TAGS.iter().find(|&&t| t == tag) {
            Some(&t) => {
                let slot = joined.entry(t).or_default();
                if slot.is_empty() {
                    *slot = value;
                } else if matches!(t, "ai" | "au" | "cc" | "ut" | "is") {
                    slot.push_str("; ");
                    slot.push_str(&value);
                } else {
                    // scalar tags: later value wins
                    *slot = value;
                }
            }
            None => {
                if !tag.is_empty() {
                    outcome.warnings.push(ParseWarning {
                        line,
                        record_id: None,
                        kind: WarningKind::UnknownTag(tag.clone()),
                    });
                }
                record.extra.push(RawField { tag, value });
            }
        }
    }

    record.id = joined.get("an").map(|s| s.trim().to_string()).unwrap_or_default();
    let id = record.id.clone();
    // fix up record ids on the unknown-tag warnings emitted above
    for w in outcome.warnings.iter_mut().rev() {
        if w.record_id.is_none() && w.line >= start_line {
            w.record_id = Some(id.clone());
        } else {
            break;
        }
    }

    if let Some(ai) = joined.get("ai") {
        record.authors_unified = split_list(ai)
            .into_iter()
            .map(|s| if s == "-" { None } else { Some(s) })
            .collect();
    }
    if let Some(au) = joined.get("au") {
        record.authors_full = split_list(au);
    }
    if !record.authors_unified.is_empty()
        && !record.authors_full.is_empty()
        && record.authors_unified.len() != record.authors_full.len()
    {
        outcome.warnings.push(ParseWarning {
            line: start_line,
            record_id: Some(id.clone()),
            kind: WarningKind::AiAuMismatch,
        });
    }
    let n = record.authors_unified.len().max(record.authors_full.len());
    record.authors_unified.resize(n, None);
    record.authors_full.resize(n, String::new());

    if let Some(py) = joined.get("py") {
        match py.trim().parse::<i32>() {
            Ok(y) if (1000..=2100).contains(&y) => record.year = Some(y),
            _ => outcome.warnings.push(ParseWarning {
                line: start_line,
                record_id: Some(id.clone()),
                kind: WarningKind::BadYear(py.clone()),
            }),
        }
    }

    if let Some(cc) = joined.get("cc") {
        for token in cc.split(|c: char| c == ';' || c.is_whitespace()) {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (primary, code) = match token.strip_prefix(['*', '⋆']) {
                Some(rest) => (true, rest),
                None => (false, token),
            };
            if is_valid_msc(code) {
                record.msc_codes.push(MscCode {
                    code: code.to_string(),
                    primary,
                });
            } else {
                outcome.warnings.push(ParseWarning {
                    line: start_line,
                    record_id: Some(id.clone()),
                    kind: WarningKind::BadMscCode(token.to_string()),
                });
            }
        }
    }

    record.title = joined.get("ti").cloned();
    if let Some(ut) = joined.get("ut") {
        record.keywords_raw = split_list(ut);
    }
    if let Some(is) = joined.get("is") {
        record.issns = is
            .split(|c: char| c == ';' || c == ',' || c.is_whitespace())
            .filter(|t| is_issn(t))
            .map(String::from)
            .collect();
    }
    record.source = joined.get("so").cloned();
    if let Some(se) = joined.get("se") {
        record.journal = parse_se(se);
    }
    record
}

/// Split a `;`-separated list, trimming entries; empty entries dropped.
fn split_list(s: &str) -> Vec<String> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(String::from)
        .collect()
}

/// MSC lexical pattern: 2 digits, a letter or `-`, then 2 digits or `xx`.
pub fn is_valid_msc(code: &str) -> bool {
    let b = code.as_bytes();
    b.len() == 5
        && b[0].is_ascii_digit()
        && b[1].is_ascii_digit()
        && (b[2].is_ascii_alphabetic() || b[2] == b'-')
        && ((b[3].is_ascii_digit() && b[4].is_ascii_digit())
            || (b[3].to_ascii_lowercase() == b'x' && b[4].to_ascii_lowercase() == b'x'))
}

fn is_issn(t: &str) -> bool {
    let b = t.as_bytes();
    b.len() == 9
        && b[0..4].iter().all(u8::is_ascii_digit)
        && b[4] == b'-'
        && b[5..8].iter().all(u8::is_ascii_digit)
        && (b[8].is_ascii_digit() || b[8].to_ascii_uppercase() == b'X')
}

/// `se` subfields are separated by tabs or runs of two or more spaces:
/// zb-id, whole title, short title, ISSNs.
fn parse_se(se: &str) -> Option<JournalRef> {
    let mut parts: Vec<String> = Vec::new();
    let mut current = String::new();
    let mut space_run = 0usize;
    for c in se.chars() {
        match c {
            '\t' => {
                if !current.trim().is_empty() {
                    parts.push(current.trim().to_string());
                }
                current.clear();
                space_run = 0;
            }
            ' ' => {
                space_run += 1;
                current.push(' ');
                if space_run >= 2 {
                    let trimmed = current.trim();
                    if !trimmed.is_empty() {
                        parts.push(trimmed.to_string());
                    }
                    current.clear();
                }
            }
            c => {
                space_run = 0;
                current.push(c);
            }
        }
    }
    if !current.trim().is_empty() {
        parts.push(current.trim().to_string());
    }
    // a record wrapped across continuation lines loses the wide gaps; fall
    // back to single-space splitting of the leading id when needed
    if parts.len() == 1 {
        let mut it = parts[0].splitn(2, ' ');
        let first = it.next()?.to_string();
        let rest = it.next().unwrap_or("").trim().to_string();
        parts = vec![first, rest];
    }
    let zb_id = parts.first()?.clone();
    let mut titles: Vec<String> = Vec::new();
    let mut issns: Vec<String> = Vec::new();
    for p in &parts[1..] {
        let toks: Vec<&str> = p.split_whitespace().collect();
        if !toks.is_empty() && toks.iter().all(|t| is_issn(t)) {
            issns.extend(toks.iter().map(|t| t.to_string()));
        } else if !p.is_empty() {
            titles.push(p.clone());
        }
    }
    Some(JournalRef {
        zb_id,
        full_title: titles.first().cloned().unwrap_or_default(),
        short_title: titles.get(1).cloned().unwrap_or_else(|| {
            titles.first().cloned().unwrap_or_default()
        }),
        issns,
    })
}

/// Canonical re-serialization: fields in fixed order, one value per line.
pub fn write_records(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format!("an  {}\n", r.id));
        if !r.authors_unified.is_empty() {
            let ai: Vec<&str> = r
                .authors_unified
                .iter()
                .map(|s| s.as_deref().unwrap_or("-"))
                .collect();
            out.push_str(&format!("ai  {}\n", ai.join("; ")));
        }
        if r.authors_full.iter().any(|s| !s.is_empty()) {
            out.push_str(&format!("au  {}\n", r.authors_full.join("; ")));
        }
        if let Some(y) = r.year {
            out.push_str(&format!("py  {}\n", y));
        }
        if !r.msc_codes.is_empty() {
            let cc: Vec<String> = r
                .msc_codes
                .iter()
                .map(|m| {
                    if m.primary {
                        format!("*{}", m.code)
                    } else {
                        m.code.clone()
                    }
                })
                .collect();
            out.push_str(&format!("cc  {}\n", cc.join("; ")));
        }
        if let Some(t) = &r.title {
            out.push_str(&format!("ti  {}\n", t));
        }
        if !r.keywords_raw.is_empty() {
            out.push_str(&format!("ut  {}\n", r.keywords_raw.join("; ")));
        }
        if !r.issns.is_empty() {
            out.push_str(&format!("is  ISSN {}\n", r.issns.join("; ")));
        }
        if let Some(s) = &r.source {
            out.push_str(&format!("so  {}\n", s));
        }
        if let Some(j) = &r.journal {
            out.push_str(&format!(
                "se  {}\t{}\t{}\t{}\n",
                j.zb_id,
                j.full_title,
                j.short_title,
                j.issns.join(" ")
            ));
        }
        for f in &r.extra {
            out.push_str(&format!("{}  {}\n", f.tag, f.value));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
an  01714102
ai  -; sastre-vazquez.patricia; -
is  ISSN 0368-492X
au  Us\\'o-Dom\\`enech, J.L.; Sastre-Vazquez, P.; Mateu, J.
py  2001
cc  *68U20
ti  Syntax and first entropic approximation of $L(M_T)$. A
      language for ecological modelling.
ut  modelling process; text-model based language
so  Kybernetes 30, No.9-10, 1304-1317 (2001).
se  00000540\tKybernetes\tKybernetes\t0368-492X
";

    fn parse(s: &str) -> ParseOutcome {
        parse_records(s.as_bytes(), Encoding::Utf8, &TexNormTable::default())
    }

    #[test]
    fn example_record() {
        let out = parse(EXAMPLE);
        assert_eq!(out.records.len(), 1);
        let r = &out.records[0];
        assert_eq!(r.id, "01714102");
        assert_eq!(
            r.authors_unified,
            vec![None, Some("sastre-vazquez.patricia".to_string()), None]
        );
        assert_eq!(
            r.authors_full,
            vec!["Usó-Domènech, J.L.", "Sastre-Vazquez, P.", "Mateu, J."]
        );
        assert_eq!(r.year, Some(2001));
        assert_eq!(
            r.msc_codes,
            vec![MscCode {
                code: "68U20".to_string(),
                primary: true
            }]
        );
        assert_eq!(
            r.title.as_deref(),
            Some("Syntax and first entropic approximation of $L(M_T)$. A language for ecological modelling.")
        );
        assert_eq!(
            r.keywords_raw,
            vec!["modelling process", "text-model based language"]
        );
        assert_eq!(r.issns, vec!["0368-492X"]);
        let j = r.journal.as_ref().unwrap();
        assert_eq!(j.zb_id, "00000540");
        assert_eq!(j.full_title, "Kybernetes");
        assert_eq!(j.issns, vec!["0368-492X"]);
        assert!(out.warnings.is_empty());
    }

    #[test]
    fn empty_input() {
        let out = parse("");
        assert!(out.records.is_empty());
        assert!(out.warnings.is_empty());
    }

    #[test]
    fn duplicate_id_later_wins() {
        let out = parse("an  X\nti  first\nan  X\nti  second\n");
        assert_eq!(out.records.len(), 1);
        assert_eq!(out.records[0].title.as_deref(), Some("second"));
        assert_eq!(out.warnings.len(), 1);
        assert_eq!(out.warnings[0].category(), "duplicate_work_id");
    }

    #[test]
    fn orphan_fields_are_skipped_with_warning() {
        let out = parse("ti  stray title\nau  Someone\nan  Y\npy  1999\n");
        assert_eq!(out.records.len(), 1);
        assert_eq!(out.records[0].id, "Y");
        assert_eq!(out.warnings.len(), 1);
        assert_eq!(out.warnings[0].category(), "malformed_record");
    }

    #[test]
    fn unknown_tag_passes_through() {
        let out = parse("an  Z\nzz  opaque value\n");
        assert_eq!(out.records[0].extra.len(), 1);
        assert_eq!(out.records[0].extra[0].tag, "zz");
        assert_eq!(out.warnings.len(), 1);
        assert_eq!(out.warnings[0].category(), "unknown_tag");
        assert_eq!(out.warnings[0].record_id.as_deref(), Some("Z"));
    }

    #[test]
    fn ai_au_mismatch_pads() {
        let out = parse("an  M\nai  a.b\nau  A, B; C, D\n");
        let r = &out.records[0];
        assert_eq!(r.authors_unified.len(), 2);
        assert_eq!(r.authors_full.len(), 2);
        assert_eq!(r.authors_unified[1], None);
        assert!(out.warnings.iter().any(|w| w.category() == "ai_au_mismatch"));
    }

    #[test]
    fn year_out_of_range_is_dropped() {
        let out = parse("an  Y1\npy  214\n");
        assert_eq!(out.records[0].year, None);
        assert!(out.warnings.iter().any(|w| w.category() == "bad_year"));
    }

    #[test]
    fn msc_pattern() {
        assert!(is_valid_msc("68U20"));
        assert!(is_valid_msc("05Cxx"));
        assert!(is_valid_msc("62-99"));
        assert!(!is_valid_msc("5C35"));
        assert!(!is_valid_msc("68U2"));
        assert!(!is_valid_msc("68U200"));
    }

    #[test]
    fn roundtrip_canonical_form() {
        let out = parse(EXAMPLE);
        let text = write_records(&out.records);
        let again = parse(&text);
        assert_eq!(again.records, out.records);
        // canonical form is a fixed point of serialize/parse/serialize
        assert_eq!(write_records(&again.records), text);
    }
}
