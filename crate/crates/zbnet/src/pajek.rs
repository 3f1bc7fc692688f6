//! Pajek `.net` / `.clu` / `.vec` reading and writing.
//!
//! Files are ASCII with LF line endings, 1-based vertex ids and
//! double-quoted labels. Two-mode networks use the `*Vertices n n1`
//! convention (row nodes first). Node roles are not part of the Pajek
//! format proper; they are carried in `%role` comment lines so that
//! read(write(N)) is the identity on the data model, and default to
//! Works/Authors when absent.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use crate::error::PajekError;
use crate::net::{
    DirectedNetwork, NodeSet, Partition, Role, TwoModeNetwork, UndirectedNetwork,
};

/// Any network a `.net` file can hold.
#[derive(Debug, Clone, PartialEq)]
pub enum PajekNet {
    TwoMode(TwoModeNetwork),
    Directed(DirectedNetwork),
    Undirected(UndirectedNetwork),
}

impl PajekNet {
    pub fn into_two_mode(self) -> TwoModeNetwork {
        match self {
            PajekNet::TwoMode(n) => n,
            _ => panic!("expected a two-mode network"),
        }
    }

    pub fn into_undirected(self) -> UndirectedNetwork {
        match self {
            PajekNet::Undirected(n) => n,
            _ => panic!("expected an undirected network"),
        }
    }
}

fn role_name(r: Role) -> &'static str {
    match r {
        Role::Works => "works",
        Role::Authors => "authors",
        Role::Journals => "journals",
        Role::Keywords => "keywords",
        Role::Mscs => "mscs",
        Role::Shrunk => "shrunk",
    }
}

fn parse_role(s: &str) -> Option<Role> {
    Some(match s {
        "works" => Role::Works,
        "authors" => Role::Authors,
        "journals" => Role::Journals,
        "keywords" => Role::Keywords,
        "mscs" => Role::Mscs,
        "shrunk" => Role::Shrunk,
        _ => return None,
    })
}

/// Weights print as integers when integral, shortest round-trip form
/// otherwise.
fn fmt_weight(w: f64) -> String {
    if w.fract() == 0.0 && w.abs() < 1e15 {
        format!("{}", w as i64)
    } else {
        format!("{}", w)
    }
}

fn push_vertices(out: &mut String, sets: &[&Arc<NodeSet>]) {
    let total: usize = sets.iter().map(|s| s.len()).sum();
    match sets {
        [rows, _] => {
            let _ = writeln!(out, "*Vertices {} {}", total, rows.len());
        }
        _ => {
            let _ = writeln!(out, "*Vertices {}", total);
        }
    }
    let mut id = 1;
    for set in sets {
        for label in set.labels() {
            let _ = writeln!(out, "{} \"{}\"", id, label);
            id += 1;
        }
    }
}

pub fn write_net_string(net: &PajekNet) -> String {
    let mut out = String::new();
    match net {
        PajekNet::TwoMode(n) => {
            let _ = writeln!(
                out,
                "%role rows={} cols={}",
                role_name(n.rows().role()),
                role_name(n.cols().role())
            );
            push_vertices(&mut out, &[n.rows(), n.cols()]);
            let _ = writeln!(out, "*Arcs");
            let nrows = n.rows().len();
            for (r, c, w) in n.arcs() {
                let _ = writeln!(out, "{} {} {}", r + 1, nrows + c + 1, fmt_weight(w));
            }
        }
        PajekNet::Directed(n) => {
            let _ = writeln!(out, "%role nodes={}", role_name(n.nodes().role()));
            push_vertices(&mut out, &[n.nodes()]);
            let _ = writeln!(out, "*Arcs");
            for (u, v, w) in n.arcs() {
                let _ = writeln!(out, "{} {} {}", u + 1, v + 1, fmt_weight(w));
            }
        }
        PajekNet::Undirected(n) => {
            let _ = writeln!(out, "%role nodes={}", role_name(n.nodes().role()));
            push_vertices(&mut out, &[n.nodes()]);
            let _ = writeln!(out, "*Edges");
            for &(u, v, w) in n.edges() {
                let _ = writeln!(out, "{} {} {}", u + 1, v + 1, fmt_weight(w));
            }
        }
    }
    out
}

pub fn write_net(path: &Path, net: &PajekNet) -> Result<(), PajekError> {
    fs::write(path, write_net_string(net))?;
    Ok(())
}

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            iter: text.lines().enumerate(),
        }
    }

    /// Next non-empty line with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.iter.by_ref() {
            let t = line.trim();
            if !t.is_empty() {
                return Some((i + 1, t));
            }
        }
        None
    }
}

fn parse_label(line: usize, s: &str) -> Result<String, PajekError> {
    let open = s
        .find('"')
        .ok_or_else(|| PajekError::syntax(line, "expected quoted label"))?;
    let close = s
        .rfind('"')
        .filter(|&c| c > open)
        .ok_or_else(|| PajekError::syntax(line, "unterminated label"))?;
    Ok(s[open + 1..close].to_string())
}

pub fn read_net_string(text: &str) -> Result<PajekNet, PajekError> {
    let mut lines = Lines::new(text);
    let mut row_role = None;
    let mut col_role = None;
    let mut node_role = None;

    let (mut ln, mut line) = lines
        .next()
        .ok_or_else(|| PajekError::syntax(0, "empty file"))?;
    if let Some(rest) = line.strip_prefix("%role") {
        for part in rest.split_whitespace() {
            match part.split_once('=') {
                Some(("rows", r)) => row_role = parse_role(r),
                Some(("cols", r)) => col_role = parse_role(r),
                Some(("nodes", r)) => node_role = parse_role(r),
                _ => {}
            }
        }
        (ln, line) = lines
            .next()
            .ok_or_else(|| PajekError::syntax(ln, "missing *Vertices"))?;
    }

    let rest = line
        .strip_prefix("*Vertices")
        .or_else(|| line.strip_prefix("*vertices"))
        .ok_or_else(|| PajekError::syntax(ln, "expected *Vertices"))?;
    let mut nums = rest.split_whitespace();
    let total: usize = nums
        .next()
        .ok_or_else(|| PajekError::syntax(ln, "missing vertex count"))?
        .parse()
        .map_err(|_| PajekError::syntax(ln, "bad vertex count"))?;
    let n1: Option<usize> = match nums.next() {
        Some(t) => Some(
            t.parse()
                .map_err(|_| PajekError::syntax(ln, "bad first-set size"))?,
        ),
        None => None,
    };
    if let Some(n1) = n1 {
        if n1 > total {
            return Err(PajekError::syntax(ln, "first set larger than total"));
        }
    }

    let mut labels: Vec<Option<String>> = vec![None; total];
    let mut pending: Option<(usize, &str)> = None;
    for _ in 0..total {
        match lines.next() {
            Some((vln, vline)) => {
                if vline.starts_with('*') {
                    pending = Some((vln, vline));
                    break;
                }
                let mut it = vline.split_whitespace();
                let id: usize = it
                    .next()
                    .ok_or_else(|| PajekError::syntax(vln, "missing vertex id"))?
                    .parse()
                    .map_err(|_| PajekError::syntax(vln, "bad vertex id"))?;
                if id == 0 || id > total {
                    return Err(PajekError::syntax(vln, "vertex id out of range"));
                }
                labels[id - 1] = Some(parse_label(vln, vline)?);
            }
            None => break,
        }
    }
    // vertices without an explicit line default to their id as label
    let labels: Vec<String> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or_else(|| (i + 1).to_string()))
        .collect();

    let mut arcs: Vec<(usize, usize, f64)> = Vec::new();
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut section: Option<bool> = None; // true = arcs, false = edges
    let mut saw_arcs_section = false;
    let mut saw_edges_section = false;
    loop {
        let (sln, sline) = match pending.take().or_else(|| lines.next()) {
            Some(x) => x,
            None => break,
        };
        let lower = sline.to_ascii_lowercase();
        if lower.starts_with("*arcs") {
            section = Some(true);
            saw_arcs_section = true;
            continue;
        }
        if lower.starts_with("*edges") {
            section = Some(false);
            saw_edges_section = true;
            continue;
        }
        if sline.starts_with('*') {
            return Err(PajekError::syntax(sln, format!("unsupported section {sline}")));
        }
        let is_arc =
            section.ok_or_else(|| PajekError::syntax(sln, "link before *Arcs/*Edges"))?;
        let mut it = sline.split_whitespace();
        let u: usize = it
            .next()
            .ok_or_else(|| PajekError::syntax(sln, "missing source id"))?
            .parse()
            .map_err(|_| PajekError::syntax(sln, "bad source id"))?;
        let v: usize = it
            .next()
            .ok_or_else(|| PajekError::syntax(sln, "missing target id"))?
            .parse()
            .map_err(|_| PajekError::syntax(sln, "bad target id"))?;
        let w: f64 = match it.next() {
            Some(t) => t
                .parse()
                .map_err(|_| PajekError::syntax(sln, "bad weight"))?,
            None => 1.0,
        };
        if u == 0 || u > total || v == 0 || v > total {
            return Err(PajekError::syntax(sln, "vertex id out of range"));
        }
        if is_arc {
            arcs.push((u - 1, v - 1, w));
        } else {
            edges.push((u - 1, v - 1, w));
        }
    }

    match n1 {
        Some(n1) => {
            let rows = NodeSet::new(
                row_role.unwrap_or(Role::Works),
                labels[..n1].to_vec(),
            )?;
            let cols = NodeSet::new(
                col_role.unwrap_or(Role::Authors),
                labels[n1..].to_vec(),
            )?;
            let arcs = arcs
                .into_iter()
                .chain(edges)
                .map(|(u, v, w)| {
                    let (r, c) = if u < n1 { (u, v) } else { (v, u) };
                    if r >= n1 || c < n1 {
                        return Err(PajekError::syntax(
                            0,
                            "two-mode link inside one node set",
                        ));
                    }
                    Ok((r, c - n1, w))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PajekNet::TwoMode(TwoModeNetwork::new(rows, cols, arcs)?))
        }
        None => {
            let nodes = NodeSet::new(node_role.unwrap_or(Role::Authors), labels)?;
            if saw_edges_section && !saw_arcs_section {
                Ok(PajekNet::Undirected(UndirectedNetwork::new(nodes, edges)?))
            } else {
                // mixed files fold edges into symmetric arc pairs
                let mut all = arcs;
                for (u, v, w) in edges {
                    all.push((u, v, w));
                    all.push((v, u, w));
                }
                Ok(PajekNet::Directed(DirectedNetwork::new(nodes, all)?))
            }
        }
    }
}

pub fn read_net(path: &Path) -> Result<PajekNet, PajekError> {
    let text = fs::read_to_string(path)?;
    read_net_string(&text)
}

pub fn write_clu_string(p: &Partition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "*Vertices {}", p.over().len());
    for &c in p.classes() {
        let _ = writeln!(out, "{}", c);
    }
    out
}

pub fn write_clu(path: &Path, p: &Partition) -> Result<(), PajekError> {
    fs::write(path, write_clu_string(p))?;
    Ok(())
}

/// Read a `.clu` file as raw classes; attach them to a node set with
/// [`Partition::new`].
pub fn read_clu_string(text: &str) -> Result<Vec<u32>, PajekError> {
    let mut lines = Lines::new(text);
    let (ln, line) = lines
        .next()
        .ok_or_else(|| PajekError::syntax(0, "empty file"))?;
    let n: usize = line
        .strip_prefix("*Vertices")
        .or_else(|| line.strip_prefix("*vertices"))
        .ok_or_else(|| PajekError::syntax(ln, "expected *Vertices"))?
        .trim()
        .parse()
        .map_err(|_| PajekError::syntax(ln, "bad vertex count"))?;
    let mut classes = Vec::with_capacity(n);
    while let Some((cln, cline)) = lines.next() {
        classes.push(
            cline
                .parse::<u32>()
                .map_err(|_| PajekError::syntax(cln, "bad class"))?,
        );
    }
    if classes.len() != n {
        return Err(PajekError::syntax(0, "class count does not match header"));
    }
    Ok(classes)
}

pub fn read_clu(path: &Path) -> Result<Vec<u32>, PajekError> {
    let text = fs::read_to_string(path)?;
    read_clu_string(&text)
}

pub fn write_vec_string(values: &[f64]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "*Vertices {}", values.len());
    for &v in values {
        let _ = writeln!(out, "{}", fmt_weight(v));
    }
    out
}

pub fn write_vec(path: &Path, values: &[f64]) -> Result<(), PajekError> {
    fs::write(path, write_vec_string(values))?;
    Ok(())
}

pub fn read_vec_string(text: &str) -> Result<Vec<f64>, PajekError> {
    let mut lines = Lines::new(text);
    let (ln, line) = lines
        .next()
        .ok_or_else(|| PajekError::syntax(0, "empty file"))?;
    let n: usize = line
        .strip_prefix("*Vertices")
        .or_else(|| line.strip_prefix("*vertices"))
        .ok_or_else(|| PajekError::syntax(ln, "expected *Vertices"))?
        .trim()
        .parse()
        .map_err(|_| PajekError::syntax(ln, "bad vertex count"))?;
    let mut values = Vec::with_capacity(n);
    while let Some((vln, vline)) = lines.next() {
        values.push(
            vline
                .parse::<f64>()
                .map_err(|_| PajekError::syntax(vln, "bad value"))?,
        );
    }
    if values.len() != n {
        return Err(PajekError::syntax(0, "value count does not match header"));
    }
    Ok(values)
}

pub fn read_vec(path: &Path) -> Result<Vec<f64>, PajekError> {
    let text = fs::read_to_string(path)?;
    read_vec_string(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::Partition;

    #[test]
    fn two_node_one_edge_roundtrip() {
        let nodes = NodeSet::new(Role::Authors, vec!["a".into(), "b".into()]).unwrap();
        let net =
            PajekNet::Undirected(UndirectedNetwork::new(nodes, vec![(0, 1, 0.5)]).unwrap());
        let text = write_net_string(&net);
        assert_eq!(read_net_string(&text).unwrap(), net);
    }

    #[test]
    fn two_mode_roundtrip() {
        let w = NodeSet::new(Role::Works, vec!["w1".into(), "w2".into()]).unwrap();
        let a = NodeSet::new(Role::Authors, vec!["a1".into()]).unwrap();
        let net = PajekNet::TwoMode(
            TwoModeNetwork::new(w, a, vec![(0, 0, 1.0), (1, 0, 2.5)]).unwrap(),
        );
        let text = write_net_string(&net);
        assert!(text.contains("*Vertices 3 2"));
        assert_eq!(read_net_string(&text).unwrap(), net);
    }

    #[test]
    fn deterministic_output() {
        let w = NodeSet::new(Role::Works, vec!["w1".into()]).unwrap();
        let a = NodeSet::new(Role::Authors, vec!["x".into(), "y".into()]).unwrap();
        let net = PajekNet::TwoMode(
            TwoModeNetwork::new(w, a, vec![(0, 1, 1.0), (0, 0, 1.0)]).unwrap(),
        );
        assert_eq!(write_net_string(&net), write_net_string(&net));
    }

    #[test]
    fn handwritten_clu() {
        let classes = read_clu_string("*Vertices 3\n1\n0\n2\n").unwrap();
        assert_eq!(classes, vec![1, 0, 2]);
        let over = NodeSet::new(Role::Works, vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let p = Partition::new(over, classes).unwrap();
        assert_eq!(p.class_of(2), 2);
    }

    #[test]
    fn syntax_error_carries_line() {
        let err = read_net_string("*Vertices 2\n1 \"a\"\n2 \"b\"\n*Arcs\n1 x 1\n").unwrap_err();
        match err {
            PajekError::Syntax { line, .. } => assert_eq!(line, 5),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn vec_roundtrip() {
        let text = write_vec_string(&[1.0, 0.25, 3.5]);
        assert_eq!(read_vec_string(&text).unwrap(), vec![1.0, 0.25, 3.5]);
    }
}
