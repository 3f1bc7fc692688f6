//! Weighted pS-cores: the maximal subset in which every member keeps an
//! internal weighted degree of at least t.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::net::UndirectedNetwork;

/// Result of a pS-core computation at level `t`. `removed` records each
/// deleted node with its internal degree at deletion time (always < t),
/// which witnesses that no removed node can be added back.
#[derive(Debug, Clone, PartialEq)]
pub struct CoreResult {
    pub t: f64,
    pub members: Vec<usize>,
    pub p_values: Vec<f64>,
    pub removed: Vec<(usize, f64)>,
}

#[derive(PartialEq, PartialOrd)]
struct Entry(f64, usize);

impl Eq for Entry {}

#[allow(clippy::derive_ord_xor_partial_ord)]
impl Ord for Entry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.partial_cmp(other)
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}

/// Iterative min-first deletion with a lazy heap: pop the current
/// minimum-degree node; stop when it meets t, otherwise delete it and
/// relax its neighbors. Stale heap entries are skipped, so each edge is
/// touched a constant number of times.
pub fn ps_core(g: &UndirectedNetwork, t: f64) -> CoreResult {
    let n = g.nodes().len();
    let adj = g.adjacency();
    let mut degree: Vec<f64> = adj
        .iter()
        .map(|nb| nb.iter().map(|&(_, w)| w).sum())
        .collect();
    let mut alive = vec![true; n];
    let mut removed = Vec::new();
    let mut heap: BinaryHeap<Reverse<Entry>> = (0..n)
        .map(|v| Reverse(Entry(degree[v], v)))
        .collect();

    while let Some(Reverse(Entry(d, v))) = heap.pop() {
        if !alive[v] {
            continue;
        }
        if d > degree[v] {
            heap.push(Reverse(Entry(degree[v], v)));
            continue;
        }
        if d >= t {
            break;
        }
        alive[v] = false;
        removed.push((v, d));
        for &(u, w) in &adj[v] {
            if alive[u] {
                degree[u] -= w;
                heap.push(Reverse(Entry(degree[u], u)));
            }
        }
    }

    let members: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let p_values = members.iter().map(|&v| degree[v]).collect();
    CoreResult {
        t,
        members,
        p_values,
        removed,
    }
}
