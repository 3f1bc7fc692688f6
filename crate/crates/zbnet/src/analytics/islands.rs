//! Link islands: node subsets held together by links stronger than
//! everything that ties them to the rest of the network.
//!
//! A subset qualifies when some spanning tree inside it has all weights
//! strictly above every link leaving the subset. Such subsets are exactly
//! the connected components of threshold subgraphs, so a single
//! decreasing-weight sweep with a union-find builds the merge tree and
//! every candidate is one of its nodes.

use crate::error::AnalyticsError;
use crate::net::UndirectedNetwork;

/// One reported island: node positions, internal links, and the height
/// (the weakest link of its strongest spanning tree).
#[derive(Debug, Clone, PartialEq)]
pub struct Island {
    pub nodes: Vec<usize>,
    pub links: Vec<(usize, usize, f64)>,
    pub height: f64,
}

struct MergeNode {
    children: Vec<usize>,
    /// single-node leaf: the graph node; merge node: usize::MAX
    leaf: usize,
    size: usize,
    /// weight of the merge that formed this component (infinite for leaves)
    height: f64,
    /// weight at which this component merged into its parent
    parent_weight: Option<f64>,
}

/// Maximal islands with size in `[size_min, size_max]`, in discovery
/// order (roots first, then by decreasing formation weight).
pub fn link_islands(
    g: &UndirectedNetwork,
    size_min: usize,
    size_max: usize,
) -> Result<Vec<Island>, AnalyticsError> {
    if size_min <= 1 || size_min > size_max {
        return Err(AnalyticsError::BadIslandBounds(size_min, size_max));
    }
    let n = g.nodes().len();
    let mut tree: Vec<MergeNode> = (0..n)
        .map(|v| MergeNode {
            children: Vec::new(),
            leaf: v,
            size: 1,
            height: f64::INFINITY,
            parent_weight: None,
        })
        .collect();
    let mut root_of: Vec<usize> = (0..n).collect();

    fn find(root_of: &mut Vec<usize>, mut x: usize) -> usize {
        while root_of[x] != x {
            root_of[x] = root_of[root_of[x]];
            x = root_of[x];
        }
        x
    }

    let mut edges: Vec<(usize, usize, f64)> = g.edges().to_vec();
    edges.sort_by(|a, b| b.2.partial_cmp(&a.2).unwrap_or(std::cmp::Ordering::Equal));
    for (u, v, w) in edges {
        let (ru, rv) = (find(&mut root_of, u), find(&mut root_of, v));
        if ru == rv {
            continue;
        }
        let merged = tree.len();
        tree[ru].parent_weight = Some(w);
        tree[rv].parent_weight = Some(w);
        let size = tree[ru].size + tree[rv].size;
        tree.push(MergeNode {
            children: vec![ru, rv],
            leaf: usize::MAX,
            size,
            height: w,
            parent_weight: None,
        });
        root_of.push(merged);
        root_of[ru] = merged;
        root_of[rv] = merged;
    }

    // a component qualifies when every link leaving it (all of weight
    // parent_weight or less) is strictly below its formation height
    let qualifies = |x: &MergeNode| match x.parent_weight {
        None => true,
        Some(p) => p < x.height,
    };

    let mut islands = Vec::new();
    let mut stack: Vec<usize> = (0..tree.len())
        .filter(|&i| tree[i].parent_weight.is_none())
        .collect();
    stack.reverse();
    while let Some(i) = stack.pop() {
        let node = &tree[i];
        if node.size >= size_min && node.size <= size_max && qualifies(node) {
            let mut members = Vec::new();
            let mut walk = vec![i];
            while let Some(j) = walk.pop() {
                if tree[j].leaf != usize::MAX {
                    members.push(tree[j].leaf);
                }
                walk.extend(&tree[j].children);
            }
            members.sort_unstable();
            let links = g
                .edges()
                .iter()
                .filter(|&&(u, v, _)| {
                    members.binary_search(&u).is_ok() && members.binary_search(&v).is_ok()
                })
                .copied()
                .collect();
            islands.push(Island {
                nodes: members,
                links,
                height: node.height,
            });
        } else {
            stack.extend(&tree[i].children);
        }
    }
    Ok(islands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::{NodeSet, Role};

    fn graph(n: usize, edges: &[(usize, usize, f64)]) -> UndirectedNetwork {
        let nodes = NodeSet::new(
            Role::Authors,
            (0..n).map(|i| format!("v{}", i)).collect(),
        )
        .unwrap();
        UndirectedNetwork::new(nodes, edges.to_vec()).unwrap()
    }

    /// Definition checked directly: the subset is connected through links
    /// all strictly heavier than its heaviest boundary link.
    fn subset_qualifies(g: &UndirectedNetwork, subset: &[usize]) -> bool {
        let in_set = |x: usize| subset.contains(&x);
        let boundary_max = g
            .edges()
            .iter()
            .filter(|&&(u, v, _)| in_set(u) != in_set(v))
            .map(|&(_, _, w)| w)
            .fold(f64::NEG_INFINITY, f64::max);
        // bottleneck of the maximum spanning tree inside the subset
        let mut internal: Vec<_> = g
            .edges()
            .iter()
            .filter(|&&(u, v, _)| in_set(u) && in_set(v))
            .copied()
            .collect();
        internal.sort_by(|a, b| b.2.partial_cmp(&a.2).unwrap());
        let mut comp: Vec<usize> = (0..g.nodes().len()).collect();
        fn find(c: &mut Vec<usize>, mut x: usize) -> usize {
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        let mut bottleneck = f64::INFINITY;
        let mut joined = 1;
        for (u, v, w) in internal {
            let (ru, rv) = (find(&mut comp, u), find(&mut comp, v));
            if ru != rv {
                comp[ru] = rv;
                bottleneck = bottleneck.min(w);
                joined += 1;
            }
        }
        joined == subset.len() && boundary_max < bottleneck
    }

    fn brute_force(g: &UndirectedNetwork, lo: usize, hi: usize) -> Vec<Vec<usize>> {
        let n = g.nodes().len();
        let mut found: Vec<Vec<usize>> = Vec::new();
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if subset.len() >= lo && subset.len() <= hi && subset_qualifies(g, &subset) {
                found.push(subset);
            }
        }
        // maximal only
        let all = found.clone();
        found.retain(|s| {
            !all.iter()
                .any(|t| t.len() > s.len() && s.iter().all(|x| t.contains(x)))
        });
        found.sort();
        found
    }

    fn reported(g: &UndirectedNetwork, lo: usize, hi: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = link_islands(g, lo, hi)
            .unwrap()
            .into_iter()
            .map(|i| i.nodes)
            .collect();
        out.sort();
        out
    }

    #[test]
    fn decreasing_path_pair() {
        let g = graph(4, &[(0, 1, 3.0), (1, 2, 2.0), (2, 3, 1.0)]);
        assert_eq!(reported(&g, 2, 2), vec![vec![0, 1]]);
        assert_eq!(brute_force(&g, 2, 2), vec![vec![0, 1]]);
    }

    #[test]
    fn widening_band_takes_whole_path() {
        let g = graph(4, &[(0, 1, 3.0), (1, 2, 2.0), (2, 3, 1.0)]);
        assert_eq!(reported(&g, 2, 4), vec![vec![0, 1, 2, 3]]);
        assert_eq!(brute_force(&g, 2, 4), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn uniform_cycle_has_no_islands() {
        let g = graph(
            5,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (2, 3, 1.0),
                (3, 4, 1.0),
                (4, 0, 1.0),
            ],
        );
        assert!(reported(&g, 2, 3).is_empty());
        assert!(brute_force(&g, 2, 3).is_empty());
    }

    #[test]
    fn bad_bounds_rejected() {
        let g = graph(2, &[(0, 1, 1.0)]);
        assert!(link_islands(&g, 1, 3).is_err());
        assert!(link_islands(&g, 4, 3).is_err());
    }

    #[test]
    fn every_island_satisfies_definition() {
        let g = graph(
            8,
            &[
                (0, 1, 9.0),
                (1, 2, 8.0),
                (2, 0, 7.0),
                (2, 3, 2.0),
                (3, 4, 6.0),
                (4, 5, 6.0),
                (5, 3, 1.0),
                (5, 6, 0.5),
                (6, 7, 4.0),
            ],
        );
        for (lo, hi) in [(2, 3), (2, 4), (3, 8), (2, 8)] {
            for island in link_islands(&g, lo, hi).unwrap() {
                assert!(
                    subset_qualifies(&g, &island.nodes),
                    "island {:?} fails the definition at [{lo},{hi}]",
                    island.nodes
                );
            }
            assert_eq!(reported(&g, lo, hi), brute_force(&g, lo, hi));
        }
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..60 {
            let n = rng.gen_range(4..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v, (rng.gen_range(1..=6) as f64) / 2.0));
                    }
                }
            }
            let g = graph(n, &edges);
            let (lo, hi) = (2, rng.gen_range(2..=n));
            assert_eq!(
                reported(&g, lo, hi),
                brute_force(&g, lo, hi),
                "mismatch on trial {trial} (n={n}, band [{lo},{hi}], edges {edges:?})"
            );
        }
    }
}
