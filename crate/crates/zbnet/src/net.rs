//! Network data model: node sets, two-mode and one-mode networks,
//! partitions and node vectors, and the algebra over them (transpose,
//! multiply, binarize, row scaling, shrink, extraction, degrees,
//! symmetrization).

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::NetError;
use crate::sparse::Csr;

/// What the nodes of a set represent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Works,
    Authors,
    Journals,
    Keywords,
    Mscs,
    Shrunk,
}

/// An ordered set of uniquely labelled nodes.
#[derive(Debug, PartialEq)]
pub struct NodeSet {
    role: Role,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl NodeSet {
    pub fn new(role: Role, labels: Vec<String>) -> Result<Arc<NodeSet>, NetError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(NetError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(NodeSet {
            role,
            labels,
            index,
        }))
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// Node sets are considered the same if they are the same allocation or
/// structurally equal (role and label order).
pub fn same_node_set(a: &Arc<NodeSet>, b: &Arc<NodeSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Incrementally collects labels in first-seen order.
#[derive(Debug, Default)]
pub struct NodeSetBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl NodeSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn finish(self, role: Role) -> Arc<NodeSet> {
        Arc::new(NodeSet {
            role,
            labels: self.labels,
            index: self.index,
        })
    }
}

/// Sparse weighted network between two disjoint node sets; arcs are
/// always directed row -> column.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeNetwork {
    rows: Arc<NodeSet>,
    cols: Arc<NodeSet>,
    matrix: Csr,
}

/// One-mode directed network; loops are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedNetwork {
    nodes: Arc<NodeSet>,
    matrix: Csr,
}

/// One-mode undirected network without loops. Each edge is stored once
/// with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct UndirectedNetwork {
    nodes: Arc<NodeSet>,
    edges: Vec<(usize, usize, f64)>,
}

/// Result of multiplying two two-mode networks: one-mode when the outer
/// node sets coincide.
#[derive(Debug, Clone, PartialEq)]
pub enum Product {
    TwoMode(TwoModeNetwork),
    OneMode(DirectedNetwork),
}

impl Product {
    pub fn into_two_mode(self) -> TwoModeNetwork {
        match self {
            Product::TwoMode(n) => n,
            Product::OneMode(_) => panic!("product is one-mode"),
        }
    }

    pub fn into_one_mode(self) -> DirectedNetwork {
        match self {
            Product::OneMode(n) => n,
            Product::TwoMode(_) => panic!("product is two-mode"),
        }
    }
}

/// Row scaling modes for `row_normalize`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeMode {
    /// 1 / max(1, outdeg)
    ByOutdeg,
    /// 1 / max(1, outdeg - 1)
    ByOutdegMinus1,
    /// 1 / weighted outdeg (rows with weighted outdeg 0 untouched)
    ByWeightedOutdeg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Rows,
    Cols,
}

impl TwoModeNetwork {
    pub fn new(
        rows: Arc<NodeSet>,
        cols: Arc<NodeSet>,
        arcs: Vec<(usize, usize, f64)>,
    ) -> Result<TwoModeNetwork, NetError> {
        if rows.role() == cols.role() {
            return Err(NetError::SameRole(rows.role()));
        }
        if arcs.iter().any(|&(_, _, w)| w < 0.0) {
            return Err(NetError::NegativeWeight);
        }
        let matrix = Csr::from_triplets(rows.len(), cols.len(), arcs);
        Ok(TwoModeNetwork { rows, cols, matrix })
    }

    pub fn rows(&self) -> &Arc<NodeSet> {
        &self.rows
    }

    pub fn cols(&self) -> &Arc<NodeSet> {
        &self.cols
    }

    pub fn arc_count(&self) -> usize {
        self.matrix.nnz()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.matrix.entries()
    }

    pub fn row_arcs(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.matrix.row(r)
    }

    pub fn weight(&self, r: usize, c: usize) -> f64 {
        self.matrix.get(r, c)
    }

    pub fn total_weight(&self) -> f64 {
        self.matrix.total_weight()
    }

    pub fn transpose(&self) -> TwoModeNetwork {
        TwoModeNetwork {
            rows: Arc::clone(&self.cols),
            cols: Arc::clone(&self.rows),
            matrix: self.matrix.transpose(),
        }
    }

    pub fn binarize(&self) -> TwoModeNetwork {
        TwoModeNetwork {
            rows: Arc::clone(&self.rows),
            cols: Arc::clone(&self.cols),
            matrix: self.matrix.binarize(),
        }
    }

    pub fn row_normalize(&self, mode: NormalizeMode) -> TwoModeNetwork {
        let factors: Vec<f64> = match mode {
            NormalizeMode::ByOutdeg => self
                .matrix
                .row_degrees(false)
                .iter()
                .map(|&d| 1.0 / d.max(1.0))
                .collect(),
            NormalizeMode::ByOutdegMinus1 => self
                .matrix
                .row_degrees(false)
                .iter()
                .map(|&d| 1.0 / (d - 1.0).max(1.0))
                .collect(),
            NormalizeMode::ByWeightedOutdeg => self
                .matrix
                .row_degrees(true)
                .iter()
                .map(|&d| if d > 0.0 { 1.0 / d } else { 1.0 })
                .collect(),
        };
        TwoModeNetwork {
            rows: Arc::clone(&self.rows),
            cols: Arc::clone(&self.cols),
            matrix: self.matrix.scale_rows(&factors),
        }
    }

    pub fn degrees(&self, side: Side, weighted: bool) -> NodeVector {
        let (over, values) = match side {
            Side::Rows => (Arc::clone(&self.rows), self.matrix.row_degrees(weighted)),
            Side::Cols => (Arc::clone(&self.cols), self.matrix.col_degrees(weighted)),
        };
        NodeVector { over, values }
    }

    /// Merge nodes on one side according to a partition; parallel arcs sum.
    /// `class_labels[k]` names the merged node of class `k`; `role` is the
    /// role of the shrunken node set.
    pub fn shrink(
        &self,
        side: Side,
        partition: &Partition,
        class_labels: Vec<String>,
        role: Role,
    ) -> Result<TwoModeNetwork, NetError> {
        let side_set = match side {
            Side::Rows => &self.rows,
            Side::Cols => &self.cols,
        };
        if !same_node_set(partition.over(), side_set) {
            return Err(NetError::PartitionMismatch);
        }
        let nclasses = class_labels.len();
        for &c in partition.classes() {
            if c as usize >= nclasses {
                return Err(NetError::ClassOutOfRange(c));
            }
        }
        let shrunk = NodeSet::new(role, class_labels)?;
        let (rows, cols, matrix) = match side {
            Side::Rows => {
                let m = self.matrix.remap(
                    nclasses,
                    self.cols.len(),
                    |r| Some(partition.classes()[r] as usize),
                    Some,
                );
                (shrunk, Arc::clone(&self.cols), m)
            }
            Side::Cols => {
                let m = self.matrix.remap(
                    self.rows.len(),
                    nclasses,
                    Some,
                    |c| Some(partition.classes()[c] as usize),
                );
                (Arc::clone(&self.rows), shrunk, m)
            }
        };
        if rows.role() == cols.role() {
            return Err(NetError::SameRole(rows.role()));
        }
        Ok(TwoModeNetwork { rows, cols, matrix })
    }

    /// Keep only arcs whose row class is in `row_classes` and column class
    /// in `col_classes`; node sets are restricted accordingly. With
    /// `drop_zero_outdeg_rows`, surviving rows without arcs are removed too.
    pub fn extract(
        &self,
        row_partition: &Partition,
        row_classes: &[u32],
        col_partition: &Partition,
        col_classes: &[u32],
        drop_zero_outdeg_rows: bool,
    ) -> Result<TwoModeNetwork, NetError> {
        if !same_node_set(row_partition.over(), &self.rows)
            || !same_node_set(col_partition.over(), &self.cols)
        {
            return Err(NetError::PartitionMismatch);
        }
        let row_keep: Vec<bool> = row_partition
            .classes()
            .iter()
            .map(|c| row_classes.contains(c))
            .collect();
        let col_keep: Vec<bool> = col_partition
            .classes()
            .iter()
            .map(|c| col_classes.contains(c))
            .collect();

        let row_keep = if drop_zero_outdeg_rows {
            let mut has_arc = vec![false; self.rows.len()];
            for (r, c, _) in self.matrix.entries() {
                if row_keep[r] && col_keep[c] {
                    has_arc[r] = true;
                }
            }
            has_arc
        } else {
            row_keep
        };

        let mut row_map = vec![None; self.rows.len()];
        let mut row_labels = Vec::new();
        for (i, &k) in row_keep.iter().enumerate() {
            if k {
                row_map[i] = Some(row_labels.len());
                row_labels.push(self.rows.label(i).to_string());
            }
        }
        let mut col_map = vec![None; self.cols.len()];
        let mut col_labels = Vec::new();
        for (i, &k) in col_keep.iter().enumerate() {
            if k {
                col_map[i] = Some(col_labels.len());
                col_labels.push(self.cols.label(i).to_string());
            }
        }
        let matrix = self.matrix.remap(
            row_labels.len(),
            col_labels.len(),
            |r| row_map[r],
            |c| col_map[c],
        );
        Ok(TwoModeNetwork {
            rows: NodeSet::new(self.rows.role(), row_labels)?,
            cols: NodeSet::new(self.cols.role(), col_labels)?,
            matrix,
        })
    }

    /// Drop a set of columns (by node position), keeping the rest re-indexed.
    pub fn without_cols(&self, drop: &[usize]) -> Result<TwoModeNetwork, NetError> {
        let mut col_map = vec![None; self.cols.len()];
        let mut labels = Vec::new();
        for i in 0..self.cols.len() {
            if !drop.contains(&i) {
                col_map[i] = Some(labels.len());
                labels.push(self.cols.label(i).to_string());
            }
        }
        let matrix = self
            .matrix
            .remap(self.rows.len(), labels.len(), Some, |c| col_map[c]);
        Ok(TwoModeNetwork {
            rows: Arc::clone(&self.rows),
            cols: NodeSet::new(self.cols.role(), labels)?,
            matrix,
        })
    }
}

/// Matrix product of two two-mode networks. The inner node sets must
/// coincide; when the outer node sets coincide the result is a directed
/// one-mode network with loops.
pub fn multiply(a: &TwoModeNetwork, b: &TwoModeNetwork) -> Result<Product, NetError> {
    if !same_node_set(&a.cols, &b.rows) {
        return Err(NetError::DimensionMismatch);
    }
    let matrix = a.matrix.multiply(&b.matrix);
    if same_node_set(&a.rows, &b.cols) {
        Ok(Product::OneMode(DirectedNetwork {
            nodes: Arc::clone(&a.rows),
            matrix,
        }))
    } else if a.rows.role() == b.cols.role() {
        Err(NetError::SameRole(a.rows.role()))
    } else {
        Ok(Product::TwoMode(TwoModeNetwork {
            rows: Arc::clone(&a.rows),
            cols: Arc::clone(&b.cols),
            matrix,
        }))
    }
}

impl DirectedNetwork {
    pub fn new(
        nodes: Arc<NodeSet>,
        arcs: Vec<(usize, usize, f64)>,
    ) -> Result<DirectedNetwork, NetError> {
        if arcs.iter().any(|&(_, _, w)| w < 0.0) {
            return Err(NetError::NegativeWeight);
        }
        let matrix = Csr::from_triplets(nodes.len(), nodes.len(), arcs);
        Ok(DirectedNetwork { nodes, matrix })
    }

    pub fn nodes(&self) -> &Arc<NodeSet> {
        &self.nodes
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.matrix.entries()
    }

    pub fn arc_count(&self) -> usize {
        self.matrix.nnz()
    }

    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.matrix.get(u, v)
    }

    pub fn loop_weight(&self, u: usize) -> f64 {
        self.matrix.get(u, u)
    }

    pub fn row_sum(&self, u: usize) -> f64 {
        self.matrix.row(u).map(|(_, w)| w).sum()
    }

    pub fn total_weight(&self) -> f64 {
        self.matrix.total_weight()
    }

    /// weight{u,v} = w(u,v) + w(v,u) for u != v; loops discarded.
    pub fn symmetrize_drop_diagonal(&self) -> UndirectedNetwork {
        let mut edges: HashMap<(usize, usize), f64> = HashMap::new();
        for (u, v, w) in self.matrix.entries() {
            if u == v {
                continue;
            }
            let key = (u.min(v), u.max(v));
            *edges.entry(key).or_insert(0.0) += w;
        }
        let mut edges: Vec<(usize, usize, f64)> =
            edges.into_iter().map(|((u, v), w)| (u, v, w)).collect();
        edges.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        UndirectedNetwork {
            nodes: Arc::clone(&self.nodes),
            edges,
        }
    }
}

impl UndirectedNetwork {
    /// Edges may be given in any orientation; duplicates sum, loops are
    /// rejected.
    pub fn new(
        nodes: Arc<NodeSet>,
        edges: Vec<(usize, usize, f64)>,
    ) -> Result<UndirectedNetwork, NetError> {
        let mut map: HashMap<(usize, usize), f64> = HashMap::new();
        for (u, v, w) in edges {
            if u == v {
                return Err(NetError::LoopInUndirected(u));
            }
            if w < 0.0 {
                return Err(NetError::NegativeWeight);
            }
            if u >= nodes.len() || v >= nodes.len() {
                return Err(NetError::NodeOutOfRange(u.max(v)));
            }
            *map.entry((u.min(v), u.max(v))).or_insert(0.0) += w;
        }
        let mut edges: Vec<(usize, usize, f64)> =
            map.into_iter().map(|((u, v), w)| (u, v, w)).collect();
        edges.retain(|&(_, _, w)| w != 0.0);
        edges.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        Ok(UndirectedNetwork { nodes, edges })
    }

    pub fn nodes(&self) -> &Arc<NodeSet> {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|&(_, _, w)| w).sum()
    }

    /// Adjacency lists (neighbor, weight) for every node.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(u, v, w) in &self.edges {
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        adj
    }

    /// Subnetwork induced by a node subset (given as positions).
    pub fn induced(&self, keep: &[usize]) -> Result<UndirectedNetwork, NetError> {
        let mut map = vec![None; self.nodes.len()];
        let mut labels = Vec::new();
        for &i in keep {
            if map[i].is_none() {
                map[i] = Some(labels.len());
                labels.push(self.nodes.label(i).to_string());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v, w)| Some((map[u]?, map[v]?, w)))
            .collect();
        UndirectedNetwork::new(NodeSet::new(self.nodes.role(), labels)?, edges)
    }
}

/// Integer class per node, total over its node set.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    over: Arc<NodeSet>,
    classes: Vec<u32>,
}

impl Partition {
    pub fn new(over: Arc<NodeSet>, classes: Vec<u32>) -> Result<Partition, NetError> {
        if classes.len() != over.len() {
            return Err(NetError::PartitionMismatch);
        }
        Ok(Partition { over, classes })
    }

    pub fn over(&self) -> &Arc<NodeSet> {
        &self.over
    }

    pub fn classes(&self) -> &[u32] {
        &self.classes
    }

    pub fn class_of(&self, node: usize) -> u32 {
        self.classes[node]
    }

    /// Partition by an arbitrary label-derived key; classes are numbered in
    /// first-seen order and the key strings returned alongside.
    pub fn by_label_key(
        over: &Arc<NodeSet>,
        key: impl Fn(&str) -> String,
    ) -> (Partition, Vec<String>) {
        let mut keys: Vec<String> = Vec::new();
        let mut index: HashMap<String, u32> = HashMap::new();
        let classes = over
            .labels()
            .iter()
            .map(|l| {
                let k = key(l);
                *index.entry(k.clone()).or_insert_with(|| {
                    keys.push(k);
                    (keys.len() - 1) as u32
                })
            })
            .collect();
        (
            Partition {
                over: Arc::clone(over),
                classes,
            },
            keys,
        )
    }
}

/// Real value per node, total over its node set.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeVector {
    over: Arc<NodeSet>,
    values: Vec<f64>,
}

impl NodeVector {
    pub fn new(over: Arc<NodeSet>, values: Vec<f64>) -> Result<NodeVector, NetError> {
        if values.len() != over.len() {
            return Err(NetError::PartitionMismatch);
        }
        Ok(NodeVector { over, values })
    }

    pub fn over(&self) -> &Arc<NodeSet> {
        &self.over
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value_of(&self, node: usize) -> f64 {
        self.values[node]
    }
}
