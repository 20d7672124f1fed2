//! Undirected finite graphs with optional loops and structured vertex labels.

mod cycles;
mod iso;
mod label;
mod ops;
pub mod symmetry;

use std::collections::HashSet;

pub use cycles::{cycle_stats, CycleStats};
pub use iso::{find_isomorphism, is_isomorphic, DEFAULT_ISO_CAP};
pub use label::{Label, Subset, MAX_GROUND};
pub use ops::{power, subdivide, walk_neighborhood};
pub use symmetry::orbit_representatives;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Vertices are `0..order`; adjacency is a symmetric relation stored as one bitset row per vertex.
/// A loop at `v` is recorded as `v` in its own row.
///
/// Equality compares adjacency and labels; the name is descriptive metadata only.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<BitSet>,
    labels: Option<Vec<Label>>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(order: usize) -> Self {
        Graph {
            adj: vec![BitSet::new(order); order],
            labels: None,
            name: None,
        }
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(order);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub(crate) fn from_rows(adj: Vec<BitSet>) -> Self {
        Graph {
            adj,
            labels: None,
            name: None,
        }
    }

    /// Attach one label per vertex; labels must be pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::Labels(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::Labels(format!("duplicate label {l}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub(crate) fn set_labels_unchecked(&mut self, labels: Option<Vec<Label>>) {
        self.labels = labels;
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u < self.order() && v < self.order(),
            "edge ({u},{v}) out of range"
        );
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[BitSet] {
        &self.adj
    }

    /// Number of distinct neighbours, counting `v` itself when it carries a loop.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.adj[v].contains(v)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.order()).any(|v| self.has_loop(v))
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    /// Edges `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            out.extend(self.adj[u].iter().filter(|&v| v >= u).map(|v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let degree_sum: usize = self.adj.iter().map(BitSet::count).sum();
        let loops = (0..self.order()).filter(|&v| self.has_loop(v)).count();
        (degree_sum + loops) / 2
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Label> {
        self.labels.as_ref().map(|l| &l[v])
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_of(&self, label: &Label) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Induced subgraph on `vertices` (kept in the given order), labels carried over.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let n = vertices.len();
        let mut adj = vec![BitSet::new(n); n];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i].insert(j);
                }
            }
        }
        Graph {
            adj,
            labels: self
                .labels
                .as_ref()
                .map(|l| vertices.iter().map(|&v| l[v].clone()).collect()),
            name: None,
        }
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Compare vertices by label when labels exist, by index otherwise.
    pub(crate) fn label_cmp(&self, u: usize, v: usize) -> std::cmp::Ordering {
        match &self.labels {
            Some(l) => l[u].cmp(&l[v]).then(u.cmp(&v)),
            None => u.cmp(&v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_and_loops() {
        let mut g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        g.add_edge(2, 2);
        assert!(g.has_loop(2) && g.has_loops());
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 2)]);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let g = Graph::new(2);
        let l = Label::Text("x".into());
        assert!(g.clone().with_labels(vec![l.clone(), l]).is_err());
        assert!(g.with_labels(vec![Label::Text("x".into())]).is_err());
    }

    #[test]
    fn induced_keeps_labels() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)])
            .with_labels(vec![
                "a".parse().unwrap(),
                "b".parse().unwrap(),
                "c".parse().unwrap(),
            ])
            .unwrap();
        let h = g.without_vertex(1);
        assert_eq!(h.order(), 2);
        assert!(h.has_edge(0, 1));
        assert_eq!(h.label(1).unwrap().to_string(), "c");
    }
}
