use super::{chromatic_number, decide_coloring, ColoringOutcome};
use crate::caps::Caps;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub chromatic: usize,
    /// `drops[v]`: whether `χ(g - v) < χ(g)`.
    pub drops: Vec<bool>,
    pub critical: bool,
}

impl CriticalityReport {
    pub fn non_critical_vertices(&self) -> Vec<usize> {
        (0..self.drops.len()).filter(|&v| !self.drops[v]).collect()
    }
}

/// For each vertex, decides whether deleting it makes the graph `(χ - 1)`-colourable.
pub fn vertex_critical(g: &Graph, caps: &Caps) -> Result<CriticalityReport> {
    let chi = chromatic_number(g, caps)?.integer();
    let mut drops = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let drop = chi > 0
            && matches!(
                decide_coloring(&g.without_vertex(v), chi - 1, false)?.outcome,
                ColoringOutcome::Colorable(_)
            );
        drops.push(drop);
    }
    let critical = drops.iter().all(|&d| d);
    Ok(CriticalityReport {
        chromatic: chi,
        drops,
        critical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, schrijver};

    #[test]
    fn odd_cycle_is_critical() {
        let r = vertex_critical(&schrijver(5, 2).unwrap(), &Caps::default()).unwrap();
        assert_eq!(r.chromatic, 3);
        assert!(r.critical);
    }

    #[test]
    fn pendant_vertex_is_not() {
        let mut g = cycle(5).unwrap();
        let mut h = Graph::new(6);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(0, 5);
        g = h;
        let r = vertex_critical(&g, &Caps::default()).unwrap();
        assert!(!r.critical);
        assert_eq!(r.non_critical_vertices(), vec![5]);
    }
}
