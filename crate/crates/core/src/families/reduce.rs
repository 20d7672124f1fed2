use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::hom::VertexMap;

/// Record of a dominated-vertex reduction run; all indices refer to the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    /// `(u, v)` in removal order: `u` was removed because `N(u) ⊆ N(v)` at that step.
    pub removed: Vec<(usize, usize)>,
    pub survivors: Vec<usize>,
    /// Each vertex sent to a survivor; fixes survivors.
    pub retraction: VertexMap,
}

/// Repeatedly delete a vertex `u` whose neighbourhood is contained in that of another vertex `v`.
///
/// Scan order is by label. A vertex `u` qualifies through `v` when `N(u) ⊊ N(v)`, or when
/// `N(u) = N(v)` and `v` precedes `u`; the first qualifying `u` and its first witness are taken,
/// and the scan restarts on the reduced graph.
pub fn while_reduce(g: &Graph) -> (Graph, ReductionTrace) {
    let n = g.order();
    let mut by_label: Vec<usize> = (0..n).collect();
    by_label.sort_by(|&a, &b| g.label_cmp(a, b));
    let mut rank = vec![0; n];
    for (r, &v) in by_label.iter().enumerate() {
        rank[v] = r;
    }

    let mut alive = BitSet::full(n);
    let mut nbrs: Vec<BitSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut removed = Vec::new();

    while let Some((u, v)) = find_dominated(&by_label, &rank, &alive, &nbrs) {
        alive.remove(u);
        for w in g.neighbors(u).iter() {
            nbrs[w].remove(u);
        }
        removed.push((u, v));
    }

    let mut image: Vec<usize> = (0..n).collect();
    for &(u, v) in &removed {
        image[u] = v;
    }
    let retraction = (0..n)
        .map(|mut x| {
            while !alive.contains(x) {
                x = image[x];
            }
            x
        })
        .collect::<Vec<_>>();

    let survivors: Vec<usize> = alive.iter().collect();
    let reduced = g.induced(&survivors);
    (
        reduced,
        ReductionTrace {
            removed,
            survivors,
            retraction: VertexMap::new(retraction),
        },
    )
}

fn find_dominated(
    by_label: &[usize],
    rank: &[usize],
    alive: &BitSet,
    nbrs: &[BitSet],
) -> Option<(usize, usize)> {
    for &u in by_label.iter().filter(|&&u| alive.contains(u)) {
        let nu = &nbrs[u];
        // any witness must be adjacent to every neighbour of u, in particular the first one
        let pivot = nu.first();
        for &v in by_label {
            if v == u || !alive.contains(v) {
                continue;
            }
            if let Some(p) = pivot {
                if !nbrs[p].contains(v) {
                    continue;
                }
            }
            if nu.is_subset(&nbrs[v]) && (nu != &nbrs[v] || rank[v] < rank[u]) {
                return Some((u, v));
            }
        }
    }
    None
}
