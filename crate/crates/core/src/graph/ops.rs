use super::{Graph, Label};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// `k`-th power: `u ~ v` iff some walk of length exactly `k` joins them.
///
/// Computed as `k - 1` boolean compositions of the adjacency relation, so only
/// reachability is tracked and nothing overflows. Loops in `g` act as ordinary edges.
pub fn power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::param("graph power requires k >= 1"));
    }
    let base = g.rows();
    let mut cur: Vec<BitSet> = base.to_vec();
    for _ in 1..k {
        cur = cur
            .iter()
            .map(|row| {
                let mut next = BitSet::new(g.order());
                for w in row.iter() {
                    next.union_with(&base[w]);
                }
                next
            })
            .collect();
    }
    let mut out = Graph::from_rows(cur);
    out.set_labels_unchecked(g.labels().map(<[Label]>::to_vec));
    if let Some(name) = g.name() {
        out = out.with_name(format!("{name}^({k})"));
    }
    Ok(out)
}

/// `N_i(v)`: vertices joined to `v` by a walk of length exactly `i`. `N_0(v) = {v}`.
pub fn walk_neighborhood(g: &Graph, v: usize, i: usize) -> BitSet {
    let mut frontier = BitSet::from_indices(g.order(), [v]);
    for _ in 0..i {
        let mut next = BitSet::new(g.order());
        for w in frontier.iter() {
            next.union_with(g.neighbors(w));
        }
        frontier = next;
    }
    frontier
}

/// `t`-subdivision: every edge becomes a path with `t` inner vertices.
///
/// Original vertices keep indices `0..order` and their labels (unlabeled ones get their index
/// as a text label). Inner vertices follow, edge by edge in lexicographic order, labeled
/// `u-v.p` where position `p = 1` is adjacent to `u`.
pub fn subdivide(g: &Graph, t: usize) -> Result<Graph> {
    if g.has_loops() {
        return Err(Error::Loops("cannot subdivide a loop".into()));
    }
    if t == 0 {
        return Ok(g.clone());
    }
    let edges = g.edges();
    let n = g.order();
    let total = n + t * edges.len();
    let mut out = Graph::new(total);
    let mut labels: Vec<Label> = (0..n)
        .map(|v| {
            g.label(v)
                .cloned()
                .unwrap_or_else(|| Label::Text(v.to_string()))
        })
        .collect();
    let mut next = n;
    for &(u, v) in &edges {
        let mut prev = u;
        for p in 1..=t {
            out.add_edge(prev, next);
            labels.push(Label::Text(format!("{u}-{v}.{p}")));
            prev = next;
            next += 1;
        }
        out.add_edge(prev, v);
    }
    out.with_labels(labels)
}
