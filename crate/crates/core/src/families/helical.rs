use std::collections::HashMap;

use super::sets::{is_union_of, n_subsets, stable_subsets};
use crate::error::{Error, Result};
use crate::graph::{Graph, Label, Subset, MAX_GROUND};

/// Which member of the helical family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HelicalKind {
    /// `H(m,n,k)`: all helical tuples.
    Full,
    /// `SG(m,n,k)`: every coordinate is a union of 2-stable `n`-subsets.
    Schrijver,
    /// `SH(m,n,k)`: additionally every coordinate's complement is such a union.
    Stable,
}

impl HelicalKind {
    pub fn prefix(self) -> &'static str {
        match self {
            HelicalKind::Full => "H",
            HelicalKind::Schrijver => "SGk",
            HelicalKind::Stable => "SH",
        }
    }
}

pub(crate) fn check_params(m: usize, n: usize) -> Result<()> {
    if n == 0 || m < 2 * n {
        return Err(Error::param(format!("need m >= 2n >= 2, got m={m} n={n}")));
    }
    if m > MAX_GROUND {
        return Err(Error::param(format!("ground set {m} exceeds {MAX_GROUND}")));
    }
    Ok(())
}

/// Checks the helical tuple constraints: `|A_1| = n`, `|A_r| >= n`,
/// consecutive coordinates disjoint, `A_t ⊆ A_{t+2}`.
pub fn is_helical_tuple(tuple: &[Subset], n: usize) -> bool {
    !tuple.is_empty()
        && tuple[0].len() == n
        && tuple.iter().all(|a| a.len() >= n)
        && tuple.windows(2).all(|w| w[0].is_disjoint(w[1]))
        && tuple.windows(3).all(|w| w[0].is_subset(w[2]))
}

/// Helical adjacency: `A_i ∩ B_i = ∅` for every `i`, and for `j < k`
/// both `A_j ⊆ B_{j+1}` and `B_j ⊆ A_{j+1}`.
pub fn helical_adjacent(a: &[Subset], b: &[Subset]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.is_disjoint(*y))
        && (1..a.len()).all(|j| a[j - 1].is_subset(b[j]) && b[j - 1].is_subset(a[j]))
}

/// Vertex tuples of the requested helical graph, sorted lexicographically.
pub fn helical_vertices(
    kind: HelicalKind,
    m: usize,
    n: usize,
    k: usize,
) -> Result<Vec<Vec<Subset>>> {
    let mut out = Vec::new();
    walk_tuples(kind, m, n, k, &mut |t| {
        out.push(t.to_vec());
        false
    })?;
    out.sort();
    Ok(out)
}

/// Number of vertices of the helical graph, or `None` as soon as it exceeds `cap`.
pub fn helical_order(
    kind: HelicalKind,
    m: usize,
    n: usize,
    k: usize,
    cap: usize,
) -> Result<Option<usize>> {
    let mut count = 0usize;
    let stopped = walk_tuples(kind, m, n, k, &mut |_| {
        count += 1;
        count > cap
    })?;
    Ok((!stopped).then_some(count))
}

/// Visits every tuple in generation order; returns true if `visit` asked to stop.
fn walk_tuples(
    kind: HelicalKind,
    m: usize,
    n: usize,
    k: usize,
    visit: &mut dyn FnMut(&[Subset]) -> bool,
) -> Result<bool> {
    check_params(m, n)?;
    if k == 0 {
        return Err(Error::param("helical graphs need k >= 1"));
    }
    let stable = stable_subsets(m, n);
    let coord_ok = |s: Subset| -> bool {
        s.len() >= n
            && match kind {
                HelicalKind::Full => true,
                HelicalKind::Schrijver => is_union_of(s, &stable),
                HelicalKind::Stable => {
                    is_union_of(s, &stable) && is_union_of(s.complement(m), &stable)
                }
            }
    };

    let mut tuple = Vec::with_capacity(k);
    for a1 in n_subsets(m, n).into_iter().filter(|&s| coord_ok(s)) {
        tuple.push(a1);
        let stop = extend(m, k, &coord_ok, &mut tuple, visit);
        tuple.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

fn extend(
    m: usize,
    k: usize,
    coord_ok: &dyn Fn(Subset) -> bool,
    tuple: &mut Vec<Subset>,
    visit: &mut dyn FnMut(&[Subset]) -> bool,
) -> bool {
    let r = tuple.len();
    if r == k {
        return visit(tuple);
    }
    let base = if r >= 2 { tuple[r - 2] } else { Subset::EMPTY };
    let free = tuple[r - 1].complement(m).difference(base).mask();
    let mut sub = free;
    loop {
        let cand = base.union(Subset::from_mask(sub));
        if coord_ok(cand) {
            tuple.push(cand);
            let stop = extend(m, k, coord_ok, tuple, visit);
            tuple.pop();
            if stop {
                return true;
            }
        }
        if sub == 0 {
            return false;
        }
        sub = (sub - 1) & free;
    }
}

/// Graph on the given tuples (assumed sorted) with helical adjacency and tuple labels.
pub(crate) fn graph_on_tuples(tuples: Vec<Vec<Subset>>) -> Graph {
    let n = tuples.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if helical_adjacent(&tuples[i], &tuples[j]) {
                g.add_edge(i, j);
            }
        }
    }
    let labels = tuples.into_iter().map(Label::Tuple).collect();
    g.with_labels(labels).expect("helical tuples are distinct")
}

pub fn helical_graph(kind: HelicalKind, m: usize, n: usize, k: usize) -> Result<Graph> {
    let g = graph_on_tuples(helical_vertices(kind, m, n, k)?);
    Ok(g.with_name(format!("{}:{m},{n},{k}", kind.prefix())))
}

pub fn helical(m: usize, n: usize, k: usize) -> Result<Graph> {
    helical_graph(HelicalKind::Full, m, n, k)
}

pub fn schrijver_helical(m: usize, n: usize, k: usize) -> Result<Graph> {
    helical_graph(HelicalKind::Schrijver, m, n, k)
}

pub fn stable_helical(m: usize, n: usize, k: usize) -> Result<Graph> {
    helical_graph(HelicalKind::Stable, m, n, k)
}

/// Label -> vertex index lookup for tuple-labelled graphs.
pub fn tuple_index(g: &Graph) -> HashMap<Vec<Subset>, usize> {
    g.labels()
        .into_iter()
        .flatten()
        .enumerate()
        .filter_map(|(i, l)| l.tuple().map(|t| (t.to_vec(), i)))
        .collect()
}
