use super::{cycle_stats, Graph};
use crate::error::{Error, Result};

pub const DEFAULT_ISO_CAP: usize = 16;

pub fn is_isomorphic(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(g, h, cap)?.is_some())
}

/// Edge-preserving bijection `g -> h`, if any. Labels are ignored.
pub fn find_isomorphism(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.order() > cap {
            return Err(Error::cap("isomorphism instance", x.order(), cap));
        }
    }
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let signature = |x: &Graph| {
        let mut s: Vec<(usize, bool)> = (0..n).map(|v| (x.degree(v), x.has_loop(v))).collect();
        s.sort_unstable();
        s
    };
    if signature(g) != signature(h) || cycle_stats(g) != cycle_stats(h) {
        return Ok(None);
    }

    // BFS order so each vertex after the first in a component has a mapped neighbour.
    let mut order = Vec::with_capacity(n);
    for comp in g.components() {
        let start = *comp
            .iter()
            .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut queue = vec![start];
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            i += 1;
            for w in g.neighbors(u).iter() {
                if !seen[w] && comp.binary_search(&w).is_ok() {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        order.extend(queue);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for x in 0..h.order() {
        if used[x] || h.degree(x) != g.degree(v) || h.has_loop(x) != g.has_loop(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(v, w) == h.has_edge(x, map[w]));
        if !consistent {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        used[x] = false;
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cycle};

    #[test]
    fn relabeled_cycle() {
        let c9 = cycle(9).unwrap();
        let perm = [4, 7, 1, 0, 8, 2, 6, 3, 5];
        let relabeled =
            Graph::from_edges(9, c9.edges().into_iter().map(|(u, v)| (perm[u], perm[v])));
        let iso = find_isomorphism(&c9, &relabeled, 16).unwrap().unwrap();
        for (u, v) in c9.edges() {
            assert!(relabeled.has_edge(iso[u], iso[v]));
        }
    }

    #[test]
    fn distinguishes_and_caps() {
        assert!(!is_isomorphic(&cycle(6).unwrap(), &complete_bipartite(3, 3), 16).unwrap());
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!is_isomorphic(&cycle(6).unwrap(), &two_triangles, 16).unwrap());
        assert!(matches!(
            is_isomorphic(&cycle(17).unwrap(), &cycle(17).unwrap(), 16),
            Err(Error::CapExceeded { .. })
        ));
    }
}
