use std::collections::VecDeque;
use std::fmt;

use super::Graph;

/// Shortest cycle and shortest odd cycle; `None` stands for infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleStats {
    pub girth: Option<usize>,
    pub odd_girth: Option<usize>,
}

impl CycleStats {
    pub fn odd_girth_at_least(&self, bound: usize) -> bool {
        self.odd_girth.is_none_or(|og| og >= bound)
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_girth.is_none()
    }
}

fn show(x: Option<usize>) -> String {
    x.map_or_else(|| "inf".to_string(), |v| v.to_string())
}

impl fmt::Display for CycleStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "girth={} odd_girth={}",
            show(self.girth),
            show(self.odd_girth)
        )
    }
}

pub fn cycle_stats(g: &Graph) -> CycleStats {
    if g.has_loops() {
        return CycleStats {
            girth: Some(1),
            odd_girth: Some(1),
        };
    }
    CycleStats {
        girth: girth(g),
        odd_girth: odd_girth(g),
    }
}

fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Shortest odd closed walk, found as the distance from `(v, even)` to `(v, odd)`
/// in the bipartite double cover.
fn odd_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; 2 * n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[2 * root] = 0;
        let mut queue = VecDeque::from([2 * root]);
        while let Some(state) = queue.pop_front() {
            let (u, parity) = (state / 2, state % 2);
            let d = dist[state];
            if best.is_some_and(|b| d + 1 >= b) {
                break;
            }
            for w in g.neighbors(u).iter() {
                let next = 2 * w + (1 - parity);
                if dist[next] == usize::MAX {
                    dist[next] = d + 1;
                    if next == 2 * root + 1 {
                        best = Some(best.map_or(d + 1, |b| b.min(d + 1)));
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    best
}
