use super::{
    chromatic_number, require_cap, require_loop_free, Certificate, ChromaticResult, Rational,
    Refutation,
};
use crate::caps::Caps;
use crate::error::Result;
use crate::graph::Graph;
use crate::hom::VertexMap;

/// Local chromatic number: the least `s` such that some proper colouring shows at most
/// `s - 1` distinct colours on every open neighbourhood.
///
/// Starting from `s = χ` (always feasible), `s` is lowered until the decision search fails.
pub fn local_chromatic(g: &Graph, caps: &Caps) -> Result<ChromaticResult> {
    require_loop_free(g, "local chromatic number")?;
    require_cap(g, "local chromatic instance", caps.local)?;
    let chi = chromatic_number(g, caps)?;
    let mut best_s = chi.integer();
    let mut best = chi.map().cloned().unwrap_or_default();
    let mut refutations = Vec::new();
    while best_s > 1 {
        let s = best_s - 1;
        let mut search = LocalSearch::new(g, s);
        match search.run() {
            Some(col) => {
                best_s = s;
                best = col;
            }
            None => {
                refutations.push(Refutation {
                    claim: format!(
                        "every proper colouring shows >= {s} colours on some neighbourhood"
                    ),
                    method: "search",
                    nodes: search.nodes,
                });
                break;
            }
        }
    }
    Ok(ChromaticResult::exact(
        Rational::from_integer(best_s as i64),
        Certificate::Map(best),
        refutations,
    ))
}

/// Neighbourhood colour count of `col`: `max_v |{col(u) : u ∈ N(v)}| + 1`.
pub fn local_value(g: &Graph, col: &VertexMap) -> usize {
    (0..g.order())
        .map(|v| {
            let mut seen: Vec<usize> = g.neighbors(v).iter().map(|u| col[u]).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len() + 1
        })
        .max()
        .unwrap_or(0)
}

struct LocalSearch<'a> {
    g: &'a Graph,
    limit: usize,
    order: Vec<usize>,
    color: Vec<usize>,
    /// `hits[w][c]`: coloured neighbours of `w` with colour `c`.
    hits: Vec<Vec<u32>>,
    distinct: Vec<usize>,
    nodes: u64,
}

impl<'a> LocalSearch<'a> {
    fn new(g: &'a Graph, s: usize) -> Self {
        let n = g.order();
        // breadth-first from high-degree vertices keeps constraints tight early
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
        for &start in &by_degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut i = order.len();
            order.push(start);
            while i < order.len() {
                let u = order[i];
                i += 1;
                for w in g.neighbors(u).iter() {
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        LocalSearch {
            g,
            limit: s - 1,
            order,
            color: vec![usize::MAX; n],
            hits: vec![vec![0; n]; n],
            distinct: vec![0; n],
            nodes: 0,
        }
    }

    fn run(&mut self) -> Option<VertexMap> {
        if self.rec(0, 0) {
            Some(VertexMap::new(self.color.clone()))
        } else {
            None
        }
    }

    fn rec(&mut self, depth: usize, used: usize) -> bool {
        self.nodes += 1;
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let n = self.g.order();
        for c in 0..=used.min(n - 1) {
            if self.g.neighbors(v).iter().any(|u| self.color[u] == c) {
                continue;
            }
            let overflow = self
                .g
                .neighbors(v)
                .iter()
                .any(|w| self.hits[w][c] == 0 && self.distinct[w] + 1 > self.limit);
            if overflow {
                continue;
            }
            self.color[v] = c;
            for w in self.g.neighbors(v).iter() {
                if self.hits[w][c] == 0 {
                    self.distinct[w] += 1;
                }
                self.hits[w][c] += 1;
            }
            if self.rec(depth + 1, used.max(c + 1)) {
                return true;
            }
            for w in self.g.neighbors(v).iter() {
                self.hits[w][c] -= 1;
                if self.hits[w][c] == 0 {
                    self.distinct[w] -= 1;
                }
            }
            self.color[v] = usize::MAX;
        }
        false
    }
}
