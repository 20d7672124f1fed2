//! Exact `t`-colourability by saturation-ordered backtracking.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::VertexMap;

pub const MAX_COLORS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringOutcome {
    Colorable(VertexMap),
    /// Exhaustive search found no colouring; `nodes` is the size of the refutation tree.
    Refuted {
        nodes: u64,
    },
}

impl ColoringOutcome {
    pub fn coloring(&self) -> Option<&VertexMap> {
        match self {
            ColoringOutcome::Colorable(c) => Some(c),
            ColoringOutcome::Refuted { .. } => None,
        }
    }
}

/// Decides whether `g` has a proper colouring with colours `0..t`.
///
/// Colours are introduced in increasing order (a fresh colour is always the lowest unused one),
/// which removes the `t!` palette symmetry. The vertex with fewest available colours is
/// branched on next; ties go to higher degree, then lower index.
pub fn color_with(g: &Graph, t: usize) -> Result<ColoringOutcome> {
    Ok(color_within(g, t, u64::MAX)?.expect("unbounded search always finishes"))
}

/// As [`color_with`], giving up with `None` once the search tree exceeds `budget` nodes.
pub fn color_within(g: &Graph, t: usize, budget: u64) -> Result<Option<ColoringOutcome>> {
    if g.has_loops() {
        return Err(Error::Loops("a looped vertex has no proper colour".into()));
    }
    if t > MAX_COLORS {
        return Err(Error::cap("palette", t, MAX_COLORS));
    }
    let n = g.order();
    if n == 0 {
        return Ok(Some(ColoringOutcome::Colorable(VertexMap::default())));
    }
    if t == 0 {
        return Ok(Some(ColoringOutcome::Refuted { nodes: 1 }));
    }
    let palette = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    let mut s = Search {
        g,
        t,
        available: vec![palette; n],
        color: vec![usize::MAX; n],
        degree: (0..n).map(|v| g.degree(v)).collect(),
        uncolored: n,
        used: 0,
        nodes: 0,
        budget,
    };
    if s.solve() {
        Ok(Some(ColoringOutcome::Colorable(VertexMap::new(s.color))))
    } else if s.nodes > budget {
        Ok(None)
    } else {
        Ok(Some(ColoringOutcome::Refuted { nodes: s.nodes }))
    }
}

struct Search<'a> {
    g: &'a Graph,
    t: usize,
    available: Vec<u64>,
    color: Vec<usize>,
    degree: Vec<usize>,
    uncolored: usize,
    used: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn choices(&self, v: usize) -> u64 {
        let open = (self.used + 1).min(self.t);
        let allowed = if open == 64 {
            u64::MAX
        } else {
            (1u64 << open) - 1
        };
        self.available[v] & allowed
    }

    fn solve(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if self.uncolored == 0 {
            return true;
        }
        let mut best = usize::MAX;
        let mut best_key = (u32::MAX, 0usize);
        for v in 0..self.color.len() {
            if self.color[v] != usize::MAX {
                continue;
            }
            let key = (self.choices(v).count_ones(), usize::MAX - self.degree[v]);
            if key < best_key {
                best_key = key;
                best = v;
                if key.0 == 0 {
                    return false;
                }
            }
        }
        let v = best;
        let mut options = self.choices(v);
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            let bit = 1u64 << c;
            let prev_used = self.used;
            self.color[v] = c;
            self.uncolored -= 1;
            self.used = self.used.max(c + 1);
            let mut trail = Vec::new();
            let mut wiped = false;
            for w in self.g.neighbors(v).iter() {
                if self.color[w] == usize::MAX && self.available[w] & bit != 0 {
                    self.available[w] &= !bit;
                    trail.push(w);
                    if self.available[w] == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped && self.solve() {
                return true;
            }
            if self.nodes > self.budget {
                return false;
            }
            for w in trail {
                self.available[w] |= bit;
            }
            self.used = prev_used;
            self.uncolored += 1;
            self.color[v] = usize::MAX;
        }
        false
    }
}

/// A clique found greedily from every seed vertex; its size bounds the chromatic number below.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut best: Vec<usize> = Vec::new();
    for seed in 0..n {
        let mut clique = vec![seed];
        let mut cand = g.neighbors(seed).clone();
        cand.remove(seed);
        while let Some(next) = cand
            .iter()
            .max_by_key(|&w| (g.neighbors(w).intersection_count(&cand), usize::MAX - w))
        {
            clique.push(next);
            cand.intersect_with(g.neighbors(next));
            cand.remove(next);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}
