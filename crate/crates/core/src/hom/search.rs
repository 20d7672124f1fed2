use super::VertexMap;
use crate::bitset::BitSet;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Decide,
    First,
    Count { limit: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomOutcome {
    None,
    /// Present for `Decide` and `First`.
    Witness(VertexMap),
    /// `saturated` means the count reached `limit` and the true value is at least that.
    Count {
        count: u64,
        saturated: bool,
    },
}

impl HomOutcome {
    pub fn exists(&self) -> bool {
        match self {
            HomOutcome::None => false,
            HomOutcome::Witness(_) => true,
            HomOutcome::Count { count, .. } => *count > 0,
        }
    }

    pub fn witness(self) -> Option<VertexMap> {
        match self {
            HomOutcome::Witness(w) => Some(w),
            _ => None,
        }
    }
}

/// Backtracking homomorphism search with forward checking.
///
/// Branching picks the unassigned source vertex with the fewest remaining candidates,
/// breaking ties by descending degree and then label; candidates are tried in target
/// label order. Components of the source are solved independently.
pub struct HomSearch<'a> {
    source: &'a Graph,
    target: &'a Graph,
    transitive: bool,
    roots: Option<BitSet>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl<'a> HomSearch<'a> {
    pub fn new(source: &'a Graph, target: &'a Graph) -> Self {
        HomSearch {
            source,
            target,
            transitive: false,
            roots: None,
            nodes: 0,
            budget: u64::MAX,
            aborted: false,
        }
    }

    /// Stop after `nodes` search nodes; the outcome is then meaningless and [`aborted`]
    /// reports true.
    ///
    /// [`aborted`]: HomSearch::aborted
    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    pub fn aborted(&self) -> bool {
        self.aborted
    }

    /// Declare the target vertex-transitive: in `Decide`/`First` mode the first vertex of each
    /// source component is then fixed to target vertex 0. Ignored when counting.
    pub fn vertex_transitive(mut self, yes: bool) -> Self {
        self.transitive = yes;
        self
    }

    /// Restrict the first vertex of each source component to `reps`, which must meet every
    /// orbit of the target's automorphism group. Ignored when counting.
    pub fn root_candidates(mut self, reps: BitSet) -> Self {
        self.roots = Some(reps);
        self
    }

    /// Search nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn run(&mut self, mode: Mode) -> HomOutcome {
        let g = self.source;
        let h = self.target;
        let n = g.order();
        let count_limit = match mode {
            Mode::Count { limit } => Some(limit),
            _ => None,
        };
        if n == 0 {
            return match count_limit {
                Some(limit) => HomOutcome::Count {
                    count: 1.min(limit),
                    saturated: limit <= 1,
                },
                None => HomOutcome::Witness(VertexMap::default()),
            };
        }

        let target_order: Vec<usize> = {
            let mut t: Vec<usize> = (0..h.order()).collect();
            t.sort_by(|&a, &b| h.label_cmp(a, b));
            t
        };
        let mut priority: Vec<usize> = (0..n).collect();
        priority.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(g.label_cmp(a, b)));
        let mut rank = vec![0; n];
        for (r, &v) in priority.iter().enumerate() {
            rank[v] = r;
        }
        let loop_targets =
            BitSet::from_indices(h.order(), (0..h.order()).filter(|&x| h.has_loop(x)));

        let mut assignment = vec![usize::MAX; n];
        let mut total: u64 = 1;
        let mut saturated = false;
        for comp in g.components() {
            let mut domains: Vec<BitSet> = vec![BitSet::full(h.order()); n];
            for &v in &comp {
                if g.has_loop(v) {
                    domains[v].intersect_with(&loop_targets);
                }
            }
            let roots = match (&self.roots, self.transitive && h.order() > 0) {
                (_, true) => Some(BitSet::from_indices(h.order(), [0])),
                (Some(r), false) => Some(r.clone()),
                (None, false) => None,
            };
            if let (Some(r), None) = (roots, count_limit) {
                let first = *comp.iter().min_by_key(|&&v| rank[v]).unwrap();
                domains[first].intersect_with(&r);
            }
            let mut state = State {
                g,
                h,
                rank: &rank,
                target_order: &target_order,
                sorted_targets: target_order.iter().enumerate().all(|(i, &x)| i == x),
                unassigned: comp.clone(),
                domains,
                assignment: &mut assignment,
                nodes: 0,
                budget: self.budget.saturating_sub(self.nodes),
                aborted: false,
                count: 0,
                limit: count_limit.unwrap_or(1),
            };
            let found = state.solve();
            self.nodes += state.nodes;
            if state.aborted {
                self.aborted = true;
                return HomOutcome::None;
            }
            match count_limit {
                None if !found => return HomOutcome::None,
                None => {}
                Some(limit) => {
                    if state.count == 0 {
                        return HomOutcome::Count {
                            count: 0,
                            saturated: false,
                        };
                    }
                    saturated |= state.count >= limit;
                    total = total.saturating_mul(state.count);
                    if total >= limit {
                        total = limit;
                        saturated = true;
                    }
                }
            }
        }
        match count_limit {
            Some(_) => HomOutcome::Count {
                count: total,
                saturated,
            },
            None => HomOutcome::Witness(VertexMap::new(assignment)),
        }
    }
}

struct State<'s> {
    g: &'s Graph,
    h: &'s Graph,
    rank: &'s [usize],
    target_order: &'s [usize],
    sorted_targets: bool,
    unassigned: Vec<usize>,
    domains: Vec<BitSet>,
    assignment: &'s mut [usize],
    nodes: u64,
    budget: u64,
    aborted: bool,
    count: u64,
    limit: u64,
}

impl State<'_> {
    /// Returns true to stop (witness found, or count limit reached).
    fn solve(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return true;
        }
        if self.unassigned.is_empty() {
            self.count += 1;
            return self.count >= self.limit;
        }
        let (pos, v) = self
            .unassigned
            .iter()
            .copied()
            .enumerate()
            .min_by_key(|&(_, v)| (self.domains[v].count(), self.rank[v]))
            .unwrap();
        self.unassigned.swap_remove(pos);

        let candidates: Vec<usize> = if self.sorted_targets {
            self.domains[v].iter().collect()
        } else {
            self.target_order
                .iter()
                .copied()
                .filter(|&x| self.domains[v].contains(x))
                .collect()
        };
        let mut stop = false;
        for x in candidates {
            self.assignment[v] = x;
            let mut trail: Vec<(usize, BitSet)> = Vec::new();
            let mut wiped = false;
            for w in self.g.neighbors(v).iter() {
                if w == v || self.assignment[w] != usize::MAX {
                    continue;
                }
                let row = self.h.neighbors(x);
                if self.domains[w].is_subset(row) {
                    continue;
                }
                trail.push((w, self.domains[w].clone()));
                self.domains[w].intersect_with(row);
                if self.domains[w].is_empty() {
                    wiped = true;
                    break;
                }
            }
            if !wiped && self.solve() {
                stop = true;
            }
            for (w, old) in trail.into_iter().rev() {
                self.domains[w] = old;
            }
            if stop {
                break;
            }
            self.assignment[v] = usize::MAX;
        }
        if !stop {
            self.unassigned.push(v);
            let last = self.unassigned.len() - 1;
            self.unassigned.swap(pos, last);
        }
        stop
    }
}

pub fn find_homomorphism(g: &Graph, h: &Graph, mode: Mode) -> HomOutcome {
    HomSearch::new(g, h).run(mode)
}

pub fn hom_equivalent(g: &Graph, h: &Graph) -> bool {
    find_homomorphism(g, h, Mode::Decide).exists() && find_homomorphism(h, g, Mode::Decide).exists()
}
