//! Homomorphism existence as propositional satisfiability, for instances too large for
//! plain backtracking.

use varisat::{ExtendFormula, Lit, Solver};

use super::search::{HomSearch, Mode};
use super::{is_homomorphism, VertexMap};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::families::circular_complete;
use crate::graph::{orbit_representatives, Graph};

/// Backtracking node budget before [`decide_homomorphism`] switches to the SAT encoding.
pub const SEARCH_BUDGET: u64 = 200_000;

/// Decides `g -> h` by CDCL. One variable per (source, target) pair and a covering clause per
/// source vertex; each source edge is then encoded by conflict clauses over target non-edges
/// when the target is dense, or by support clauses `f(u)=x => f(v) in N(x)` with an
/// at-most-one ladder per source vertex when it is sparse. `pins` fix source vertices to
/// target vertices.
///
/// The conflict form allows several selected targets for one vertex; the lowest is taken, and
/// the resulting map is re-checked.
pub fn sat_homomorphism(
    g: &Graph,
    h: &Graph,
    pins: &[(usize, usize)],
) -> Result<Option<VertexMap>> {
    let allowed: Vec<(usize, Vec<usize>)> = pins.iter().map(|&(v, x)| (v, vec![x])).collect();
    sat_restricted(g, h, &allowed)
}

/// [`sat_homomorphism`] with each listed source vertex confined to its listed targets.
fn sat_restricted(
    g: &Graph,
    h: &Graph,
    allowed: &[(usize, Vec<usize>)],
) -> Result<Option<VertexMap>> {
    let (n, t) = (g.order(), h.order());
    if n == 0 {
        return Ok(Some(VertexMap::default()));
    }
    if t == 0 {
        return Ok(None);
    }
    let var = |v: usize, x: usize| Lit::from_index(v * t + x, true);
    let mut solver = Solver::new();
    for v in 0..n {
        let clause: Vec<Lit> = (0..t).map(|x| var(v, x)).collect();
        solver.add_clause(&clause);
    }
    for v in (0..n).filter(|&v| g.has_loop(v)) {
        for x in (0..t).filter(|&x| !h.has_loop(x)) {
            solver.add_clause(&[!var(v, x)]);
        }
    }
    let arcs: usize = (0..t).map(|x| h.degree(x)).sum();
    let sparse = t + arcs < t * t - arcs;
    let edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&(u, v)| u != v).collect();
    if sparse {
        let mut next = n * t;
        for v in 0..n {
            // s_i: some target <= i is selected
            let prefix: Vec<Lit> = (0..t - 1)
                .map(|i| Lit::from_index(next + i, true))
                .collect();
            next += t - 1;
            for x in 0..t {
                if x + 1 < t {
                    solver.add_clause(&[!var(v, x), prefix[x]]);
                }
                if x > 0 {
                    solver.add_clause(&[!var(v, x), !prefix[x - 1]]);
                    if x + 1 < t {
                        solver.add_clause(&[!prefix[x - 1], prefix[x]]);
                    }
                }
            }
        }
        for &(a, b) in &edges {
            for (u, v) in [(a, b), (b, a)] {
                for x in 0..t {
                    let mut clause = vec![!var(u, x)];
                    clause.extend(h.neighbors(x).iter().map(|y| var(v, y)));
                    solver.add_clause(&clause);
                }
            }
        }
    } else {
        let non_edges: Vec<(usize, usize)> = (0..t)
            .flat_map(|x| (0..t).map(move |y| (x, y)))
            .filter(|&(x, y)| !h.has_edge(x, y))
            .collect();
        for &(u, v) in &edges {
            for &(x, y) in &non_edges {
                solver.add_clause(&[!var(u, x), !var(v, y)]);
            }
        }
    }
    for (v, xs) in allowed {
        let clause: Vec<Lit> = xs.iter().map(|&x| var(*v, x)).collect();
        solver.add_clause(&clause);
    }
    let sat = solver
        .solve()
        .map_err(|e| Error::Invariant(format!("sat solver failed: {e}")))?;
    if !sat {
        return Ok(None);
    }
    let model = solver
        .model()
        .ok_or_else(|| Error::Invariant("satisfiable instance without a model".into()))?;
    let mut image = vec![usize::MAX; n];
    for lit in model.into_iter().filter(|l| l.is_positive()) {
        let (v, x) = (lit.index() / t, lit.index() % t);
        if v < n && image[v] == usize::MAX {
            image[v] = x;
        }
    }
    let f = VertexMap::new(image);
    if !is_homomorphism(g, h, &f) {
        return Err(Error::Invariant("sat model is not a homomorphism".into()));
    }
    Ok(Some(f))
}

/// Decides `g -> K_(p,q)` with the order encoding: variable `(v, i)` states `f(v) >= i`.
/// Each edge forbids, for every colour `a` of one end, the arc of `2q-1` colours centred at
/// `a` for the other end, which the order encoding expresses with short clauses.
///
/// With `pin`, that vertex gets colour 0 (rotation) and its first neighbour a colour at most
/// `p/2` (reflection); both are symmetries of the target.
pub fn sat_circular(
    g: &Graph,
    p: usize,
    q: usize,
    pin: Option<usize>,
) -> Result<Option<VertexMap>> {
    if q == 0 || p < 2 * q {
        return Err(Error::param(format!(
            "K_({p},{q}) needs q >= 1 and p >= 2q"
        )));
    }
    let n = g.order();
    if n == 0 {
        return Ok(Some(VertexMap::default()));
    }
    if g.has_loops() {
        return Ok(None);
    }
    let (pi, qi) = (p as isize, q as isize);
    let top = Lit::from_index(n * p, true);
    // f(v) >= i
    let at_least = |v: usize, i: isize| -> Lit {
        if i <= 0 {
            top
        } else if i >= pi {
            !top
        } else {
            Lit::from_index(v * p + i as usize, true)
        }
    };
    let mut solver = Solver::new();
    solver.add_clause(&[top]);
    let add = |solver: &mut Solver, clause: &[Lit]| {
        if clause.contains(&top) {
            return;
        }
        let kept: Vec<Lit> = clause.iter().copied().filter(|&l| l != !top).collect();
        solver.add_clause(&kept);
    };
    for v in 0..n {
        for i in 2..pi {
            add(&mut solver, &[!at_least(v, i), at_least(v, i - 1)]);
        }
    }
    for (a0, b0) in g.edges() {
        for (u, v) in [(a0, b0), (b0, a0)] {
            for a in 0..pi {
                let (not_a0, not_a1) = (!at_least(u, a), at_least(u, a + 1));
                let (lo, hi) = (a - qi + 1, a + qi - 1);
                if lo >= 0 && hi < pi {
                    add(
                        &mut solver,
                        &[not_a0, not_a1, !at_least(v, lo), at_least(v, hi + 1)],
                    );
                } else if lo < 0 {
                    add(&mut solver, &[not_a0, not_a1, at_least(v, hi + 1)]);
                    add(&mut solver, &[not_a0, not_a1, !at_least(v, pi + lo)]);
                } else {
                    add(&mut solver, &[not_a0, not_a1, !at_least(v, lo)]);
                    add(&mut solver, &[not_a0, not_a1, at_least(v, hi - pi + 1)]);
                }
            }
        }
    }
    if let Some(v) = pin {
        add(&mut solver, &[!at_least(v, 1)]);
        if let Some(w) = g.neighbors(v).first() {
            add(&mut solver, &[!at_least(w, pi / 2 + 1)]);
        }
    }
    let sat = solver
        .solve()
        .map_err(|e| Error::Invariant(format!("sat solver failed: {e}")))?;
    if !sat {
        return Ok(None);
    }
    let model = solver
        .model()
        .ok_or_else(|| Error::Invariant("satisfiable instance without a model".into()))?;
    let mut colour = vec![0usize; n];
    for lit in model.into_iter().filter(|l| l.is_positive()) {
        let (v, i) = (lit.index() / p, lit.index() % p);
        if v < n && i > 0 {
            colour[v] = colour[v].max(i);
        }
    }
    let f = VertexMap::new(colour);
    if !is_homomorphism(g, &circular_complete(p, q)?, &f) {
        return Err(Error::Invariant(
            "sat model is not a circular colouring".into(),
        ));
    }
    Ok(Some(f))
}

/// How a homomorphism question was settled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub witness: Option<VertexMap>,
    /// `"search"` or `"sat"`.
    pub method: &'static str,
    /// Backtracking nodes spent, including an abandoned attempt before falling back.
    pub nodes: u64,
}

/// Backtracking with [`SEARCH_BUDGET`], then the SAT encoding if the budget runs out.
/// One vertex per source component is confined to orbit representatives of the target: vertex
/// 0 alone with `transitive`, otherwise those of [`orbit_representatives`].
pub fn decide_homomorphism(g: &Graph, h: &Graph, transitive: bool) -> Result<Decision> {
    let roots = if transitive && h.order() > 0 {
        BitSet::from_indices(h.order(), [0])
    } else {
        orbit_representatives(h)
    };
    let mut search = HomSearch::new(g, h)
        .root_candidates(roots.clone())
        .budget(SEARCH_BUDGET);
    let outcome = search.run(Mode::First);
    if !search.aborted() {
        return Ok(Decision {
            witness: outcome.witness(),
            method: "search",
            nodes: search.nodes(),
        });
    }
    let reps: Vec<usize> = roots.iter().collect();
    let allowed: Vec<(usize, Vec<usize>)> = g
        .components()
        .iter()
        .map(|c| (pin_vertex(g, c), reps.clone()))
        .collect();
    Ok(Decision {
        witness: sat_restricted(g, h, &allowed)?,
        method: "sat",
        nodes: search.nodes(),
    })
}

/// [`decide_homomorphism`] for the target `K_(p,q)`, falling back to [`sat_circular`].
pub fn decide_circular(g: &Graph, p: usize, q: usize) -> Result<Decision> {
    let target = circular_complete(p, q)?;
    let mut search = HomSearch::new(g, &target)
        .vertex_transitive(true)
        .budget(SEARCH_BUDGET);
    let outcome = search.run(Mode::First);
    if !search.aborted() {
        return Ok(Decision {
            witness: outcome.witness(),
            method: "search",
            nodes: search.nodes(),
        });
    }
    let all: Vec<usize> = (0..g.order()).collect();
    let pin = (!all.is_empty()).then(|| pin_vertex(g, &all));
    Ok(Decision {
        witness: sat_circular(g, p, q, pin)?,
        method: "sat",
        nodes: search.nodes(),
    })
}

/// The vertex of largest degree in `component`, lowest index first; fixing it first
/// constrains the most neighbours.
pub(crate) fn pin_vertex(g: &Graph, component: &[usize]) -> usize {
    *component
        .iter()
        .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{circular_complete, complete, cycle, petersen};
    use num_rational::Rational64;

    #[test]
    fn agrees_with_search() {
        let cases = [
            (cycle(7).unwrap(), cycle(5).unwrap()),
            (cycle(5).unwrap(), cycle(7).unwrap()),
            (petersen(), complete(3).unwrap()),
            (petersen(), cycle(5).unwrap()),
            (cycle(9).unwrap(), circular_complete(9, 4).unwrap()),
            (cycle(9).unwrap(), circular_complete(7, 3).unwrap()),
            (complete(4).unwrap(), complete(3).unwrap()),
        ];
        for (g, h) in &cases {
            let expected = HomSearch::new(g, h).run(Mode::Decide).exists();
            assert_eq!(sat_homomorphism(g, h, &[]).unwrap().is_some(), expected);
        }
    }

    #[test]
    fn circular_encoding() {
        let c7 = cycle(7).unwrap();
        for (p, q) in [(7, 3), (5, 2), (9, 4), (12, 5), (2, 1), (3, 1)] {
            let expected = Rational64::new(p as i64, q as i64) >= Rational64::new(7, 3);
            for pin in [None, Some(0)] {
                assert_eq!(
                    sat_circular(&c7, p, q, pin).unwrap().is_some(),
                    expected,
                    "{p}/{q}"
                );
            }
        }
        let g = petersen();
        assert!(sat_circular(&g, 3, 1, Some(0)).unwrap().is_some());
        assert!(sat_circular(&g, 8, 3, Some(0)).unwrap().is_none());
        assert!(sat_circular(&g, 3, 2, None).is_err());
    }

    #[test]
    fn loops_and_pins() {
        let mut g = Graph::new(2);
        g.add_edge(0, 1);
        g.add_edge(1, 1);
        let mut h = Graph::new(2);
        h.add_edge(0, 1);
        assert_eq!(sat_homomorphism(&g, &h, &[]).unwrap(), None);
        h.add_edge(0, 0);
        assert_eq!(
            sat_homomorphism(&g, &h, &[]).unwrap().unwrap().as_slice()[1],
            0
        );
        let k3 = complete(3).unwrap();
        let f = sat_homomorphism(&cycle(6).unwrap(), &k3, &[(0, 2)])
            .unwrap()
            .unwrap();
        assert_eq!(f.as_slice()[0], 2);
    }
}
