//! Exact `t`-colourability with escalating strategies.
//!
//! Saturation backtracking settles most instances. When its budget runs out the question is
//! handed to a SAT solver, or, for graphs with a large known automorphism group, split
//! along the largest colour class: `g` is `t`-colourable iff some maximal independent set
//! `I` with `|I| >= ceil(n/t)` leaves `g - I` `(t-1)`-colourable, and only one `I` per
//! orbit under the group needs checking.

use super::coloring::{color_within, greedy_clique, ColoringOutcome};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::families::complete;
use crate::graph::symmetry::ground_symmetry_group;
use crate::graph::Graph;
use crate::hom::{is_homomorphism, sat_homomorphism, VertexMap, SEARCH_BUDGET};

/// Minimum group order for which splitting on colour classes is preferred over SAT.
const PEEL_MIN_GROUP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringDecision {
    pub outcome: ColoringOutcome,
    /// `"search"`, `"sat"` or `"classes"`.
    pub method: &'static str,
    /// Backtracking nodes, or independent-set orbits examined for `"classes"`.
    pub nodes: u64,
}

/// Decides `t`-colourability of `g`. With `use_symmetry`, automorphisms induced by
/// permuting the ground set of tuple labels are used when the search budget runs out.
pub fn decide_coloring(g: &Graph, t: usize, use_symmetry: bool) -> Result<ColoringDecision> {
    if let Some(outcome) = color_within(g, t, SEARCH_BUDGET)? {
        let nodes = match outcome {
            ColoringOutcome::Refuted { nodes } => nodes,
            ColoringOutcome::Colorable(_) => 0,
        };
        return Ok(ColoringDecision {
            outcome,
            method: "search",
            nodes,
        });
    }
    if t >= 4 && use_symmetry {
        let group = ground_symmetry_group(g);
        if group.len() >= PEEL_MIN_GROUP {
            return by_classes(g, t, &group);
        }
    }
    let k = complete(t)?;
    // clique vertices get distinct colours, so they can be fixed up to palette symmetry
    let pins: Vec<(usize, usize)> = greedy_clique(g)
        .into_iter()
        .take(t)
        .enumerate()
        .map(|(c, v)| (v, c))
        .collect();
    let outcome = match sat_homomorphism(g, &k, &pins)? {
        Some(c) => ColoringOutcome::Colorable(c),
        None => ColoringOutcome::Refuted { nodes: 0 },
    };
    Ok(ColoringDecision {
        outcome,
        method: "sat",
        nodes: 0,
    })
}

fn by_classes(g: &Graph, t: usize, group: &[Vec<usize>]) -> Result<ColoringDecision> {
    let n = g.order();
    let need = n.div_ceil(t);
    let mut orbits = 0u64;
    let mut found: Option<VertexMap> = None;
    let mut failure: Option<Error> = None;
    let mut visit = |class: &[usize]| -> bool {
        if !is_orbit_minimum(class, group) {
            return false;
        }
        orbits += 1;
        let mut rest = BitSet::full(n);
        for &v in class {
            rest.remove(v);
        }
        let rest: Vec<usize> = rest.iter().collect();
        match decide_coloring(&g.induced(&rest), t - 1, false) {
            Ok(ColoringDecision {
                outcome: ColoringOutcome::Colorable(c),
                ..
            }) => {
                let mut colour = vec![t - 1; n];
                for (i, &v) in rest.iter().enumerate() {
                    colour[v] = c[i];
                }
                found = Some(VertexMap::new(colour));
                true
            }
            Ok(_) => false,
            Err(e) => {
                failure = Some(e);
                true
            }
        }
    };
    maximal_independent(
        g,
        &mut Vec::new(),
        BitSet::full(n),
        BitSet::new(n),
        need,
        &mut visit,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let outcome = match found {
        Some(c) => {
            if !is_homomorphism(g, &complete(t)?, &c) {
                return Err(Error::Invariant("assembled colouring is not proper".into()));
            }
            ColoringOutcome::Colorable(c)
        }
        None => ColoringOutcome::Refuted { nodes: orbits },
    };
    Ok(ColoringDecision {
        outcome,
        method: "classes",
        nodes: orbits,
    })
}

/// True when no group element maps the sorted set `class` to a lexicographically smaller one.
fn is_orbit_minimum(class: &[usize], group: &[Vec<usize>]) -> bool {
    let mut image = Vec::with_capacity(class.len());
    group.iter().all(|p| {
        image.clear();
        image.extend(class.iter().map(|&v| p[v]));
        image.sort_unstable();
        image.as_slice() >= class
    })
}

/// Bron-Kerbosch with pivoting on the complement, reporting maximal independent sets of at
/// least `need` vertices in sorted order. Stops when `visit` returns true.
fn maximal_independent(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    need: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if r.len() + p.count() < need {
        return false;
    }
    if p.is_empty() {
        if !x.is_empty() {
            return false;
        }
        let mut set = r.clone();
        set.sort_unstable();
        return visit(&set);
    }
    let mut px = p.clone();
    px.union_with(&x);
    let pivot = px
        .iter()
        .max_by_key(|&u| {
            p.count() - p.intersection_count(g.neighbors(u)) - usize::from(p.contains(u))
        })
        .unwrap();
    let mut branch = p.clone();
    let mut closed = g.neighbors(pivot).clone();
    closed.insert(pivot);
    branch.intersect_with(&closed);
    for v in branch.iter() {
        let mut np = p.clone();
        np.difference_with(g.neighbors(v));
        np.remove(v);
        let mut nx = x.clone();
        nx.difference_with(g.neighbors(v));
        nx.remove(v);
        r.push(v);
        if maximal_independent(g, r, np, nx, need, visit) {
            return true;
        }
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    false
}
