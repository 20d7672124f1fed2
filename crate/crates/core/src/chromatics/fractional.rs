use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lp::{big, maximize};
use super::{require_cap, require_loop_free, Certificate, ChromaticResult, Rational, Refutation};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// All maximal independent sets (as sorted vertex lists), in lexicographic order.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > 64 {
        return Err(Error::cap("independent set enumeration", n, 64));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // complement adjacency, where maximal independent sets are maximal cliques
    let non_adj: Vec<u64> = (0..n)
        .map(|v| {
            let row = g.neighbors(v).iter().fold(0u64, |acc, w| acc | 1 << w);
            !row & full & !(1u64 << v)
        })
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_adj, 0, full, 0, &mut out);
    let mut sets: Vec<Vec<usize>> = out
        .into_iter()
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = {
        let px = p | x;
        (0..adj.len())
            .filter(|&u| px >> u & 1 == 1)
            .max_by_key(|&u| (adj[u] & p).count_ones())
            .unwrap()
    };
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

fn to_small(q: &BigRational) -> Result<Rational> {
    match (q.numer().to_i64(), q.denom().to_i64()) {
        (Some(n), Some(d)) => Ok(Rational::new(n, d)),
        _ => Err(Error::Invariant(format!(
            "rational {q} does not fit in 64 bits"
        ))),
    }
}

/// Fractional chromatic number as the optimum of the covering LP over maximal independent sets.
///
/// The LP is solved in its packing (dual) form; the optimal multipliers give the weighted
/// independent sets returned as the certificate, and the optimal vertex weights are recorded
/// as the matching lower-bound witness.
pub fn fractional_chromatic(g: &Graph, caps: &Caps) -> Result<ChromaticResult> {
    require_loop_free(g, "fractional chromatic number")?;
    require_cap(g, "fractional instance", caps.fractional)?;
    let n = g.order();
    if n == 0 {
        return Ok(ChromaticResult::exact(
            Rational::from_integer(0),
            Certificate::Weights(vec![]),
            vec![],
        ));
    }
    let sets = maximal_independent_sets(g)?;
    let c = vec![big(1); n];
    let rows: Vec<Vec<BigRational>> = sets
        .iter()
        .map(|s| {
            let mut row = vec![BigRational::zero(); n];
            for &v in s {
                row[v] = BigRational::one();
            }
            row
        })
        .collect();
    let b = vec![big(1); sets.len()];
    let sol = maximize(&c, &rows, &b)?;

    // both certificates are re-checked against the graph
    for (v, cover) in (0..n).map(|v| {
        let total: BigRational = sets
            .iter()
            .zip(&sol.dual)
            .filter(|(s, _)| s.contains(&v))
            .map(|(_, w)| w.clone())
            .sum();
        (v, total)
    }) {
        if cover < BigRational::one() {
            return Err(Error::Invariant(format!("vertex {v} covered only {cover}")));
        }
    }
    let weight_sum: BigRational = sol.dual.iter().cloned().sum();
    if weight_sum != sol.value || sol.dual.iter().any(|w| w.is_negative()) {
        return Err(Error::Invariant(
            "fractional colouring weights disagree with optimum".into(),
        ));
    }
    for s in &sets {
        let load: BigRational = s.iter().map(|&v| sol.primal[v].clone()).sum();
        if load > BigRational::one() {
            return Err(Error::Invariant(
                "vertex weights overload an independent set".into(),
            ));
        }
    }

    let weights = sets
        .into_iter()
        .zip(&sol.dual)
        .filter(|(_, w)| w.is_positive())
        .map(|(s, w)| Ok((s, to_small(w)?)))
        .collect::<Result<Vec<_>>>()?;
    let clique_weights: Vec<String> = sol.primal.iter().map(|w| w.to_string()).collect();
    let value = to_small(&sol.value)?;
    Ok(ChromaticResult::exact(
        value,
        Certificate::Weights(weights),
        vec![Refutation {
            claim: format!(
                "vertex weights [{}] pack every independent set",
                clique_weights.join(",")
            ),
            method: "simplex",
            nodes: sol.pivots as u64,
        }],
    ))
}
