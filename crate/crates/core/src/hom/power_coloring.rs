use std::collections::HashMap;

use super::{check_homomorphism, VertexMap};
use crate::error::{Error, Result};
use crate::families::{schrijver, sets::stable_subset_count};
use crate::graph::{power, Graph, Subset, MAX_GROUND};

/// Default bound on the number of vertices of the source Schrijver graph.
pub const DEFAULT_POWER_COLORING_CAP: usize = 10_000;

/// The block colouring of `SG(a,b)` into `SG(m,n)` with `a = 2(k-1)m(m-2n+2) + m`,
/// `b = (k-1)m(m-2n+2) + n`.
#[derive(Clone, Debug)]
pub struct PowerColoring {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    /// `D_i` as consecutive blocks of `{1..a}`.
    pub blocks: Vec<Subset>,
    /// `E_i`: the 1st, 3rd, 5th, ... smallest elements of `D_i`.
    pub cores: Vec<Subset>,
    pub source: Graph,
    pub target: Graph,
    pub coloring: VertexMap,
}

impl PowerColoring {
    /// Re-checks that the colouring is a homomorphism from every odd power `2r - 1`, `r <= k`.
    pub fn validate(&self) -> Result<()> {
        for r in 1..=self.k {
            let p = power(&self.source, 2 * r - 1)?;
            check_homomorphism(&p, &self.target, &self.coloring)?;
        }
        Ok(())
    }
}

pub fn schrijver_power_coloring(m: usize, n: usize, k: usize, cap: usize) -> Result<PowerColoring> {
    if n == 0 || m < 2 * n || k == 0 {
        return Err(Error::param(format!(
            "need m >= 2n >= 2 and k >= 1, got m={m} n={n} k={k}"
        )));
    }
    let spread = (k - 1) * m * (m - 2 * n + 2);
    let a = 2 * spread + m;
    let b = spread + n;
    if a > MAX_GROUND {
        return Err(Error::cap("ground set of SG(a,b)", a, MAX_GROUND));
    }
    let size = stable_subset_count(a, b);
    if size > cap as u128 {
        return Err(Error::cap(
            "SG(a,b)",
            size.min(usize::MAX as u128) as usize,
            cap,
        ));
    }

    let block_len = 2 * (k - 1) * (m - 2 * n + 2) + 1;
    let blocks: Vec<Subset> = (0..m)
        .map(|i| (i * block_len + 1..=(i + 1) * block_len).collect())
        .collect();
    let cores: Vec<Subset> = (0..m)
        .map(|i| {
            (i * block_len + 1..=(i + 1) * block_len)
                .step_by(2)
                .collect()
        })
        .collect();

    let source = schrijver(a, b)?;
    let target = schrijver(m, n)?;
    let target_index: HashMap<Subset, usize> = target
        .labels()
        .unwrap()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.tuple().unwrap()[0], i))
        .collect();

    let mut images = Vec::with_capacity(source.order());
    for (v, label) in source.labels().unwrap().iter().enumerate() {
        let u = label.tuple().unwrap()[0];
        let chosen: Subset = (0..m)
            .filter(|&i| cores[i].is_subset(u))
            .take(n)
            .map(|i| i + 1)
            .collect();
        if chosen.len() < n {
            return Err(Error::Invariant(format!(
                "vertex {v} = {u} contains only {} full cores, need {n}",
                chosen.len()
            )));
        }
        let idx = target_index.get(&chosen).ok_or_else(|| {
            Error::Invariant(format!(
                "colour {chosen} of vertex {u} is not 2-stable in [{m}]"
            ))
        })?;
        images.push(*idx);
    }

    let pc = PowerColoring {
        m,
        n,
        k,
        a,
        b,
        blocks,
        cores,
        source,
        target,
        coloring: VertexMap::new(images),
    };
    pc.validate()
        .map_err(|e| Error::Invariant(format!("block colouring invalid: {e}")))?;
    Ok(pc)
}
