//! Homomorphism checking, search, and the constructive transfers between
//! graph powers and helical graphs.

mod odd_cycle;
mod power_coloring;
mod sat;
mod search;
mod transfer;

use std::ops::Index;

pub use odd_cycle::{odd_cycle_transfer_backward, odd_cycle_transfer_forward, OddCycleTransfer};
pub use power_coloring::{schrijver_power_coloring, PowerColoring, DEFAULT_POWER_COLORING_CAP};
pub use sat::{
    decide_circular, decide_homomorphism, sat_circular, sat_homomorphism, Decision, SEARCH_BUDGET,
};
pub use search::{find_homomorphism, hom_equivalent, HomOutcome, HomSearch, Mode};
pub use transfer::{decode_homb, encode_homb, HelicalTransfer};

use crate::error::{Error, Result};
use crate::graph::{power, Graph};

/// A total map `V(G) -> V(H)` given by the image of each source vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VertexMap(Vec<usize>);

impl VertexMap {
    pub fn new(images: Vec<usize>) -> Self {
        VertexMap(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &VertexMap) -> VertexMap {
        VertexMap(self.0.iter().map(|&x| other[x]).collect())
    }
}

impl Index<usize> for VertexMap {
    type Output = usize;

    fn index(&self, v: usize) -> &usize {
        &self.0[v]
    }
}

impl FromIterator<usize> for VertexMap {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexMap(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexMap {
    fn from(v: Vec<usize>) -> Self {
        VertexMap(v)
    }
}

/// Like [`is_homomorphism`] but names the first violated edge.
pub fn check_homomorphism(g: &Graph, h: &Graph, f: &VertexMap) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::NotHomomorphism(format!(
            "map has {} images for {} source vertices",
            f.len(),
            g.order()
        )));
    }
    if let Some(v) = (0..f.len()).find(|&v| f[v] >= h.order()) {
        return Err(Error::NotHomomorphism(format!(
            "image {} of vertex {v} outside target of order {}",
            f[v],
            h.order()
        )));
    }
    for u in 0..g.order() {
        for v in g.neighbors(u).iter().filter(|&v| v >= u) {
            if !h.has_edge(f[u], f[v]) {
                return Err(Error::NotHomomorphism(format!(
                    "edge {u}-{v} maps to non-edge {}-{}",
                    f[u], f[v]
                )));
            }
        }
    }
    Ok(())
}

/// Every edge (loops included) of `g` lands on an edge of `h`.
pub fn is_homomorphism(g: &Graph, h: &Graph, f: &VertexMap) -> bool {
    check_homomorphism(g, h, f).is_ok()
}

/// Whether the map of a homomorphism `g -> h` is still a homomorphism `g^(k) -> h^(k)`.
///
/// This always holds for a genuine homomorphism; `false` means something upstream is broken.
pub fn power_lift_check(g: &Graph, h: &Graph, f: &VertexMap, k: usize) -> Result<bool> {
    check_homomorphism(g, h, f)?;
    Ok(is_homomorphism(&power(g, k)?, &power(h, k)?, f))
}
