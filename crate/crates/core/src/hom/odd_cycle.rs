use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{
    check_homomorphism, find_homomorphism, power_lift_check, HelicalTransfer, Mode, VertexMap,
};
use crate::error::{Error, Result};
use crate::families::{cycle, HelicalKind};
use crate::graph::{cycle_stats, power, subdivide, Graph};

/// Moves certificates between `G -> C_{2k+1}` and proper 3-colourings of `S_2(G)^(2k+1)`,
/// going through `H(3,1,k+1)`, which is the cycle `C_{6k+3}`.
pub struct OddCycleTransfer {
    k: usize,
    target: Graph,
    transfer: HelicalTransfer,
    /// Position `i` on `C_{6k+3}` to the helical vertex at that position.
    cycle_to_helical: Vec<usize>,
    /// A homomorphism `H(3,1,k+1)^(3) -> C_{2k+1}`, found by search.
    collapse: VertexMap,
}

impl OddCycleTransfer {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::param("odd cycle transfer needs k >= 1"));
        }
        let transfer = HelicalTransfer::new(HelicalKind::Full, 3, 1, k + 1)?;
        let helical = transfer.helical();
        let len = 6 * k + 3;
        if helical.order() != len || (0..len).any(|v| helical.degree(v) != 2) {
            return Err(Error::Invariant(format!(
                "H(3,1,{}) is not 2-regular on {len} vertices",
                k + 1
            )));
        }
        let mut walk = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0;
        loop {
            let next = helical.neighbors(cur).iter().find(|&w| w != prev).unwrap();
            if next == 0 {
                break;
            }
            walk.push(next);
            prev = cur;
            cur = next;
        }
        if walk.len() != len {
            return Err(Error::Invariant(format!(
                "H(3,1,{}) is not a single {len}-cycle",
                k + 1
            )));
        }
        let target = cycle(2 * k + 1)?;
        let collapse = find_homomorphism(&power(helical, 3)?, &target, Mode::First)
            .witness()
            .ok_or_else(|| {
                Error::Invariant(format!("no homomorphism C_{len}^(3) -> C_{}", 2 * k + 1))
            })?;
        Ok(OddCycleTransfer {
            k,
            target,
            transfer,
            cycle_to_helical: walk,
            collapse,
        })
    }

    /// Cached instance per `k`.
    pub fn shared(k: usize) -> Result<Arc<OddCycleTransfer>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<OddCycleTransfer>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&k) {
            return Ok(Arc::clone(t));
        }
        let t = Arc::new(OddCycleTransfer::new(k)?);
        cache
            .lock()
            .unwrap()
            .entry(k)
            .or_insert_with(|| Arc::clone(&t));
        Ok(t)
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn collapse(&self) -> &VertexMap {
        &self.collapse
    }

    fn require_odd_girth(&self, g: &Graph) -> Result<()> {
        let stats = cycle_stats(g);
        if stats.odd_girth_at_least(2 * self.k + 1) {
            Ok(())
        } else {
            Err(Error::OddGirth {
                found: stats.odd_girth.map_or("inf".into(), |x| x.to_string()),
                required: 2 * self.k + 1,
            })
        }
    }

    /// Proper 3-colouring of `S_2(g)^(2k+1)` from a homomorphism `g -> C_{2k+1}`.
    pub fn forward(&self, g: &Graph, h: &VertexMap) -> Result<VertexMap> {
        check_homomorphism(g, &self.target, h)?;
        self.require_odd_girth(g)?;
        let s = subdivide(g, 2)?;
        let odd = 2 * self.k + 1;
        let len = 3 * odd;
        let mut position = vec![0usize; s.order()];
        for v in 0..g.order() {
            position[v] = 3 * h[v];
        }
        // inner vertices come edge by edge: (u,v) gives x adjacent to u, then y adjacent to v
        for (e, (u, v)) in g.edges().into_iter().enumerate() {
            let step = if (h[u] + 1) % odd == h[v] { 1 } else { len - 1 };
            let x = g.order() + 2 * e;
            position[x] = (position[u] + step) % len;
            position[x + 1] = (position[u] + 2 * step) % len;
        }
        let lifted: VertexMap = position.iter().map(|&p| self.cycle_to_helical[p]).collect();
        check_homomorphism(&s, self.transfer.helical(), &lifted)
            .map_err(|e| Error::Invariant(format!("lift to S_2(G) failed: {e}")))?;
        self.transfer.decode(&s, &lifted)
    }

    /// Homomorphism `g -> C_{2k+1}` from a proper 3-colouring of `S_2(g)^(2k+1)`.
    pub fn backward(&self, g: &Graph, col: &VertexMap) -> Result<VertexMap> {
        self.require_odd_girth(g)?;
        let s = subdivide(g, 2)?;
        let f = self.transfer.encode(&s, col)?;
        if !power_lift_check(&s, self.transfer.helical(), &f, 3)? {
            return Err(Error::Invariant(
                "power lift of S_2(G) -> C_{6k+3} failed".into(),
            ));
        }
        let out: VertexMap = (0..g.order()).map(|v| self.collapse[f[v]]).collect();
        check_homomorphism(g, &self.target, &out)
            .map_err(|e| Error::Invariant(format!("restricted map is not a homomorphism: {e}")))?;
        Ok(out)
    }
}

pub fn odd_cycle_transfer_forward(g: &Graph, k: usize, h: &VertexMap) -> Result<VertexMap> {
    OddCycleTransfer::shared(k)?.forward(g, h)
}

pub fn odd_cycle_transfer_backward(g: &Graph, k: usize, col: &VertexMap) -> Result<VertexMap> {
    OddCycleTransfer::shared(k)?.backward(g, col)
}
