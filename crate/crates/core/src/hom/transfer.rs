use std::collections::HashMap;

use super::{check_homomorphism, VertexMap};
use crate::error::{Error, Result};
use crate::families::{
    helical_graph, is_helical_tuple, kneser, schrijver, tuple_index, HelicalKind,
};
use crate::graph::{cycle_stats, power, Graph, Subset};

/// Converts between homomorphisms `G^(2k-1) -> KG(m,n)` and `G -> H(m,n,k)`
/// (or, with [`HelicalKind::Schrijver`], between `SG(m,n)` and `SG(m,n,k)`).
///
/// Both target graphs are built once so the transfer can be reused across a corpus.
pub struct HelicalTransfer {
    kind: HelicalKind,
    k: usize,
    helical: Graph,
    base: Graph,
    helical_index: HashMap<Vec<Subset>, usize>,
    base_sets: Vec<Subset>,
    base_index: HashMap<Subset, usize>,
}

impl HelicalTransfer {
    pub fn new(kind: HelicalKind, m: usize, n: usize, k: usize) -> Result<Self> {
        let base = match kind {
            HelicalKind::Full => kneser(m, n)?,
            HelicalKind::Schrijver => schrijver(m, n)?,
            HelicalKind::Stable => {
                return Err(Error::param("transfers are defined for H and SGk targets"))
            }
        };
        let helical = helical_graph(kind, m, n, k)?;
        let base_sets: Vec<Subset> = base
            .labels()
            .expect("family graphs are labelled")
            .iter()
            .map(|l| l.tuple().expect("tuple label")[0])
            .collect();
        let base_index = base_sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(HelicalTransfer {
            kind,
            k,
            helical_index: tuple_index(&helical),
            helical,
            base,
            base_sets,
            base_index,
        })
    }

    pub fn kind(&self) -> HelicalKind {
        self.kind
    }

    /// The helical target `H(m,n,k)` or `SG(m,n,k)`.
    pub fn helical(&self) -> &Graph {
        &self.helical
    }

    /// The base target `KG(m,n)` or `SG(m,n)`.
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The power `2k - 1` linking the two sides.
    pub fn power_exponent(&self) -> usize {
        2 * self.k - 1
    }

    fn require_odd_girth(&self, g: &Graph) -> Result<()> {
        let stats = cycle_stats(g);
        let required = 2 * self.k + 1;
        if stats.odd_girth_at_least(required) {
            Ok(())
        } else {
            Err(Error::OddGirth {
                found: stats.odd_girth.map_or("inf".into(), |x| x.to_string()),
                required,
            })
        }
    }

    /// `f(v) = (c(v), c(N_1(v)), ..., c(N_{k-1}(v)))` where `c(S)` is the union of colour sets on `S`;
    /// isolated vertices go to the first helical vertex.
    pub fn encode(&self, g: &Graph, c: &VertexMap) -> Result<VertexMap> {
        self.require_odd_girth(g)?;
        check_homomorphism(&power(g, self.power_exponent())?, &self.base, c)?;
        let n = self.base_sets[0].len();
        let mut images = Vec::with_capacity(g.order());
        for v in 0..g.order() {
            if g.is_isolated(v) {
                images.push(0);
                continue;
            }
            let mut frontier = crate::bitset::BitSet::from_indices(g.order(), [v]);
            let mut tuple = Vec::with_capacity(self.k);
            for i in 0..self.k {
                if i > 0 {
                    let mut next = crate::bitset::BitSet::new(g.order());
                    for w in frontier.iter() {
                        next.union_with(g.neighbors(w));
                    }
                    frontier = next;
                }
                let set = frontier
                    .iter()
                    .fold(Subset::EMPTY, |acc, u| acc.union(self.base_sets[c[u]]));
                tuple.push(set);
            }
            if !is_helical_tuple(&tuple, n) {
                return Err(Error::Invariant(format!(
                    "encoded tuple {tuple:?} of vertex {v} violates the helical constraints"
                )));
            }
            let idx = self.helical_index.get(&tuple).ok_or_else(|| {
                Error::Invariant(format!("encoded tuple {tuple:?} is not a target vertex"))
            })?;
            images.push(*idx);
        }
        let f = VertexMap::new(images);
        check_homomorphism(g, &self.helical, &f)
            .map_err(|e| Error::Invariant(format!("encoded map is not a homomorphism: {e}")))?;
        Ok(f)
    }

    /// `c(v) = A_1` where `f(v) = (A_1, ..., A_k)`.
    pub fn decode(&self, g: &Graph, f: &VertexMap) -> Result<VertexMap> {
        check_homomorphism(g, &self.helical, f)?;
        self.require_odd_girth(g)?;
        let c: VertexMap = (0..g.order())
            .map(|v| {
                let first = self
                    .helical
                    .label(f[v])
                    .and_then(|l| l.tuple())
                    .expect("tuple label")[0];
                self.base_index[&first]
            })
            .collect();
        check_homomorphism(&power(g, self.power_exponent())?, &self.base, &c)
            .map_err(|e| Error::Invariant(format!("decoded map is not a homomorphism: {e}")))?;
        Ok(c)
    }
}

/// One-shot form of [`HelicalTransfer::encode`] into `H(m,n,k)`.
pub fn encode_homb(g: &Graph, k: usize, m: usize, n: usize, c: &VertexMap) -> Result<VertexMap> {
    HelicalTransfer::new(HelicalKind::Full, m, n, k)?.encode(g, c)
}

/// One-shot form of [`HelicalTransfer::decode`] from `H(m,n,k)`.
pub fn decode_homb(g: &Graph, k: usize, m: usize, n: usize, f: &VertexMap) -> Result<VertexMap> {
    HelicalTransfer::new(HelicalKind::Full, m, n, k)?.decode(g, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, helical, petersen};
    use crate::hom::{find_homomorphism, is_homomorphism, Mode};

    #[test]
    fn nine_cycle_round_trip() {
        let c9 = cycle(9).unwrap();
        let c = VertexMap::new(vec![0, 1, 0, 1, 2, 1, 2, 0, 2]);
        let t = HelicalTransfer::new(HelicalKind::Full, 3, 1, 2).unwrap();
        assert!(is_homomorphism(&power(&c9, 3).unwrap(), t.base(), &c));
        let f = t.encode(&c9, &c).unwrap();
        assert!(is_homomorphism(&c9, t.helical(), &f));
        assert_eq!(t.decode(&c9, &f).unwrap(), c);
    }

    #[test]
    fn k1_is_the_given_map() {
        let k2 = complete(2).unwrap();
        let c = VertexMap::new(vec![0, 1]);
        let f = encode_homb(&k2, 1, 2, 1, &c).unwrap();
        assert_eq!(f, c);
    }

    #[test]
    fn identity_decodes() {
        for m in [3, 5] {
            let h = helical(m, 1, 2).unwrap();
            let id: VertexMap = (0..h.order()).collect();
            let c = decode_homb(&h, 2, m, 1, &id).unwrap();
            assert!(is_homomorphism(
                &power(&h, 3).unwrap(),
                &complete(m).unwrap(),
                &c
            ));
        }
    }

    #[test]
    fn petersen_search_then_encode() {
        let p = petersen();
        let t = HelicalTransfer::new(HelicalKind::Full, 6, 1, 2).unwrap();
        let p3 = power(&p, 3).unwrap();
        // Petersen has diameter 2, so its cube is complete and needs 10 colours
        assert!(!find_homomorphism(&p3, t.base(), Mode::Decide).exists());
        let t10 = HelicalTransfer::new(HelicalKind::Full, 10, 1, 2).unwrap();
        let c = find_homomorphism(&p3, t10.base(), Mode::First)
            .witness()
            .unwrap();
        let f = t10.encode(&p, &c).unwrap();
        assert_eq!(t10.decode(&p, &f).unwrap(), c);
    }

    #[test]
    fn rejects_bad_inputs() {
        let c5 = cycle(5).unwrap();
        let t = HelicalTransfer::new(HelicalKind::Full, 3, 1, 3).unwrap();
        let c: VertexMap = (0..5).map(|i| i % 3).collect();
        assert!(matches!(t.encode(&c5, &c), Err(Error::OddGirth { .. })));
        let c9 = cycle(9).unwrap();
        let t2 = HelicalTransfer::new(HelicalKind::Full, 3, 1, 2).unwrap();
        let bad: VertexMap = (0..9).map(|i| i % 3).collect();
        assert!(matches!(
            t2.encode(&c9, &bad),
            Err(Error::NotHomomorphism(_))
        ));
        assert!(HelicalTransfer::new(HelicalKind::Stable, 5, 2, 2).is_err());
    }
}
