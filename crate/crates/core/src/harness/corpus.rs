//! Seeded random graph corpora. Every generator is a pure function of its [`CorpusSpec`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::{cycle_stats, Graph};

/// Samples drawn per requested graph before giving up.
pub const REJECTION_BUDGET: usize = 5_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    /// `G(n,p)` with `n` uniform in the order bounds.
    GnpOddGirth { edge_probability: f64 },
    /// Configuration-model cubic graphs, loops and multi-edges rejected.
    RandomCubic,
    /// The listed families, filtered by the bounds; the seed is unused.
    FamilySweep(Vec<Family>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub generator: Generator,
    pub count: usize,
    pub min_order: usize,
    pub max_order: usize,
    /// Accept only graphs whose shortest odd cycle has at least this length.
    pub odd_girth: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn gnp(
        count: usize,
        min_order: usize,
        max_order: usize,
        p: f64,
        odd_girth: usize,
        seed: u64,
    ) -> Self {
        CorpusSpec {
            generator: Generator::GnpOddGirth {
                edge_probability: p,
            },
            count,
            min_order,
            max_order,
            odd_girth,
            seed,
        }
    }

    fn accepts(&self, g: &Graph) -> bool {
        (self.min_order..=self.max_order).contains(&g.order())
            && cycle_stats(g).odd_girth_at_least(self.odd_girth)
    }
}

fn exhausted(spec: &CorpusSpec, got: usize) -> Error {
    Error::param(format!(
        "rejection budget exhausted after {got} of {} graphs (orders {}..={}, odd girth >= {}); loosen the bounds",
        spec.count, spec.min_order, spec.max_order, spec.odd_girth
    ))
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    if spec.min_order > spec.max_order {
        return Err(Error::param("corpus min_order exceeds max_order"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match &spec.generator {
        Generator::GnpOddGirth {
            edge_probability: p,
        } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::param(format!("edge probability {p} outside [0,1]")));
            }
            let mut out = Vec::with_capacity(spec.count);
            let mut attempts = 0;
            while out.len() < spec.count {
                if attempts == REJECTION_BUDGET * spec.count.max(1) {
                    return Err(exhausted(spec, out.len()));
                }
                attempts += 1;
                let n = rng.gen_range(spec.min_order..=spec.max_order);
                let mut g = Graph::new(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(*p) {
                            g.add_edge(u, v);
                        }
                    }
                }
                if spec.accepts(&g) {
                    out.push(g);
                }
            }
            Ok(out)
        }
        Generator::RandomCubic => {
            let orders: Vec<usize> = (spec.min_order..=spec.max_order)
                .filter(|n| n % 2 == 0 && *n >= 4)
                .collect();
            if orders.is_empty() {
                return Err(Error::param(
                    "random-cubic needs an even order >= 4 within the bounds",
                ));
            }
            let mut out = Vec::with_capacity(spec.count);
            let mut attempts = 0;
            while out.len() < spec.count {
                if attempts == REJECTION_BUDGET * spec.count.max(1) {
                    return Err(exhausted(spec, out.len()));
                }
                attempts += 1;
                let n = orders[rng.gen_range(0..orders.len())];
                if let Some(g) = pairing(n, &mut rng).filter(|g| spec.accepts(g)) {
                    out.push(g);
                }
            }
            Ok(out)
        }
        Generator::FamilySweep(families) => {
            let mut out = Vec::new();
            for f in families {
                let g = f.build()?;
                if spec.accepts(&g) {
                    out.push(g);
                    if out.len() == spec.count {
                        break;
                    }
                }
            }
            Ok(out)
        }
    }
}

/// One configuration-model sample: three points per vertex, matched uniformly.
fn pairing(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut points: Vec<usize> = (0..3 * n).collect();
    points.shuffle(rng);
    let mut g = Graph::new(n);
    for pair in points.chunks(2) {
        let (u, v) = (pair[0] / 3, pair[1] / 3);
        if u == v || g.has_edge(u, v) {
            return None;
        }
        g.add_edge(u, v);
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::hgf::serialize_graph;

    #[test]
    fn gnp_respects_bounds() {
        let spec = CorpusSpec::gnp(50, 4, 10, 0.3, 5, 42);
        let corpus = generate_corpus(&spec).unwrap();
        assert_eq!(corpus.len(), 50);
        for g in &corpus {
            assert!((4..=10).contains(&g.order()));
            assert!(cycle_stats(g).odd_girth_at_least(5));
        }
        let again = generate_corpus(&spec).unwrap();
        let text = |c: &[Graph]| c.iter().map(serialize_graph).collect::<String>();
        assert_eq!(text(&corpus), text(&again));
        let other = generate_corpus(&CorpusSpec { seed: 43, ..spec }).unwrap();
        assert_ne!(text(&corpus), text(&other));
    }

    #[test]
    fn cubic_graphs_are_simple_and_regular() {
        let spec = CorpusSpec {
            generator: Generator::RandomCubic,
            count: 10,
            min_order: 12,
            max_order: 12,
            odd_girth: 0,
            seed: 7,
        };
        for g in generate_corpus(&spec).unwrap() {
            assert_eq!(g.order(), 12);
            assert!(!g.has_loops());
            assert!((0..12).all(|v| g.degree(v) == 3));
        }
    }

    #[test]
    fn impossible_bounds_fail_loudly() {
        // K_4 is the only candidate and contains triangles
        let spec = CorpusSpec::gnp(1, 4, 4, 1.0, 5, 1);
        assert!(
            matches!(generate_corpus(&spec), Err(Error::InvalidParameter(m)) if m.contains("loosen"))
        );
    }

    #[test]
    fn sweep_filters() {
        let fams = ["C:5", "K:4", "C:7", "KG:5,2"]
            .map(|s| s.parse().unwrap())
            .to_vec();
        let spec = CorpusSpec {
            generator: Generator::FamilySweep(fams),
            count: 10,
            min_order: 1,
            max_order: 10,
            odd_girth: 5,
            seed: 0,
        };
        let orders: Vec<usize> = generate_corpus(&spec)
            .unwrap()
            .iter()
            .map(Graph::order)
            .collect();
        assert_eq!(orders, [5, 7, 10]);
    }
}
