//! Chromatic number, circular and fractional chromatic numbers, local chromatic number,
//! and vertex-criticality, all computed exactly.

mod circular;
pub mod coloring;
mod critical;
mod exact;
mod fractional;
mod local;
pub mod lp;

use std::fmt;

pub use circular::circular_chromatic;
pub use coloring::{color_with, greedy_clique, ColoringOutcome};
pub use critical::{vertex_critical, CriticalityReport};
pub use exact::{decide_coloring, ColoringDecision};
pub use fractional::{fractional_chromatic, maximal_independent_sets};
pub use local::{local_chromatic, local_value};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::VertexMap;

/// Exact fraction in lowest terms.
pub type Rational = num_rational::Rational64;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    None,
    /// A colouring or homomorphism witnessing the upper bound.
    Map(VertexMap),
    /// Independent sets with weights, witnessing a fractional colouring.
    Weights(Vec<(Vec<usize>, Rational)>),
}

/// One exhaustive search that came back empty, supporting the lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub claim: String,
    /// The procedure that settled the claim, such as `"search"` or `"sat"`.
    pub method: &'static str,
    pub nodes: u64,
}

/// A lower bound, strict when the parameter is known to exceed `value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: Rational,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    /// The exact value, or the best upper bound when `exact` is false.
    pub value: Rational,
    pub exact: bool,
    pub lower: Bound,
    pub upper: Rational,
    pub certificate: Certificate,
    pub refutations: Vec<Refutation>,
}

impl ChromaticResult {
    fn exact(value: Rational, certificate: Certificate, refutations: Vec<Refutation>) -> Self {
        ChromaticResult {
            value,
            exact: true,
            lower: Bound {
                value,
                strict: false,
            },
            upper: value,
            certificate,
            refutations,
        }
    }

    pub fn integer(&self) -> usize {
        debug_assert!(self.value.is_integer());
        *self.value.numer() as usize
    }

    pub fn map(&self) -> Option<&VertexMap> {
        match &self.certificate {
            Certificate::Map(m) => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for ChromaticResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.value)
        } else {
            let op = if self.lower.strict { "<" } else { "<=" };
            write!(f, "{} {op} x <= {}", self.lower.value, self.upper)
        }
    }
}

pub(crate) fn require_loop_free(g: &Graph, what: &str) -> Result<()> {
    if g.has_loops() {
        Err(Error::Loops(format!(
            "{what} is undefined for graphs with loops"
        )))
    } else {
        Ok(())
    }
}

pub(crate) fn require_cap(g: &Graph, what: &str, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(Error::cap(what, g.order(), cap))
    } else {
        Ok(())
    }
}

/// Smallest `t` admitting a proper `t`-colouring. Every `t` between the greedy clique bound
/// and the answer is refuted by exhaustive search, and the refutations are kept.
pub fn chromatic_number(g: &Graph, caps: &Caps) -> Result<ChromaticResult> {
    require_loop_free(g, "chromatic number")?;
    require_cap(g, "chromatic instance", caps.chromatic)?;
    if g.order() == 0 {
        return Ok(ChromaticResult::exact(
            Rational::from_integer(0),
            Certificate::Map(VertexMap::default()),
            Vec::new(),
        ));
    }
    let clique = greedy_clique(g).len();
    let mut refutations = vec![Refutation {
        claim: format!("contains K_{clique}"),
        method: "clique",
        nodes: 0,
    }];
    for t in clique.. {
        let decision = decide_coloring(g, t, true)?;
        match decision.outcome {
            ColoringOutcome::Colorable(c) => {
                return Ok(ChromaticResult::exact(
                    Rational::from_integer(t as i64),
                    Certificate::Map(c),
                    refutations,
                ));
            }
            ColoringOutcome::Refuted { nodes } => refutations.push(Refutation {
                claim: format!("no proper {t}-colouring"),
                method: decision.method,
                nodes,
            }),
        }
    }
    unreachable!("a graph is always |V|-colourable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, kneser, schrijver};
    use crate::graph::power;
    use crate::hom::is_homomorphism;

    fn chi(g: &Graph) -> usize {
        let r = chromatic_number(g, &Caps::default()).unwrap();
        let t = r.integer();
        assert!(is_homomorphism(g, &complete(t.max(1)).unwrap(), r.map().unwrap()) || t == 0);
        t
    }

    #[test]
    fn small_values() {
        assert_eq!(chi(&kneser(5, 2).unwrap()), 3);
        assert_eq!(chi(&schrijver(7, 3).unwrap()), 3);
        assert_eq!(chi(&power(&cycle(9).unwrap(), 3).unwrap()), 3);
        assert_eq!(chi(&Graph::new(4)), 1);
        assert_eq!(chi(&Graph::new(0)), 0);
        assert_eq!(chi(&complete(4).unwrap()), 4);
    }

    #[test]
    fn rejects_loops_and_caps() {
        let mut g = Graph::new(2);
        g.add_edge(0, 0);
        assert!(matches!(
            chromatic_number(&g, &Caps::default()),
            Err(Error::Loops(_))
        ));
        let caps = Caps {
            chromatic: 3,
            ..Caps::default()
        };
        assert!(matches!(
            chromatic_number(&cycle(5).unwrap(), &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
