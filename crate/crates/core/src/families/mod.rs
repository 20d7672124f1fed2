//! Constructors for the named graph families and the dominated-vertex reduction.

mod basic;
mod helical;
mod reduce;
pub mod sets;

use std::fmt;
use std::str::FromStr;

pub use basic::{circular_complete, complete, complete_bipartite, cycle, hypercube};
pub use helical::{
    helical, helical_adjacent, helical_graph, helical_order, helical_vertices, is_helical_tuple,
    schrijver_helical, stable_helical, tuple_index, HelicalKind,
};
pub use reduce::{while_reduce, ReductionTrace};

use crate::error::{Error, Result};
use crate::graph::{Graph, Label, Subset};
use helical::check_params;
use sets::{n_subsets, stable_subsets};

fn set_graph(sets: Vec<Subset>) -> Graph {
    let n = sets.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if sets[i].is_disjoint(sets[j]) {
                g.add_edge(i, j);
            }
        }
    }
    g.with_labels(sets.into_iter().map(|s| Label::Tuple(vec![s])).collect())
        .expect("subsets are distinct")
}

/// Kneser graph `KG(m,n)`: `n`-subsets of `{1..m}`, adjacent when disjoint.
pub fn kneser(m: usize, n: usize) -> Result<Graph> {
    check_params(m, n)?;
    Ok(set_graph(n_subsets(m, n)).with_name(format!("KG:{m},{n}")))
}

/// Schrijver graph `SG(m,n)`: the subgraph of `KG(m,n)` induced by 2-stable sets.
pub fn schrijver(m: usize, n: usize) -> Result<Graph> {
    check_params(m, n)?;
    Ok(set_graph(stable_subsets(m, n)).with_name(format!("SG:{m},{n}")))
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid parameters")
}

/// A family descriptor as accepted by the CLI: `K:m`, `C:n`, `Kc:n,d`, `KG:m,n`, `SG:m,n`,
/// `H:m,n,k`, `SGk:m,n,k`, `SH:m,n,k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Circular(usize, usize),
    Kneser(usize, usize),
    Schrijver(usize, usize),
    Helical(HelicalKind, usize, usize, usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Complete(m) => complete(m),
            Family::Cycle(n) => cycle(n),
            Family::Circular(n, d) => circular_complete(n, d),
            Family::Kneser(m, n) => kneser(m, n),
            Family::Schrijver(m, n) => schrijver(m, n),
            Family::Helical(kind, m, n, k) => helical_graph(kind, m, n, k),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete(m) => write!(f, "K:{m}"),
            Family::Cycle(n) => write!(f, "C:{n}"),
            Family::Circular(n, d) => write!(f, "Kc:{n},{d}"),
            Family::Kneser(m, n) => write!(f, "KG:{m},{n}"),
            Family::Schrijver(m, n) => write!(f, "SG:{m},{n}"),
            Family::Helical(kind, m, n, k) => write!(f, "{}:{m},{n},{k}", kind.prefix()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Descriptor(s.to_string());
        let (head, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let fam = match (head, nums.as_slice()) {
            ("K", &[m]) => Family::Complete(m),
            ("C", &[n]) => Family::Cycle(n),
            ("Kc", &[n, d]) => Family::Circular(n, d),
            ("KG", &[m, n]) => Family::Kneser(m, n),
            ("SG", &[m, n]) => Family::Schrijver(m, n),
            ("H", &[m, n, k]) => Family::Helical(HelicalKind::Full, m, n, k),
            ("SGk", &[m, n, k]) => Family::Helical(HelicalKind::Schrijver, m, n, k),
            ("SH", &[m, n, k]) => Family::Helical(HelicalKind::Stable, m, n, k),
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn kneser_examples() {
        let p = kneser(5, 2).unwrap();
        assert_eq!((p.order(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let k2 = kneser(2, 1).unwrap();
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));
        let m = kneser(4, 2).unwrap();
        assert_eq!((m.order(), m.edge_count()), (6, 3));
        assert!((0..6).all(|v| m.degree(v) == 1));
        assert!(kneser(3, 2).is_err());
    }

    #[test]
    fn schrijver_examples() {
        let s = schrijver(5, 2).unwrap();
        let labels: Vec<String> = s.labels().unwrap().iter().map(|l| l.to_string()).collect();
        assert_eq!(
            labels,
            ["({1,3})", "({1,4})", "({2,4})", "({2,5})", "({3,5})"]
        );
        assert!(is_isomorphic(&s, &cycle(5).unwrap(), 16).unwrap());
        for n in 2..=4 {
            let s = schrijver(2 * n + 1, n).unwrap();
            assert!(is_isomorphic(&s, &cycle(2 * n + 1).unwrap(), 16).unwrap());
        }
        assert_eq!(schrijver(9, 4).unwrap().order(), 9);
    }

    #[test]
    fn helical_degenerate_cases() {
        for m in 3..=5 {
            assert!(is_isomorphic(&helical(m, 1, 1).unwrap(), &complete(m).unwrap(), 16).unwrap());
        }
        assert_eq!(helical(5, 2, 1).unwrap(), kneser(5, 2).unwrap());
        assert!(is_isomorphic(&helical(3, 1, 2).unwrap(), &cycle(9).unwrap(), 16).unwrap());
        assert_eq!(
            schrijver_helical(5, 2, 1).unwrap(),
            schrijver(5, 2).unwrap()
        );
        for k in 1..=3 {
            assert_eq!(
                schrijver_helical(5, 1, k).unwrap(),
                helical(5, 1, k).unwrap()
            );
            assert_eq!(stable_helical(5, 1, k).unwrap(), helical(5, 1, k).unwrap());
        }
    }

    #[test]
    fn nested_induced_subgraphs() {
        let h = helical(6, 2, 2).unwrap();
        let sg = schrijver_helical(6, 2, 2).unwrap();
        let sh = stable_helical(6, 2, 2).unwrap();
        for (small, big) in [(&sh, &sg), (&sg, &h)] {
            let idx: Vec<usize> = small
                .labels()
                .unwrap()
                .iter()
                .map(|l| big.vertex_of(l).expect("vertex inclusion"))
                .collect();
            assert_eq!(&big.induced(&idx), small);
        }
    }

    #[test]
    fn descriptors() {
        for s in [
            "K:4",
            "C:9",
            "Kc:5,2",
            "KG:5,2",
            "SG:7,3",
            "H:5,1,2",
            "SGk:7,2,2",
            "SH:6,2,2",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        for s in ["K", "K:4,1", "X:1", "H:5,1", "C:a"] {
            assert!(s.parse::<Family>().is_err(), "{s}");
        }
        let c52 = "Kc:5,2".parse::<Family>().unwrap().build().unwrap();
        assert!(is_isomorphic(&c52, &cycle(5).unwrap(), 16).unwrap());
    }
}
