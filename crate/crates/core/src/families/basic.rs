use crate::error::{Error, Result};
use crate::graph::Graph;

/// Circular complete graph `K_(n,d)`: `v_i ~ v_j` iff `d <= |i - j| <= n - d`.
pub fn circular_complete(n: usize, d: usize) -> Result<Graph> {
    if d == 0 || n < 2 * d {
        return Err(Error::param(format!(
            "K_(n,d) needs d >= 1 and n >= 2d, got n={n} d={d}"
        )));
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let diff = j - i;
            if d <= diff && diff <= n - d {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g.with_name(format!("Kc:{n},{d}")))
}

pub fn complete(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::param("K:m needs m >= 1"));
    }
    let mut g = Graph::new(m);
    for i in 0..m {
        for j in i + 1..m {
            g.add_edge(i, j);
        }
    }
    Ok(g.with_name(format!("K:{m}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("C:n needs n >= 3, got {n}")));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).with_name(format!("C:{n}")))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

pub fn hypercube(dim: usize) -> Graph {
    let n = 1usize << dim;
    let mut g = Graph::new(n);
    for v in 0..n {
        for b in 0..dim {
            let w = v ^ (1 << b);
            if v < w {
                g.add_edge(v, w);
            }
        }
    }
    g
}
