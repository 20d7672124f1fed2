//! Automorphisms induced by permuting the ground set of subset-tuple labels.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{Graph, Label, Subset};
use crate::bitset::BitSet;

/// Upper bound on the size of a group built by [`ground_symmetry_group`].
pub const MAX_GROUP: usize = 5_040;

pub fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
    let n = g.order();
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..n).all(|u| g.neighbors(u).iter().all(|v| g.has_edge(p[u], p[v])))
}

fn permute_subset(s: Subset, sigma: &[usize]) -> Subset {
    s.elements().map(|x| sigma[x - 1]).collect()
}

/// The vertex permutation induced by `sigma` (a permutation of `1..=m`, given 0-indexed as
/// `sigma[x-1]`), or `None` when some image label is missing or edges are not preserved.
pub fn induced_permutation(g: &Graph, sigma: &[usize]) -> Option<Vec<usize>> {
    let labels = g.labels()?;
    let index: HashMap<&Label, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut p = Vec::with_capacity(g.order());
    for l in labels {
        let t = l.tuple()?;
        let image = Label::Tuple(t.iter().map(|&s| permute_subset(s, sigma)).collect());
        p.push(*index.get(&image)?);
    }
    is_automorphism(g, &p).then_some(p)
}

fn ground_size(g: &Graph) -> Option<usize> {
    let mut m = 0;
    for l in g.labels()? {
        for s in l.tuple()? {
            m = m.max(s.max_element().unwrap_or(0));
        }
    }
    (m >= 2).then_some(m)
}

/// Generators among the rotation, reflection and first transposition of the ground set that
/// act as automorphisms of `g`.
pub fn ground_symmetries(g: &Graph) -> Vec<Vec<usize>> {
    let Some(m) = ground_size(g) else {
        return Vec::new();
    };
    let rotation: Vec<usize> = (1..=m).map(|x| x % m + 1).collect();
    let reflection: Vec<usize> = (1..=m).map(|x| m + 1 - x).collect();
    let mut swap: Vec<usize> = (1..=m).collect();
    swap.swap(0, 1);
    [rotation, reflection, swap]
        .iter()
        .filter_map(|sigma| induced_permutation(g, sigma))
        .collect()
}

/// Closure of `generators` under composition, identity first, then breadth-first order.
/// Returns `None` when the group has more than `cap` elements.
pub fn generate_group(n: usize, generators: &[Vec<usize>], cap: usize) -> Option<Vec<Vec<usize>>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut out = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for gen in generators {
            let q: Vec<usize> = p.iter().map(|&x| gen[x]).collect();
            if seen.insert(q.clone()) {
                if out.len() == cap {
                    return None;
                }
                out.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    Some(out)
}

/// The automorphism group generated by [`ground_symmetries`], or just the identity when the
/// graph is unlabelled or the group would exceed [`MAX_GROUP`].
pub fn ground_symmetry_group(g: &Graph) -> Vec<Vec<usize>> {
    let gens = ground_symmetries(g);
    generate_group(g.order(), &gens, MAX_GROUP).unwrap_or_else(|| vec![(0..g.order()).collect()])
}

/// The least vertex of every orbit under [`ground_symmetry_group`]; all vertices when the
/// group is trivial.
pub fn orbit_representatives(g: &Graph) -> BitSet {
    let group = ground_symmetry_group(g);
    BitSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&v| group.iter().all(|p| p[v] >= v)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{helical, kneser, schrijver};

    #[test]
    fn group_orders() {
        assert_eq!(ground_symmetry_group(&kneser(5, 2).unwrap()).len(), 120);
        // 2-stability is only invariant under the dihedral group
        assert_eq!(ground_symmetry_group(&schrijver(7, 2).unwrap()).len(), 14);
        assert_eq!(ground_symmetry_group(&helical(4, 1, 2).unwrap()).len(), 24);
        assert_eq!(ground_symmetry_group(&Graph::new(3)).len(), 1);
        assert_eq!(orbit_representatives(&kneser(5, 2).unwrap()).count(), 1);
        assert_eq!(orbit_representatives(&Graph::new(3)).count(), 3);
    }

    #[test]
    fn elements_are_automorphisms() {
        let g = schrijver(7, 3).unwrap();
        for p in ground_symmetry_group(&g) {
            assert!(is_automorphism(&g, &p));
        }
        assert!(!is_automorphism(&g, &[0; 7]));
    }
}
