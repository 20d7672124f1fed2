//! Subset enumeration over the ground set `{1..m}`.

use crate::graph::Subset;

/// All `n`-subsets of `{1..m}` in lexicographic order.
pub fn n_subsets(m: usize, n: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(m: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>) {
        if cur.len() == n {
            out.push(cur.iter().copied().collect());
            return;
        }
        let need = n - cur.len();
        for x in start..=(m + 1 - need) {
            cur.push(x);
            rec(m, n, x + 1, cur, out);
            cur.pop();
        }
    }
    if n <= m {
        rec(m, n, 1, &mut cur, &mut out);
    }
    out
}

/// 2-stable: every two distinct elements `x, y` satisfy `2 <= |x - y| <= m - 2`,
/// i.e. no two elements are cyclically consecutive (`{1, m}` counts as consecutive).
pub fn is_two_stable(s: Subset, m: usize) -> bool {
    let e: Vec<usize> = s.elements().collect();
    e.iter().enumerate().all(|(i, &x)| {
        e[i + 1..].iter().all(|&y| {
            let d = y - x;
            (2..=m.saturating_sub(2)).contains(&d)
        })
    })
}

/// All 2-stable `n`-subsets of `{1..m}` in lexicographic order, generated directly
/// (no filtering of `C(m, n)` candidates), so large ground sets stay cheap.
pub fn stable_subsets(m: usize, n: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if n == 0 || n > m {
        return out;
    }
    if n == 1 {
        return (1..=m).map(Subset::singleton).collect();
    }
    let mut cur = Vec::with_capacity(n);
    fn rec(m: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>) {
        if cur.len() == n {
            out.push(cur.iter().copied().collect());
            return;
        }
        // last element must stay within first + m - 2 to avoid wrapping onto the first
        let bound = match cur.first() {
            Some(&f) => (f + m - 2).min(m),
            None => m,
        };
        let remaining = n - cur.len();
        let mut x = start;
        while x + 2 * (remaining - 1) <= bound {
            cur.push(x);
            rec(m, n, x + 2, cur, out);
            cur.pop();
            x += 1;
        }
    }
    rec(m, n, 1, &mut cur, &mut out);
    out
}

/// Number of 2-stable `n`-subsets of a cyclic `m`-set: `m / (m - n) * C(m - n, n)`.
pub fn stable_subset_count(m: usize, n: usize) -> u128 {
    if n == 0 || 2 * n > m {
        return u128::from(n == 0);
    }
    let (a, b) = ((m - n) as u128, n as u128);
    let mut binom: u128 = 1;
    for i in 0..b {
        binom = binom * (a - i) / (i + 1);
    }
    binom * m as u128 / a
}

/// Decides whether `s` is a union of members of `stable` (sets contained in `s` must cover it).
pub fn is_union_of(s: Subset, stable: &[Subset]) -> bool {
    let cover = stable
        .iter()
        .filter(|t| t.is_subset(s))
        .fold(Subset::EMPTY, |acc, &t| acc.union(t));
    cover == s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    #[test]
    fn n_subsets_counts() {
        assert_eq!(n_subsets(5, 2).len(), 10);
        assert_eq!(n_subsets(6, 3).len(), 20);
        assert_eq!(n_subsets(3, 3), vec![set(&[1, 2, 3])]);
        let v = n_subsets(4, 2);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn circular_stability() {
        assert!(!is_two_stable(set(&[1, 7]), 7));
        assert!(is_two_stable(set(&[1, 6]), 7));
        assert!(!is_two_stable(set(&[2, 3]), 7));
        assert!(is_two_stable(set(&[1, 3, 5]), 7));
        assert!(!is_two_stable(set(&[1, 3, 5, 7]), 7));
    }

    #[test]
    fn stable_generator_matches_filter() {
        for m in 2..=12 {
            for n in 1..=m / 2 {
                let filtered: Vec<Subset> = n_subsets(m, n)
                    .into_iter()
                    .filter(|&s| is_two_stable(s, m))
                    .collect();
                assert_eq!(stable_subsets(m, n), filtered, "m={m} n={n}");
                assert_eq!(
                    stable_subset_count(m, n),
                    filtered.len() as u128,
                    "m={m} n={n}"
                );
            }
        }
        assert_eq!(stable_subset_count(36, 17), 324);
        assert_eq!(stable_subsets(36, 17).len(), 324);
        assert_eq!(stable_subset_count(9, 4), 9);
    }

    #[test]
    fn stable_unions() {
        let st = stable_subsets(7, 2);
        assert!(is_union_of(set(&[4, 5, 6, 7]), &st));
        assert!(!is_union_of(set(&[1, 2, 3]), &st));
        assert!(is_union_of(set(&[1, 3]), &st));
    }
}
