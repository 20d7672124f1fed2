use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ground set `{1..m}` a [`Subset`] can hold.
pub const MAX_GROUND: usize = 64;

/// A subset of the ground set `{1..m}`, stored as a bitmask (element `x` is bit `x-1`).
///
/// Ordering is lexicographic on the increasing element sequence, so `{1,2} < {1,2,5} < {1,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u64) -> Self {
        Subset(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// `{1..m}`.
    pub fn ground(m: usize) -> Self {
        debug_assert!(m <= MAX_GROUND);
        if m == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << m) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&x));
        Subset(1 << (x - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        (1..=MAX_GROUND).contains(&x) && self.0 >> (x - 1) & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << (x - 1);
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn complement(self, m: usize) -> Subset {
        Subset(!self.0 & Subset::ground(m).0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(b + 1)
            }
        })
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(other.elements())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Structured vertex label: a tuple of subsets (family vertices) or a free-text token.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Tuple(Vec<Subset>),
    Text(String),
}

impl Label {
    pub fn tuple(&self) -> Option<&[Subset]> {
        match self {
            Label::Tuple(t) => Some(t),
            Label::Text(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Tuple(sets) => {
                f.write_str("(")?;
                for (i, s) in sets.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
            Label::Text(t) => f.write_str(t),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Labels(format!("`{s}`: {why}"));
        if s.is_empty() || s.chars().any(char::is_whitespace) {
            return Err(bad("labels are non-empty and contain no whitespace"));
        }
        if !s.starts_with('(') {
            return Ok(Label::Text(s.to_string()));
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("unbalanced parentheses"))?;
        let mut sets = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(|| bad("expected `{`"))?;
            let close = body.find('}').ok_or_else(|| bad("expected `}`"))?;
            let mut set = Subset::EMPTY;
            for tok in body[..close].split(',').filter(|t| !t.is_empty()) {
                let x: usize = tok.parse().map_err(|_| bad("non-numeric element"))?;
                if !(1..=MAX_GROUND).contains(&x) {
                    return Err(bad("element out of range 1..=64"));
                }
                if set.contains(x) {
                    return Err(bad("repeated element"));
                }
                set.insert(x);
            }
            sets.push(set);
            rest = &body[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                if r.is_empty() {
                    return Err(bad("trailing comma"));
                }
                rest = r;
            } else if !rest.is_empty() {
                return Err(bad("expected `,` between sets"));
            }
        }
        Ok(Label::Tuple(sets))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_order_is_lexicographic() {
        let a: Subset = [1, 2].into_iter().collect();
        let b: Subset = [1, 2, 5].into_iter().collect();
        let c: Subset = [1, 3].into_iter().collect();
        assert!(a < b && b < c);
        assert!(Subset::EMPTY < a);
    }

    #[test]
    fn label_text_round_trip() {
        for s in [
            "({1},{2})",
            "({1,3},{4,5,6,7})",
            "({})",
            "()",
            "hello",
            "0-1.2",
        ] {
            let l: Label = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert!("({1},".parse::<Label>().is_err());
        assert!("({1,1})".parse::<Label>().is_err());
        assert!("({0})".parse::<Label>().is_err());
        assert!("a b".parse::<Label>().is_err());
    }
}
