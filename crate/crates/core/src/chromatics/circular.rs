use num_integer::Integer;

use super::{
    chromatic_number, require_loop_free, Bound, Certificate, ChromaticResult, Rational, Refutation,
};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::decide_circular;

/// Circular chromatic number by bisection over `K_(p,q)` targets.
///
/// Candidate ratios satisfy `max(2, χ(g)-1) < p/q <= χ(g)`, `gcd(p,q) = 1` and
/// `q <= min(denominator_cap, |V|)`. A refuted target `K_(p,q)` proves `χ_c > p/q`, a
/// homomorphism proves `χ_c <= p/q`. The result is exact when `denominator_cap >= |V|`.
pub fn circular_chromatic(
    g: &Graph,
    denominator_cap: usize,
    caps: &Caps,
) -> Result<ChromaticResult> {
    require_loop_free(g, "circular chromatic number")?;
    if g.edge_count() == 0 {
        return Err(Error::param(
            "circular chromatic number needs at least one edge",
        ));
    }
    if denominator_cap == 0 {
        return Err(Error::param("denominator cap must be positive"));
    }
    let chromatic = chromatic_number(g, caps)?;
    let chi = chromatic.integer();
    let qmax = denominator_cap.min(g.order());
    let floor = Rational::from_integer(chi as i64 - 1);
    // K_(p,q) maps to K_(chi-1) when p/q <= chi-1, so those targets are already refuted
    let mut ratios: Vec<(usize, usize)> = (1..=qmax)
        .flat_map(|q| (2 * q..=chi * q).map(move |p| (p, q)))
        .filter(|&(p, q)| p.gcd(&q) == 1 && Rational::new(p as i64, q as i64) > floor)
        .collect();
    ratios.sort_by_key(|&(p, q)| Rational::new(p as i64, q as i64));
    let ratio = |i: usize| Rational::new(ratios[i].0 as i64, ratios[i].1 as i64);

    let mut refutations = Vec::new();
    if chi >= 3 {
        refutations.push(Refutation {
            claim: format!("no homomorphism to K_(p,q) with p/q <= {floor}"),
            method: "chromatic",
            nodes: 0,
        });
    }
    // existence is monotone in p/q, so bisect between the largest refuted ratio (lo) and the
    // smallest one known to admit a map (hi); a chi-colouring maps to K_(chi,1). The first
    // probe is the ratio just below chi, which settles the common case chi_c = chi at once.
    let mut lo: Option<usize> = None;
    let mut hi = ratios.len() - 1;
    let mut witness = chromatic
        .map()
        .cloned()
        .ok_or_else(|| Error::Invariant("chromatic number without a colouring".into()))?;
    let mut first = true;
    while hi > lo.map_or(0, |l| l + 1) {
        let mid = if first {
            hi - 1
        } else {
            (lo.map_or(0, |l| l + 1) + hi - 1) / 2
        };
        first = false;
        let (p, q) = ratios[mid];
        let decision = decide_circular(g, p, q)?;
        match decision.witness {
            Some(w) => {
                hi = mid;
                witness = w;
            }
            None => {
                lo = Some(mid);
                refutations.push(Refutation {
                    claim: format!("no homomorphism to K_({p},{q})"),
                    method: decision.method,
                    nodes: decision.nodes,
                });
            }
        }
    }
    let value = ratio(hi);
    let exact = denominator_cap >= g.order();
    let lower = if exact {
        Bound {
            value,
            strict: false,
        }
    } else {
        Bound {
            value: lo.map_or(floor, ratio).max(floor),
            strict: true,
        }
    };
    Ok(ChromaticResult {
        value,
        exact,
        lower,
        upper: value,
        certificate: Certificate::Map(witness),
        refutations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{circular_complete, complete, cycle, helical};
    use crate::hom::is_homomorphism;

    #[test]
    fn examples() {
        let caps = Caps::default();
        let h = helical(3, 1, 2).unwrap();
        let r = circular_chromatic(&h, 9, &caps).unwrap();
        assert!(r.exact);
        assert_eq!(r.value, Rational::new(9, 4));
        let target = circular_complete(9, 4).unwrap();
        assert!(is_homomorphism(&h, &target, r.map().unwrap()));

        let c5 = circular_chromatic(&cycle(5).unwrap(), 5, &caps).unwrap();
        assert_eq!((c5.value, c5.exact), (Rational::new(5, 2), true));
        let k4 = circular_chromatic(&complete(4).unwrap(), 4, &caps).unwrap();
        assert_eq!((k4.value, k4.exact), (Rational::from_integer(4), true));
    }

    #[test]
    fn partial_scan_reports_bounds() {
        let caps = Caps::default();
        let r = circular_chromatic(&cycle(9).unwrap(), 2, &caps).unwrap();
        assert!(!r.exact);
        assert_eq!(r.upper, Rational::new(5, 2));
        assert_eq!(
            r.lower,
            Bound {
                value: Rational::from_integer(2),
                strict: true
            }
        );
        assert!(circular_chromatic(&Graph::new(3), 3, &caps).is_err());
    }
}
