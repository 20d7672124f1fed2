//! Data-gathering probes for open questions about cubic graphs and subdivision powers.
//! They record computed values and assert only what is already proved.

use std::ops::RangeInclusive;

use super::report::{Case, Report, Verdict};
use crate::caps::Caps;
use crate::chromatics::{chromatic_number, decide_coloring, Rational};
use crate::error::{Error, Result};
use crate::families::{cycle, helical};
use crate::graph::{cycle_stats, power, subdivide, Graph};
use crate::hom::decide_homomorphism;

fn graph_name(g: &Graph) -> String {
    g.name()
        .map_or_else(|| format!("graph{}", g.order()), str::to_string)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn data(instance: String, observed: Result<String>) -> Case {
    match observed {
        Ok(o) => Case::new(instance, "-", o, Verdict::Pass),
        Err(e @ Error::CapExceeded { .. }) => {
            Case::new(instance, "-", e.to_string(), Verdict::Indeterminate)
        }
        Err(e) => Case::new(instance, "-", format!("error: {e}"), Verdict::Fail),
    }
}

/// Girth, `G -> C_5`, `χ(S_2(G)^(5)) <= 3`, `χ(G^(3))`, `G -> H(5,1,2)` and `G -> H(4,1,2)`.
/// The first two answers must agree when the odd girth is at least 5.
pub fn pentagon_probe(g: &Graph, caps: &Caps) -> Result<Report> {
    if g.has_loops() {
        return Err(Error::Loops(
            "pentagon probe needs a loop-free graph".into(),
        ));
    }
    let name = graph_name(g);
    let stats = cycle_stats(g);
    let cubic = (0..g.order()).all(|v| g.degree(v) == 3);
    let mut report = Report::new("pentagon", 0)
        .param("graph", &name)
        .param("cubic", yes(cubic));
    report.push(Case::new(
        format!("{name}/girth"),
        "-",
        stats.to_string(),
        Verdict::Pass,
    ));

    let c5 = cycle(5)?;
    let to_c5 = decide_homomorphism(g, &c5, true)?.witness.is_some();
    report.push(Case::new(
        format!("{name}/hom_C5"),
        "-",
        yes(to_c5),
        Verdict::Pass,
    ));

    let s = power(&subdivide(g, 2)?, 5)?;
    let three = if s.has_loops() {
        None
    } else {
        Some(decide_coloring(&s, 3, false)?.outcome.coloring().is_some())
    };
    let observed = three.map_or("undefined (loops)".to_string(), |t| yes(t).to_string());
    report.push(Case::new(
        format!("{name}/chi_S2_pow5_le_3"),
        "-",
        observed,
        Verdict::Pass,
    ));

    let cube = power(g, 3)?;
    let chi_cube = if cube.has_loops() {
        Ok("undefined (loops)".to_string())
    } else {
        chromatic_number(&cube, caps).map(|r| r.to_string())
    };
    report.push(data(format!("{name}/chi_pow3"), chi_cube));

    for (m, label) in [(5, "hom_H5,1,2"), (4, "hom_H4,1,2")] {
        let target = helical(m, 1, 2)?;
        let found =
            decide_homomorphism(g, &target, false).map(|d| yes(d.witness.is_some()).to_string());
        report.push(data(format!("{name}/{label}"), found));
    }

    let check = format!("{name}/cross_check");
    report.push(match three {
        Some(t) if stats.odd_girth_at_least(5) => Case::new(
            check,
            "hom_C5 = chi_le_3",
            format!("hom_C5={} chi_le_3={}", yes(to_c5), yes(t)),
            Verdict::from_bool(t == to_c5),
        ),
        _ => Case::new(
            check,
            "hom_C5 = chi_le_3",
            "not applicable (odd girth < 5)",
            Verdict::Pass,
        ),
    });
    Ok(report)
}

/// `χ(S_{2t}(G)^(2k+1))` over the grid, with the ratio `(2k+1)/(2t+1)` and whether the value
/// equals `χ(G)`.
pub fn subdivision_power_scan(
    g: &Graph,
    k_range: RangeInclusive<usize>,
    t_range: RangeInclusive<usize>,
    caps: &Caps,
) -> Result<Report> {
    let name = graph_name(g);
    let chi = chromatic_number(g, caps)?.integer();
    let mut report = Report::new("scan", 0)
        .param("graph", &name)
        .param("k", format!("{}..{}", k_range.start(), k_range.end()))
        .param("t", format!("{}..{}", t_range.start(), t_range.end()))
        .param("chi", chi);
    for k in k_range {
        for t in t_range.clone() {
            let instance = format!("{name}/k{k}/t{t}");
            let ratio = Rational::new(2 * k as i64 + 1, 2 * t as i64 + 1);
            let value = subdivide(g, 2 * t)
                .and_then(|s| power(&s, 2 * k + 1))
                .and_then(|p| {
                    if p.has_loops() {
                        Err(Error::Loops("power has loops".into()))
                    } else {
                        chromatic_number(&p, caps)
                    }
                });
            report.push(match value {
                Ok(r) => {
                    let v = r.integer();
                    Case::new(
                        instance,
                        "-",
                        format!(
                            "chi={v} ratio={}/{} equals_chi={}",
                            2 * k + 1,
                            2 * t + 1,
                            yes(v == chi)
                        ),
                        Verdict::Pass,
                    )
                    .witness(format!("ratio_value={ratio}"))
                }
                Err(e @ (Error::CapExceeded { .. } | Error::Loops(_))) => {
                    Case::new(instance, "-", e.to_string(), Verdict::Indeterminate)
                }
                Err(e) => return Err(e),
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, hypercube};

    fn observed<'a>(r: &'a Report, suffix: &str) -> &'a str {
        &r.cases()
            .iter()
            .find(|c| c.instance.ends_with(suffix))
            .unwrap()
            .observed
    }

    #[test]
    fn pentagon_examples() {
        let caps = Caps::default();
        let k4 = pentagon_probe(&complete(4).unwrap(), &caps).unwrap();
        assert_eq!(observed(&k4, "/hom_C5"), "no");
        assert!(observed(&k4, "/girth").starts_with("girth=3"));
        let q3 = pentagon_probe(&hypercube(3), &caps).unwrap();
        assert_eq!(observed(&q3, "/hom_C5"), "yes");
        assert_eq!(q3.verdict(), Verdict::Pass);
    }

    #[test]
    fn scan_examples() {
        let caps = Caps::default();
        let r = subdivision_power_scan(&complete(3).unwrap(), 1..=1, 1..=1, &caps).unwrap();
        assert_eq!(r.cases()[0].observed, "chi=3 ratio=3/3 equals_chi=yes");
        let r = subdivision_power_scan(&cycle(5).unwrap(), 2..=2, 1..=1, &caps).unwrap();
        assert_eq!(r.cases()[0].observed, "chi=3 ratio=5/3 equals_chi=yes");
        // S_2(K_3) is C_9, whose 9th power has loops
        let r = subdivision_power_scan(&complete(3).unwrap(), 4..=4, 1..=1, &caps).unwrap();
        assert_eq!(r.verdict(), Verdict::Indeterminate);
    }
}
