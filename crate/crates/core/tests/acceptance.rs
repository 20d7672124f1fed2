//! One test per acceptance criterion. Each prints a `criterion N ...: pass|fail` line with
//! details (`--nocapture` shows them for passing runs).

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use helix::chromatics::{
    chromatic_number, circular_chromatic, fractional_chromatic, local_chromatic, rational, Rational,
};
use helix::families::{
    complete, cycle, helical, hypercube, kneser, petersen, schrijver, schrijver_helical,
    stable_helical, Family,
};
use helix::graph::{is_isomorphic, power, subdivide, walk_neighborhood, Label, DEFAULT_ISO_CAP};
use helix::harness::{pentagon_probe, verify, Config, Report, RunOptions, Verdict};
use helix::hom::{
    find_homomorphism, is_homomorphism, schrijver_power_coloring, HomOutcome, Mode,
    DEFAULT_POWER_COLORING_CAP,
};
use helix::{Caps, Graph, Result, VertexMap};

type Outcome = Result<(bool, String)>;

fn criterion(n: usize, title: &str, check: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let (ok, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
    let verdict = if ok { "pass" } else { "fail" };
    let line = format!(
        "criterion {n:>2} {title}: {verdict} ({detail}; {:.1}s)",
        start.elapsed().as_secs_f64()
    );
    println!("{line}");
    assert!(ok, "{line}");
}

fn build(desc: &str) -> Result<Graph> {
    desc.parse::<Family>()?.build()
}

fn suite(name: &str) -> Result<Report> {
    verify(
        name,
        &RunOptions::default(),
        &Config::defaults(),
        &Caps::default(),
    )
}

fn suite_ok(name: &str, min_cases: usize) -> Outcome {
    let r = suite(name)?;
    let ok = r.verdict() == Verdict::Pass && r.cases().len() >= min_cases;
    let mut detail = format!("{name}: {} cases {}", r.cases().len(), r.verdict());
    if let Some(c) = r.failures().next() {
        detail.push_str(&format!(
            ", first failure {} observed {}",
            c.instance, c.observed
        ));
    }
    Ok((ok, detail))
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for p in parts {
        let (b, d) = p?;
        ok &= b;
        details.push(d);
    }
    Ok((ok, details.join("; ")))
}

fn isomorphisms() -> Outcome {
    let mut bad = Vec::new();
    let iso = |g: &Graph, h: &Graph| is_isomorphic(g, h, DEFAULT_ISO_CAP);
    for m in 3..=6 {
        if !iso(&helical(m, 1, 1)?, &complete(m)?)? {
            bad.push(format!("H({m},1,1)"));
        }
    }
    if !iso(&helical(5, 2, 1)?, &kneser(5, 2)?)? {
        bad.push("H(5,2,1)".into());
    }
    if !iso(&helical(3, 1, 2)?, &cycle(9)?)? {
        bad.push("H(3,1,2)".into());
    }
    for n in 2..=4 {
        if !iso(&schrijver(2 * n + 1, n)?, &cycle(2 * n + 1)?)? {
            bad.push(format!("SG({},{n})", 2 * n + 1));
        }
    }
    Ok((
        bad.is_empty(),
        format!("9 isomorphisms, mismatches: {bad:?}"),
    ))
}

fn chromatic_values() -> Outcome {
    let caps = Caps::default();
    let mut bad = Vec::new();
    let cases = [
        ("KG:5,2", 3),
        ("SG:7,3", 3),
        ("H:4,1,2", 4),
        ("H:5,1,2", 5),
        ("H:6,2,2", 4),
        ("H:4,1,3", 4),
        ("SH:6,2,2", 4),
    ];
    for (desc, want) in cases {
        let g = build(desc)?;
        let r = chromatic_number(&g, &caps)?;
        let chi = r.integer();
        let refuted = r
            .refutations
            .iter()
            .any(|x| x.claim == format!("no proper {}-colouring", want - 1));
        let palette = complete(want)?;
        let coloured = r.map().is_some_and(|c| is_homomorphism(&g, &palette, c));
        if chi != want || !refuted || !coloured || !r.exact {
            bad.push(format!(
                "{desc}: chi={chi} refuted={refuted} coloured={coloured}"
            ));
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} instances, mismatches: {bad:?}", cases.len()),
    ))
}

fn block_coloring() -> Outcome {
    let pc = schrijver_power_coloring(4, 1, 2, DEFAULT_POWER_COLORING_CAP)?;
    let order = pc.source.order();
    let cube = power(&pc.source, 3)?;
    let k4 = is_isomorphic(&pc.target, &complete(4)?, DEFAULT_ISO_CAP)?;
    let hom = is_homomorphism(&cube, &pc.target, &pc.coloring);
    pc.validate()?;
    Ok((
        (pc.a, pc.b, order) == (36, 17, 324) && k4 && hom,
        format!(
            "SG({},{}) order {order}, target K4 {k4}, cube hom {hom}",
            pc.a, pc.b
        ),
    ))
}

fn odd_cycle_suite() -> Outcome {
    let caps = Caps::default();
    let s = power(&subdivide(&complete(3)?, 2)?, 3)?;
    let chi = chromatic_number(&s, &caps)?.integer();
    let probe = pentagon_probe(&petersen(), &caps)?;
    let seen = |suffix: &str| {
        probe
            .cases()
            .iter()
            .find(|c| c.instance.ends_with(suffix))
            .map(|c| c.observed.clone())
            .unwrap_or_default()
    };
    let (to_c5, three) = (seen("/hom_C5"), seen("/chi_S2_pow5_le_3"));
    let petersen_ok = to_c5 == "no" && three == "no" && probe.verdict() == Verdict::Pass;
    all(vec![
        suite_ok("ocy", 200),
        Ok((chi == 3, format!("chi(S2(K3)^(3))={chi}"))),
        Ok((
            petersen_ok,
            format!("Petersen hom_C5={to_c5} chi_le_3={three}"),
        )),
    ])
}

fn labels(g: &Graph) -> BTreeSet<Label> {
    g.labels().unwrap_or_default().iter().cloned().collect()
}

fn while_loop() -> Outcome {
    let g = schrijver_helical(7, 2, 2)?;
    let (reduced, trace) = helix::families::while_reduce(&g);
    let vertex = |s: &str| -> Result<usize> {
        g.vertex_of(&s.parse()?)
            .ok_or_else(|| helix::Error::Invariant(format!("{s} is not a vertex")))
    };
    let pair = (vertex("({1,3},{4,5,6,7})")?, vertex("({1,3},{2,4,5,6,7})")?);
    let traced = trace.removed.contains(&pair);
    let same = labels(&reduced) == labels(&stable_helical(7, 2, 2)?);
    // both directions by certificate: the retraction onto the survivors and the inclusion
    let position = |x: usize| trace.survivors.binary_search(&x).ok();
    let onto: Option<VertexMap> = trace
        .retraction
        .as_slice()
        .iter()
        .map(|&x| position(x))
        .collect();
    let inclusion: VertexMap = trace.survivors.iter().copied().collect();
    let equivalent = onto.is_some_and(|f| is_homomorphism(&g, &reduced, &f))
        && is_homomorphism(&reduced, &g, &inclusion);
    all(vec![
        Ok((
            traced && same && equivalent,
            format!(
                "SG(7,2,2): {} -> {} vertices, pair traced {traced}, equals SH {same}, hom-equivalent {equivalent}",
                g.order(),
                reduced.order()
            ),
        )),
        suite_ok("while-sh", 50),
    ])
}

fn circular() -> Outcome {
    let caps = Caps::default();
    let mut bad = Vec::new();
    let h = circular_chromatic(&helical(3, 1, 2)?, 9, &caps)?;
    if !(h.exact && h.value == rational(9, 4)) {
        bad.push(format!("H(3,1,2): {h}"));
    }
    for r in 1..=5 {
        let c = cycle(2 * r + 1)?;
        let v = circular_chromatic(&c, c.order(), &caps)?;
        if !(v.exact && v.value == rational(2 * r as i64 + 1, r as i64)) {
            bad.push(format!("C{}: {v}", 2 * r + 1));
        }
    }
    let sh = stable_helical(6, 2, 2)?;
    let chi = chromatic_number(&sh, &caps)?.integer();
    let partial = circular_chromatic(&sh, 3, &caps)?;
    // every p/q < 4 with q <= 3 is at most 11/3
    let refuted_below_4 = partial.lower.strict && partial.lower.value >= rational(11, 3);
    if !(chi == 4 && refuted_below_4 && partial.upper == rational(4, 1)) {
        bad.push(format!("SH(6,2,2): chi={chi} chi_c in {partial}"));
    }
    Ok((
        bad.is_empty(),
        format!("SH(6,2,2) chi_c {partial}, mismatches: {bad:?}"),
    ))
}

fn distances() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0usize;
    for (a, b) in [(7, 3), (8, 3), (9, 4)] {
        let g = schrijver(a, b)?;
        let set = |v: usize| match g.label(v) {
            Some(Label::Tuple(t)) => t[0],
            _ => panic!("Schrijver vertices carry set labels"),
        };
        for s in 1..=3 {
            for u in 0..g.order() {
                for v in walk_neighborhood(&g, u, 2 * s).iter() {
                    pairs += 1;
                    if set(u).difference(set(v)).len() > s * (a + 2 - 2 * b) {
                        bad.push(format!("SG({a},{b}) s={s} {u}->{v}"));
                    }
                }
            }
        }
    }
    all(vec![
        Ok((
            bad.is_empty(),
            format!("{pairs} walk pairs, violations: {bad:?}"),
        )),
        suite_ok("dist", 9),
    ])
}

fn bounds() -> Outcome {
    let caps = Caps::default();
    let instances: Vec<(&str, Graph)> = vec![
        ("C5", cycle(5)?),
        ("C7", cycle(7)?),
        ("C9", cycle(9)?),
        ("K4", complete(4)?),
        ("Petersen", petersen()),
        ("Q3", hypercube(3)),
        ("H(3,1,2)", helical(3, 1, 2)?),
        ("SG(7,3)", schrijver(7, 3)?),
        ("SG(8,3)", schrijver(8, 3)?),
        ("C5^(3)", power(&cycle(5)?, 3)?),
        ("S2(K3)^(3)", power(&subdivide(&complete(3)?, 2)?, 3)?),
    ];
    let mut bad = Vec::new();
    for (name, g) in &instances {
        let chi = Rational::from_integer(chromatic_number(g, &caps)?.integer() as i64);
        let frac = fractional_chromatic(g, &caps)?.value;
        let psi = local_chromatic(g, &caps)?.value;
        let circ = circular_chromatic(g, g.order(), &caps)?.value;
        let one = Rational::from_integer(1);
        if !(frac <= psi && psi <= chi && chi - one < circ && circ <= chi) {
            bad.push(format!(
                "{name}: chi_f={frac} psi={psi} chi_c={circ} chi={chi}"
            ));
        }
    }
    let c9 = cycle(9)?;
    let (f9, c9c, p9) = (
        fractional_chromatic(&c9, &caps)?.value,
        circular_chromatic(&c9, 9, &caps)?.value,
        local_chromatic(&c9, &caps)?.value,
    );
    // chi_f(C9) is 9/4 by the LP, which equals its circular value
    let c9_ok = f9 == rational(9, 4) && c9c == rational(9, 4) && p9 == rational(3, 1);
    Ok((
        bad.is_empty() && c9_ok,
        format!(
            "{} instances, C9 chi_f={f9} chi_c={c9c} psi={p9}, violations: {bad:?}",
            instances.len()
        ),
    ))
}

fn random_graph(rng: &mut ChaCha8Rng, max: usize, p: f64) -> Graph {
    let n = rng.gen_range(1..=max);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every map `g -> h`, counted by odometer.
fn brute_hom_count(g: &Graph, h: &Graph) -> u64 {
    let (n, t) = (g.order(), h.order());
    let mut f = vec![0usize; n];
    let mut count = 0;
    loop {
        if g.edges().iter().all(|&(u, v)| h.has_edge(f[u], f[v])) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            f[i] += 1;
            if f[i] < t {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

fn brute_chromatic(g: &Graph) -> usize {
    (1..=g.order().max(1))
        .find(|&t| brute_hom_count(g, &complete(t).unwrap()) > 0)
        .unwrap()
}

fn brute_agreement() -> Outcome {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut bad = Vec::new();
    let (mut pairs, mut yes) = (0, 0);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 6, 0.4);
        let h = random_graph(&mut rng, 6, 0.5);
        let want = brute_hom_count(&g, &h);
        let exists = find_homomorphism(&g, &h, Mode::First).exists();
        let counted = match find_homomorphism(&g, &h, Mode::Count { limit: u64::MAX }) {
            HomOutcome::Count { count, .. } => count,
            _ => u64::MAX,
        };
        pairs += 1;
        yes += usize::from(want > 0);
        if exists != (want > 0) || counted != want {
            bad.push(format!(
                "{:?} -> {:?}: brute {want} solver {counted}",
                g.edges(),
                h.edges()
            ));
        }
    }
    let mut graphs = 0;
    for _ in 0..150 {
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, 8, p);
        graphs += 1;
        let (want, got) = (brute_chromatic(&g), chromatic_number(&g, &caps)?.integer());
        if want != got {
            bad.push(format!("chi {:?}: brute {want} solver {got}", g.edges()));
        }
    }
    Ok((
        bad.is_empty(),
        format!("{pairs} hom pairs ({yes} yes), {graphs} chromatic graphs, disagreements: {bad:?}"),
    ))
}

fn determinism() -> Outcome {
    let mut bad = Vec::new();
    for name in ["ocy", "m2", "shomb", "while-sh"] {
        if suite(name)?.to_records() != suite(name)?.to_records() {
            bad.push(name.to_string());
        }
    }
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hx"))
            .args(["verify", "homb", "--seed", "7", "--trials", "30"])
            .output()
            .map(|o| o.stdout)
    };
    let (a, b) = (
        run().map_err(|e| helix::Error::Io(e.to_string()))?,
        run().map_err(|e| helix::Error::Io(e.to_string()))?,
    );
    if a != b || a.is_empty() {
        bad.push("hx verify homb".into());
    }
    Ok((
        bad.is_empty(),
        format!("4 suites in process and one CLI run, differing: {bad:?}"),
    ))
}

#[test]
fn criterion_01_isomorphisms() {
    criterion(1, "family isomorphisms", isomorphisms);
}

#[test]
fn criterion_02_chromatic_numbers() {
    criterion(2, "chromatic numbers with refutation", chromatic_values);
}

#[test]
fn criterion_03_block_coloring() {
    criterion(3, "block colouring of SG(36,17)", block_coloring);
}

#[test]
fn criterion_04_helical_equivalences() {
    criterion(4, "helical homomorphism equivalences", || {
        all(vec![suite_ok("homb", 1000), suite_ok("shomb", 1000)])
    });
}

#[test]
fn criterion_05_odd_cycles() {
    criterion(5, "odd cycle transfer", odd_cycle_suite);
}

#[test]
fn criterion_06_reduction() {
    criterion(6, "dominated-vertex reduction", while_loop);
}

#[test]
fn criterion_07_circular() {
    criterion(7, "circular chromatic numbers", circular);
}

#[test]
fn criterion_08_walk_distance() {
    criterion(8, "walk distance bound", distances);
}

#[test]
fn criterion_09_power_lift() {
    criterion(9, "power lift", || suite_ok("m2", 100));
}

#[test]
fn criterion_10_parameter_sandwich() {
    criterion(10, "parameter sandwich", bounds);
}

#[test]
fn criterion_11_brute_force() {
    criterion(11, "solver against brute force", brute_agreement);
}

#[test]
fn criterion_12_determinism() {
    criterion(12, "deterministic reports", determinism);
}
