//! Verification suites. Each one recomputes both sides of a statement independently, checks
//! that they agree, and validates every certificate passed between them.

use std::collections::{BTreeMap, BTreeSet};

use super::config::{Config, GnpConfig, HelicalSuite};
use super::corpus::{generate_corpus, CorpusSpec, Generator};
use super::report::{map_token, Case, Report, Verdict};
use crate::caps::Caps;
use crate::chromatics::{
    chromatic_number, circular_chromatic, decide_coloring, ColoringOutcome, Rational,
};
use crate::error::{Error, Result};
use crate::families::{
    helical_order, schrijver, schrijver_helical, stable_helical, while_reduce, Family, HelicalKind,
};
use crate::graph::{power, subdivide, walk_neighborhood, Graph, Label};
use crate::hom::{
    decide_homomorphism, is_homomorphism, power_lift_check, schrijver_power_coloring,
    HelicalTransfer, OddCycleTransfer, VertexMap,
};

pub const SUITES: [&str; 9] = [
    "homb",
    "shomb",
    "chrom",
    "chrom-coloring",
    "ocy",
    "m2",
    "dist",
    "while-sh",
    "cirhel-partial",
];

/// `key=value` settings given on the command line.
pub type Params = BTreeMap<String, String>;

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub params: Params,
}

impl RunOptions {
    /// Reads `key=value` words.
    pub fn with_params<'a>(mut self, words: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| Error::param(format!("parameter `{w}` is not key=value")))?;
            self.params.insert(k.to_string(), v.to_string());
        }
        Ok(self)
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.params.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::param(format!(
                "unknown parameter `{k}`; expected one of {allowed:?}"
            ))),
            None => Ok(()),
        }
    }

    fn number(&self, key: &str) -> Result<Option<usize>> {
        self.params
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::param(format!("parameter {key}={v} is not a number")))
            })
            .transpose()
    }
}

/// Runs `suite`. Instance-level cap overruns become indeterminate cases; other instance errors
/// become failures.
pub fn verify(suite: &str, opts: &RunOptions, config: &Config, caps: &Caps) -> Result<Report> {
    let seed = opts.seed.unwrap_or(config.seed);
    match suite {
        "homb" => helical_suite("homb", HelicalKind::Full, &config.homb, opts, seed),
        "shomb" => helical_suite("shomb", HelicalKind::Schrijver, &config.shomb, opts, seed),
        "chrom" => chrom_suite(config, opts, seed, caps),
        "chrom-coloring" => chrom_coloring_suite(config, opts, seed, caps),
        "ocy" => ocy_suite(config, opts, seed),
        "m2" => m2_suite(config, opts, seed),
        "dist" => dist_suite(config, opts, seed),
        "while-sh" => while_suite(config, opts, seed),
        "cirhel-partial" => cirhel_suite(config, opts, seed, caps),
        other => Err(Error::param(format!(
            "unknown suite `{other}`; known: {}",
            SUITES.join(", ")
        ))),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Edge list `order:u-v,...`, enough to rebuild an unlabelled instance.
pub fn graph_token(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{}:{}", g.order(), edges.join(","))
}

/// Evaluates one case; cap overruns are indeterminate, other errors fail.
fn guarded(instance: &str, expected: &str, run: impl FnOnce() -> Result<Case>) -> Case {
    match run() {
        Ok(c) => c,
        Err(e @ Error::CapExceeded { .. }) => {
            Case::new(instance, expected, e.to_string(), Verdict::Indeterminate)
        }
        Err(e) => Case::new(instance, expected, format!("error: {e}"), Verdict::Fail),
    }
}

/// Separate stream per corpus so that corpora for different `k` are independent.
fn corpus_seed(seed: u64, tag: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(tag)
}

fn gnp_corpus(
    cfg: &GnpConfig,
    trials: Option<usize>,
    odd_girth: usize,
    seed: u64,
    tag: u64,
) -> Result<Vec<Graph>> {
    generate_corpus(&CorpusSpec::gnp(
        trials.unwrap_or(cfg.trials),
        cfg.min_order,
        cfg.max_order,
        cfg.edge_probability,
        odd_girth,
        corpus_seed(seed, tag),
    ))
}

/// The seeded random graphs, named `g<i>`, followed by the sweep families meeting the odd
/// girth floor, named by descriptor.
fn suite_corpus(
    cfg: &GnpConfig,
    sweep: &[String],
    trials: Option<usize>,
    odd_girth: usize,
    seed: u64,
    tag: u64,
) -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> = gnp_corpus(cfg, trials, odd_girth, seed, tag)?
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("g{i}"), g))
        .collect();
    let families = sweep
        .iter()
        .map(|d| d.parse::<Family>())
        .collect::<Result<Vec<_>>>()?;
    let spec = CorpusSpec {
        generator: Generator::FamilySweep(families.clone()),
        count: families.len(),
        min_order: 0,
        max_order: usize::MAX,
        odd_girth,
        seed,
    };
    for g in generate_corpus(&spec)? {
        out.push((g.name().unwrap_or("family").to_string(), g));
    }
    Ok(out)
}

fn corpus_params(report: Report, cfg: &GnpConfig, trials: Option<usize>) -> Report {
    report
        .param("trials", trials.unwrap_or(cfg.trials))
        .param("orders", format!("{}..{}", cfg.min_order, cfg.max_order))
        .param("p", cfg.edge_probability)
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn helical_suite(
    name: &str,
    kind: HelicalKind,
    cfg: &HelicalSuite,
    opts: &RunOptions,
    seed: u64,
) -> Result<Report> {
    opts.check_keys(&["k", "m", "n"])?;
    let ks: Vec<usize> = match opts.number("k")? {
        Some(k) => vec![k],
        None => cfg.k.clone(),
    };
    let (m, n) = (opts.number("m")?, opts.number("n")?);
    let pairs: Vec<(usize, usize)> = match (m, n) {
        (Some(m), Some(n)) => vec![(m, n)],
        _ => cfg
            .pairs
            .iter()
            .copied()
            .filter(|&(a, b)| m.is_none_or(|m| m == a) && n.is_none_or(|n| n == b))
            .collect(),
    };
    if ks.iter().any(|&k| k < 1) || pairs.is_empty() {
        return Err(Error::param("need k >= 1 and at least one (m,n) pair"));
    }
    let mut report = corpus_params(Report::new(name, seed), &cfg.corpus, opts.trials)
        .param("sweep", cfg.sweep.join(","))
        .param("k", list(&ks))
        .param(
            "pairs",
            pairs
                .iter()
                .map(|(m, n)| format!("{m}/{n}"))
                .collect::<Vec<_>>()
                .join(","),
        );
    let base = if kind == HelicalKind::Full {
        "KG"
    } else {
        "SG"
    };
    for &k in &ks {
        let corpus = suite_corpus(
            &cfg.corpus,
            &cfg.sweep,
            opts.trials,
            2 * k + 1,
            seed,
            k as u64,
        )?;
        for &(m, n) in &pairs {
            let transfer = HelicalTransfer::new(kind, m, n, k)?;
            for (id, g) in &corpus {
                let instance = format!("k{k}/{base}:{m},{n}/{id}");
                report.push(guarded(&instance, "equivalent", || {
                    helical_case(&instance, &transfer, g)
                }));
            }
        }
    }
    Ok(report)
}

fn helical_case(instance: &str, transfer: &HelicalTransfer, g: &Graph) -> Result<Case> {
    let lifted = power(g, transfer.power_exponent())?;
    // Kneser graphs are vertex-transitive, Schrijver graphs in general are not
    let transitive = transfer.kind() == HelicalKind::Full;
    let left = decide_homomorphism(&lifted, transfer.base(), transitive)?.witness;
    let right = decide_homomorphism(g, transfer.helical(), false)?.witness;
    let mut problems = Vec::new();
    let mut witness = String::from("-");
    if let Some(c) = &left {
        match transfer.encode(g, c) {
            Ok(f) => witness = format!("f={}", map_token(f.as_slice())),
            Err(e) => problems.push(format!("encode: {e}")),
        }
    }
    if let Some(f) = &right {
        if let Err(e) = transfer.decode(g, f) {
            problems.push(format!("decode: {e}"));
        }
    }
    if left.is_some() != right.is_some() {
        problems.push("sides disagree".into());
    }
    let mut observed = format!(
        "power={} helical={}",
        yes(left.is_some()),
        yes(right.is_some())
    );
    for p in &problems {
        observed.push_str("; ");
        observed.push_str(p);
    }
    let ok = problems.is_empty();
    if !ok {
        witness = format!("graph={}", graph_token(g));
    }
    Ok(Case::new(instance, "equivalent", observed, Verdict::from_bool(ok)).witness(witness))
}

fn ocy_suite(config: &Config, opts: &RunOptions, seed: u64) -> Result<Report> {
    opts.check_keys(&["k"])?;
    let cfg = &config.ocy;
    let ks: Vec<usize> = match opts.number("k")? {
        Some(k) => vec![k],
        None => cfg.k.clone(),
    };
    let mut report = corpus_params(Report::new("ocy", seed), &cfg.corpus, opts.trials)
        .param("sweep", cfg.sweep.join(","))
        .param("k", list(&ks));
    for &k in &ks {
        let transfer = OddCycleTransfer::shared(k)?;
        let corpus = suite_corpus(
            &cfg.corpus,
            &cfg.sweep,
            opts.trials,
            2 * k + 1,
            seed,
            100 + k as u64,
        )?;
        for (id, g) in &corpus {
            let instance = format!("k{k}/{id}");
            report.push(guarded(&instance, "equivalent", || {
                ocy_case(&instance, &transfer, k, g)
            }));
        }
    }
    Ok(report)
}

fn ocy_case(instance: &str, transfer: &OddCycleTransfer, k: usize, g: &Graph) -> Result<Case> {
    let hom = decide_homomorphism(g, transfer.target(), true)?.witness;
    let s = power(&subdivide(g, 2)?, 2 * k + 1)?;
    let col = decide_coloring(&s, 3, false)?.outcome.coloring().cloned();
    let k3 = crate::families::complete(3)?;
    let mut problems = Vec::new();
    if let Some(h) = &hom {
        match transfer.forward(g, h) {
            Ok(c) if is_homomorphism(&s, &k3, &c) => {}
            Ok(_) => problems.push("forward colouring improper".to_string()),
            Err(e) => problems.push(format!("forward: {e}")),
        }
    }
    let mut witness = "-".to_string();
    if let Some(c) = &col {
        match transfer.backward(g, c) {
            Ok(h) if is_homomorphism(g, transfer.target(), &h) => {
                witness = format!("h={}", map_token(h.as_slice()))
            }
            Ok(_) => problems.push("backward map invalid".to_string()),
            Err(e) => problems.push(format!("backward: {e}")),
        }
    }
    if hom.is_some() != col.is_some() {
        problems.push("sides disagree".into());
    }
    let mut observed = format!(
        "hom_cycle={} chi_le_3={}",
        yes(hom.is_some()),
        yes(col.is_some())
    );
    for p in &problems {
        observed.push_str("; ");
        observed.push_str(p);
    }
    let ok = problems.is_empty();
    if !ok {
        witness = format!("graph={}", graph_token(g));
    }
    Ok(Case::new(instance, "equivalent", observed, Verdict::from_bool(ok)).witness(witness))
}

fn m2_suite(config: &Config, opts: &RunOptions, seed: u64) -> Result<Report> {
    opts.check_keys(&["target"])?;
    let cfg = &config.m2;
    let targets: Vec<String> = match opts.params.get("target") {
        Some(t) => vec![t.clone()],
        None => cfg.targets.clone(),
    };
    let mut report = corpus_params(Report::new("m2", seed), &cfg.corpus, opts.trials)
        .param("powers", list(&cfg.powers))
        .param("targets", targets.join(","));
    let corpus = gnp_corpus(&cfg.corpus, opts.trials, 0, seed, 200)?;
    let expected = format!("lift_k={}", list(&cfg.powers));
    for desc in &targets {
        let h = desc.parse::<Family>()?.build()?;
        for (i, g) in corpus.iter().enumerate() {
            let instance = format!("{desc}/g{i}");
            report.push(guarded(&instance, &expected, || {
                let Some(f) = decide_homomorphism(g, &h, false)?.witness else {
                    return Ok(Case::new(
                        &instance,
                        &expected,
                        "no_homomorphism",
                        Verdict::Pass,
                    ));
                };
                let mut failed = Vec::new();
                for &k in &cfg.powers {
                    if !power_lift_check(g, &h, &f, k)? {
                        failed.push(k);
                    }
                }
                let ok = failed.is_empty();
                let observed = if ok {
                    expected.clone()
                } else {
                    format!("lift_fails_k={}", list(&failed))
                };
                let witness = if ok {
                    format!("f={}", map_token(f.as_slice()))
                } else {
                    format!("graph={} f={}", graph_token(g), map_token(f.as_slice()))
                };
                Ok(
                    Case::new(&instance, &expected, observed, Verdict::from_bool(ok))
                        .witness(witness),
                )
            }));
        }
    }
    Ok(report)
}

/// `(m, n)` of the families whose chromatic number is `m - 2n + 2`.
fn kneser_type(f: Family) -> Option<(usize, usize)> {
    match f {
        Family::Kneser(m, n) | Family::Schrijver(m, n) | Family::Helical(_, m, n, _) => {
            Some((m, n))
        }
        _ => None,
    }
}

fn instance_list(opts: &RunOptions, defaults: &[String]) -> Result<Vec<Family>> {
    let descs: Vec<String> = match opts.params.get("instance") {
        Some(d) => d.split(';').map(str::to_string).collect(),
        None => defaults.to_vec(),
    };
    descs.iter().map(|d| d.parse::<Family>()).collect()
}

fn chrom_suite(config: &Config, opts: &RunOptions, seed: u64, caps: &Caps) -> Result<Report> {
    opts.check_keys(&["instance"])?;
    let families = instance_list(opts, &config.chrom.instances)?;
    let mut report = Report::new("chrom", seed).param("instances", list(&families));
    for f in families {
        let (m, n) =
            kneser_type(f).ok_or_else(|| Error::param(format!("{f} has no (m,n) parameters")))?;
        let expected = m + 2 - 2 * n;
        let instance = f.to_string();
        let exp = format!("chi={expected}");
        report.push(guarded(&instance, &exp, || {
            let g = f.build()?;
            let r = chromatic_number(&g, caps)?;
            let chi = r.integer();
            let below = format!("no proper {}-colouring", chi.saturating_sub(1));
            // the lower bound must come from an exhaustive refutation, not a clique
            let refutation = match r.refutations.iter().find(|x| x.claim == below) {
                Some(x) => x.method,
                None if chi >= 2 => match decide_coloring(&g, chi - 1, true)? {
                    d if matches!(d.outcome, ColoringOutcome::Refuted { .. }) => d.method,
                    _ => "none",
                },
                None => "none",
            };
            let ok = chi == expected && r.exact && refutation != "none";
            let observed = format!(
                "chi={chi} refuted_{}_by={refutation}",
                chi.saturating_sub(1)
            );
            let witness = r
                .map()
                .map_or("-".into(), |c| format!("c={}", map_token(c.as_slice())));
            Ok(Case::new(&instance, &exp, observed, Verdict::from_bool(ok)).witness(witness))
        }));
    }
    Ok(report)
}

fn triple(opts: &RunOptions, keys: [&str; 3]) -> Result<Option<(usize, usize, usize)>> {
    match (
        opts.number(keys[0])?,
        opts.number(keys[1])?,
        opts.number(keys[2])?,
    ) {
        (Some(a), Some(b), Some(c)) => Ok(Some((a, b, c))),
        (None, None, None) => Ok(None),
        _ => Err(Error::param(format!("give all of {keys:?} or none"))),
    }
}

fn chrom_coloring_suite(
    config: &Config,
    opts: &RunOptions,
    seed: u64,
    caps: &Caps,
) -> Result<Report> {
    opts.check_keys(&["m", "n", "k"])?;
    let instances = match triple(opts, ["m", "n", "k"])? {
        Some(t) => vec![t],
        None => config.chrom_coloring.instances.clone(),
    };
    let mut report = Report::new("chrom-coloring", seed).param(
        "instances",
        instances
            .iter()
            .map(|(m, n, k)| format!("{m}/{n}/{k}"))
            .collect::<Vec<_>>()
            .join(","),
    );
    for (m, n, k) in instances {
        let spread = if m >= 2 * n {
            k.saturating_sub(1) * m * (m + 2 - 2 * n)
        } else {
            0
        };
        let (a, b) = (2 * spread + m, spread + n);
        let instance = format!("SG:{a},{b}->SG:{m},{n}/k{k}");
        let expected = format!("order={} valid", schrijver_order(a, b));
        report.push(guarded(&instance, &expected, || {
            let pc = schrijver_power_coloring(m, n, k, caps.power_coloring)?;
            let valid = pc.validate();
            let observed = format!(
                "order={} {}",
                pc.source.order(),
                match valid {
                    Ok(()) => "valid".to_string(),
                    Err(e) => format!("invalid: {e}"),
                }
            );
            let ok = observed == expected;
            Ok(
                Case::new(&instance, &expected, observed, Verdict::from_bool(ok))
                    .witness(format!("c={}", map_token(pc.coloring.as_slice()))),
            )
        }));
    }
    Ok(report)
}

/// `|V(SG(a,b))| = a/(a-b) * C(a-b, b)`, by the closed form rather than enumeration.
fn schrijver_order(a: usize, b: usize) -> u128 {
    crate::families::sets::stable_subset_count(a, b)
}

fn dist_suite(config: &Config, opts: &RunOptions, seed: u64) -> Result<Report> {
    opts.check_keys(&["a", "b", "s"])?;
    let cfg = &config.dist;
    let instances = match (opts.number("a")?, opts.number("b")?) {
        (Some(a), Some(b)) => vec![(a, b)],
        (None, None) => cfg.instances.clone(),
        _ => return Err(Error::param("give both a and b or neither")),
    };
    let max_s = opts.number("s")?.unwrap_or(cfg.max_s);
    let mut report = Report::new("dist", seed)
        .param(
            "instances",
            instances
                .iter()
                .map(|(a, b)| format!("{a}/{b}"))
                .collect::<Vec<_>>()
                .join(","),
        )
        .param("max_s", max_s);
    for (a, b) in instances {
        for s in 1..=max_s {
            let instance = format!("SG:{a},{b}/s{s}");
            let bound = s * (a + 2 - 2 * b);
            let expected = format!("max_diff<={bound}");
            report.push(guarded(&instance, &expected, || {
                let g = schrijver(a, b)?;
                let set = |v: usize| {
                    g.label(v)
                        .and_then(Label::tuple)
                        .map(|t| t[0])
                        .expect("schrijver labels")
                };
                let (mut pairs, mut worst, mut violation) = (0usize, 0usize, None);
                for u in 0..g.order() {
                    for v in walk_neighborhood(&g, u, 2 * s).iter() {
                        pairs += 1;
                        let d = set(u).difference(set(v)).len();
                        worst = worst.max(d);
                        if d > bound && violation.is_none() {
                            violation = Some((u, v));
                        }
                    }
                }
                let observed = format!("max_diff={worst} pairs={pairs}");
                let case = Case::new(
                    &instance,
                    &expected,
                    observed,
                    Verdict::from_bool(violation.is_none()),
                );
                Ok(match violation {
                    Some((u, v)) => case.witness(format!("{}~{}", set(u), set(v))),
                    None => case,
                })
            }));
        }
    }
    Ok(report)
}

/// The `(m, n, k)` with `m <= max_m`, `k <= max_k` and `|V(SG(m,n,k))| <= max_order`.
pub fn while_sweep(
    max_m: usize,
    max_k: usize,
    max_order: usize,
) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        for n in 1..=m / 2 {
            for k in 1..=max_k {
                if helical_order(HelicalKind::Schrijver, m, n, k, max_order)?.is_some() {
                    out.push((m, n, k));
                }
            }
        }
    }
    Ok(out)
}

fn while_suite(config: &Config, opts: &RunOptions, seed: u64) -> Result<Report> {
    opts.check_keys(&["m", "n", "k"])?;
    let cfg = &config.while_sh;
    let instances: BTreeSet<(usize, usize, usize)> = match triple(opts, ["m", "n", "k"])? {
        Some(t) => [t].into(),
        None => {
            let mut all: BTreeSet<_> = while_sweep(cfg.max_m, cfg.max_k, cfg.max_order)?
                .into_iter()
                .collect();
            all.extend(cfg.extra.iter().copied());
            all
        }
    };
    let mut report = Report::new("while-sh", seed)
        .param("max_m", cfg.max_m)
        .param("max_k", cfg.max_k)
        .param("max_order", cfg.max_order)
        .param("instances", instances.len());
    for (m, n, k) in instances {
        let instance = format!("SGk:{m},{n},{k}");
        report.push(guarded(&instance, "survivors=SH hom_equivalent", || {
            while_case(&instance, m, n, k)
        }));
        if (m, n, k) == (7, 2, 2) {
            let step = "({1,3},{4,5,6,7}) via ({1,3},{2,4,5,6,7})";
            let instance = format!("{instance}/trace");
            report.push(guarded(&instance, step, || {
                let g = schrijver_helical(7, 2, 2)?;
                let (_, trace) = while_reduce(&g);
                let label = |s: &str| -> Result<usize> {
                    g.vertex_of(&s.parse()?)
                        .ok_or_else(|| Error::Invariant(format!("{s} missing from SG(7,2,2)")))
                };
                let (u, v) = (label("({1,3},{4,5,6,7})")?, label("({1,3},{2,4,5,6,7})")?);
                let found = trace.removed.iter().position(|&r| r == (u, v));
                let observed = match found {
                    Some(i) => format!("step {} of {}", i + 1, trace.removed.len()),
                    None => "absent".into(),
                };
                Ok(Case::new(
                    &instance,
                    step,
                    observed,
                    Verdict::from_bool(found.is_some()),
                ))
            }));
        }
    }
    Ok(report)
}

fn while_case(instance: &str, m: usize, n: usize, k: usize) -> Result<Case> {
    let expected = "survivors=SH hom_equivalent";
    let g = schrijver_helical(m, n, k)?;
    let sh = stable_helical(m, n, k)?;
    let (reduced, trace) = while_reduce(&g);
    let survivors: BTreeSet<&Label> = reduced.labels().unwrap_or_default().iter().collect();
    let stable: BTreeSet<&Label> = sh.labels().unwrap_or_default().iter().collect();
    let same_vertices = survivors == stable;
    // the retraction lands in the survivors; inclusion is the map back
    let retraction_ok = trace
        .retraction
        .as_slice()
        .iter()
        .all(|&x| trace.survivors.binary_search(&x).is_ok())
        && is_homomorphism(&g, &g, &trace.retraction);
    let inclusion: VertexMap = trace.survivors.iter().copied().collect();
    let inclusion_ok = is_homomorphism(&reduced, &g, &inclusion);
    let ok = same_vertices && retraction_ok && inclusion_ok;
    let observed = format!(
        "order={} removed={} survivors={} sh={} {} retraction={} inclusion={}",
        g.order(),
        trace.removed.len(),
        reduced.order(),
        sh.order(),
        if same_vertices {
            "survivors=SH"
        } else {
            "survivors!=SH"
        },
        yes(retraction_ok),
        yes(inclusion_ok)
    );
    Ok(Case::new(
        instance,
        expected,
        observed,
        Verdict::from_bool(ok),
    ))
}

/// Largest `p/q < chi` with `q <= qcap`.
fn best_ratio_below(chi: usize, qcap: usize) -> Rational {
    (1..=qcap)
        .map(|q| Rational::new((chi * q - 1) as i64, q as i64))
        .max()
        .unwrap_or_else(|| Rational::from_integer(chi as i64 - 1))
}

fn cirhel_suite(config: &Config, opts: &RunOptions, seed: u64, caps: &Caps) -> Result<Report> {
    opts.check_keys(&["instance", "qcap"])?;
    let cfg = &config.cirhel_partial;
    let families = instance_list(opts, &cfg.instances)?;
    let qcap = opts.number("qcap")?.unwrap_or(cfg.qcap);
    let mut report = Report::new("cirhel-partial", seed)
        .param("instances", list(&families))
        .param("qcap", qcap);
    for f in families {
        let (m, n) =
            kneser_type(f).ok_or_else(|| Error::param(format!("{f} has no (m,n) parameters")))?;
        if m % 2 == 1 {
            return Err(Error::param(format!(
                "{f}: the circular claim needs an even m"
            )));
        }
        let chi = m + 2 - 2 * n;
        let instance = f.to_string();
        let expected = format!("{} < x <= {chi}", best_ratio_below(chi, qcap));
        report.push(guarded(&instance, &expected, || {
            let g = f.build()?;
            let r = circular_chromatic(&g, qcap, caps)?;
            let bound = best_ratio_below(chi, qcap.min(g.order()));
            let upper_ok = r.upper == Rational::from_integer(chi as i64);
            let lower_ok = if r.exact {
                r.value == r.upper
            } else {
                r.lower.value >= bound && r.lower.strict
            };
            let observed = r.to_string();
            Ok(Case::new(
                &instance,
                &expected,
                observed,
                Verdict::from_bool(upper_ok && lower_ok),
            ))
        }));
    }
    Ok(report)
}
