//! Verification reports in two renderings: a human-readable table and `key=value` records.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    /// Replayable description of the instance; also the sort key.
    pub instance: String,
    pub expected: String,
    pub observed: String,
    pub verdict: Verdict,
    /// Compact certificate, `-` when there is none.
    pub witness: String,
}

impl Case {
    pub fn new(
        instance: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        verdict: Verdict,
    ) -> Self {
        Case {
            instance: instance.into(),
            expected: expected.into(),
            observed: observed.into(),
            verdict,
            witness: "-".into(),
        }
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = w.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub seed: u64,
    cases: Vec<Case>,
}

/// Values in records may not contain whitespace.
fn token(s: &str) -> String {
    if s.is_empty() {
        return "-".into();
    }
    s.split_whitespace().collect::<Vec<_>>().join("_")
}

/// Order instance strings so that embedded numbers compare numerically (`g2 < g10`).
fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => {
                let (p, q) = (p.trim_start_matches('0'), q.trim_start_matches('0'));
                p.len().cmp(&q.len()).then_with(|| p.cmp(q))
            }
            ((_, p), (_, q)) => p.cmp(q),
        };
        if ord.is_ne() {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        Report {
            suite: suite.into(),
            parameters: BTreeMap::new(),
            seed,
            cases: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    /// Inserts `case` at its canonical position.
    pub fn push(&mut self, case: Case) {
        let at = self
            .cases
            .partition_point(|c| natural_cmp(&c.instance, &case.instance).is_le());
        self.cases.insert(at, case);
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = Case>) {
        for c in cases {
            self.push(c);
        }
    }

    pub fn cases(&self) -> &[Case] {
        &self.cases
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.cases.iter().filter(|c| c.verdict == v).count()
    }

    /// Pass iff every case passes; any failure makes the report fail.
    pub fn verdict(&self) -> Verdict {
        if self.cases.iter().any(|c| c.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if self.cases.iter().all(|c| c.verdict == Verdict::Pass) {
            Verdict::Pass
        } else {
            Verdict::Indeterminate
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    /// One `report` header record, then one `case` record per case.
    pub fn to_records(&self) -> String {
        let mut out = format!(
            "report suite={} seed={} verdict={} cases={}",
            token(&self.suite),
            self.seed,
            self.verdict(),
            self.cases.len()
        );
        for (k, v) in &self.parameters {
            out.push_str(&format!(" {}={}", token(k), token(v)));
        }
        out.push('\n');
        for c in &self.cases {
            out.push_str(&format!(
                "case instance={} expected={} observed={} verdict={} witness={}\n",
                token(&c.instance),
                token(&c.expected),
                token(&c.observed),
                c.verdict,
                token(&c.witness)
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        if !self.parameters.is_empty() {
            let params: Vec<String> = self
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            out.push_str(&format!("parameters: {}\n", params.join(" ")));
        }
        let width = self
            .cases
            .iter()
            .map(|c| c.instance.len())
            .max()
            .unwrap_or(0);
        for c in &self.cases {
            let tag = match c.verdict {
                Verdict::Pass => "ok  ",
                Verdict::Fail => "FAIL",
                Verdict::Indeterminate => "??  ",
            };
            out.push_str(&format!(
                "  {tag} {:<width$}  expected {}, observed {}\n",
                c.instance, c.expected, c.observed
            ));
            if c.verdict == Verdict::Fail && c.witness != "-" {
                out.push_str(&format!("       witness {}\n", c.witness));
            }
        }
        out.push_str(&format!(
            "{}: {} pass, {} fail, {} indeterminate\n",
            self.verdict(),
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Indeterminate)
        ));
        out
    }
}

/// Compact rendering of a vertex map, images joined by `.`.
pub fn map_token(images: &[usize]) -> String {
    if images.is_empty() {
        return "empty".into();
    }
    images
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(".")
}
