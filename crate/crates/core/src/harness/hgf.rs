//! HGF, the line-oriented graph text format.
//!
//! ```text
//! graph <order> [loops]
//! # name <descriptor>
//! v <index> <label>
//! e <i> <j>
//! ```
//!
//! Edges are written with `i <= j`. Text after `#` is a comment; a leading `# name` comment
//! carries the descriptive name. Labels are all-or-nothing: either every vertex has a `v`
//! line or none does.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

const NAME_PREFIX: &str = "# name ";

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str("graph ");
    out.push_str(&g.order().to_string());
    if g.has_loops() {
        out.push_str(" loops");
    }
    out.push('\n');
    if let Some(name) = g.name().filter(|n| !n.contains('\n')) {
        out.push_str(NAME_PREFIX);
        out.push_str(name);
        out.push('\n');
    }
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "v {i} {l}");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn index(tok: Option<&str>, order: usize, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing vertex index"))?;
    let i: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a vertex index")))?;
    if i >= order {
        return Err(parse_err(
            line,
            format!("vertex {i} out of range for order {order}"),
        ));
    }
    Ok(i)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(Graph, bool)> = None;
    let mut name = None;
    let mut labels: Vec<Option<Label>> = Vec::new();
    let mut labelled = 0usize;
    for (no, raw) in text.split('\n').enumerate() {
        let line = no + 1;
        if raw.contains('\r') {
            return Err(parse_err(line, "carriage return; HGF uses LF line endings"));
        }
        if let Some(rest) = raw.strip_prefix(NAME_PREFIX) {
            if header.is_some() && name.is_none() {
                name = Some(rest.trim().to_string());
            }
            continue;
        }
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        let kind = toks.next().unwrap_or("");
        let Some((g, loops)) = header.as_mut() else {
            if kind != "graph" {
                return Err(parse_err(line, "expected `graph <order> [loops]` header"));
            }
            let order = toks
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| parse_err(line, "header needs a vertex count"))?;
            let loops = match toks.next() {
                None => false,
                Some("loops") => true,
                Some(other) => {
                    return Err(parse_err(line, format!("unknown header flag `{other}`")))
                }
            };
            header = Some((Graph::new(order), loops));
            labels = vec![None; order];
            if toks.next().is_some() {
                return Err(parse_err(line, "trailing tokens after header"));
            }
            continue;
        };
        let order = g.order();
        match kind {
            "v" => {
                let i = index(toks.next(), order, line)?;
                let tok = toks
                    .next()
                    .ok_or_else(|| parse_err(line, "missing label"))?;
                let label: Label = tok.parse().map_err(|e| parse_err(line, format!("{e}")))?;
                if labels[i].replace(label).is_some() {
                    return Err(parse_err(line, format!("vertex {i} labelled twice")));
                }
                labelled += 1;
            }
            "e" => {
                let u = index(toks.next(), order, line)?;
                let v = index(toks.next(), order, line)?;
                if u > v {
                    return Err(parse_err(
                        line,
                        format!("edge `{u} {v}` must be written with i <= j"),
                    ));
                }
                if u == v && !*loops {
                    return Err(parse_err(
                        line,
                        "loop edge but the header has no `loops` flag",
                    ));
                }
                if g.has_edge(u, v) {
                    return Err(parse_err(line, format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u, v);
            }
            "graph" => return Err(parse_err(line, "second header")),
            other => return Err(parse_err(line, format!("unknown record `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let (mut g, _) = header.ok_or_else(|| parse_err(1, "empty input"))?;
    if labelled > 0 {
        if labelled < g.order() {
            return Err(parse_err(
                0,
                format!(
                    "{labelled} of {} vertices labelled; label all or none",
                    g.order()
                ),
            ));
        }
        let labels = labels
            .into_iter()
            .map(|l| l.expect("all labelled"))
            .collect();
        g = g
            .with_labels(labels)
            .map_err(|e| parse_err(0, e.to_string()))?;
    }
    if let Some(n) = name {
        g = g.with_name(n);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, helical, petersen};

    #[test]
    fn triangle_text() {
        let text = serialize_graph(&complete(3).unwrap());
        assert_eq!(text, "graph 3\n# name K:3\ne 0 1\ne 0 2\ne 1 2\n");
    }

    #[test]
    fn round_trips() {
        for g in [
            helical(3, 1, 2).unwrap(),
            petersen(),
            Graph::from_edges(3, [(0, 0), (0, 2)]),
        ] {
            let text = serialize_graph(&g);
            let back = parse_graph(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.name(), g.name());
            assert_eq!(serialize_graph(&back), text);
        }
        assert!(serialize_graph(&helical(3, 1, 2).unwrap()).contains("v 0 ({1},{2})\n"));
    }

    #[test]
    fn rejects_malformed() {
        let line_of = |text: &str| match parse_graph(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of("graph 2\ne 0 0\n"), 2);
        assert_eq!(line_of("graph 2\ne 0 1\n# c\ne 0 1\n"), 4);
        assert_eq!(line_of("graph 2\ne 1 0\n"), 2);
        assert_eq!(line_of("graph 2\ne 0 2\n"), 2);
        assert_eq!(line_of("e 0 1\n"), 1);
        assert_eq!(line_of("graph 2\r\n"), 1);
        assert_eq!(line_of("graph 2 extra\n"), 1);
        assert_eq!(line_of("graph 2\nv 0 a\nv 0 b\n"), 3);
        assert_eq!(line_of("graph 2\nv 0 a b\n"), 2);
        assert_eq!(line_of("graph 2\nv 0 a\n"), 0);
        assert!(parse_graph("graph 2 loops\ne 0 0 # fine\n")
            .unwrap()
            .has_loop(0));
        assert!(parse_graph("").is_err());
    }
}
