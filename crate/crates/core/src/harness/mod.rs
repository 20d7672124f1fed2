//! Serialization, seeded corpora, verification suites and probes behind the `hx` tool.

pub mod config;
pub mod corpus;
pub mod hgf;
pub mod probe;
pub mod report;
pub mod suites;

use std::path::Path;

pub use config::Config;
pub use corpus::{generate_corpus, CorpusSpec, Generator};
pub use hgf::{parse_graph, serialize_graph};
pub use probe::{pentagon_probe, subdivision_power_scan};
pub use report::{Case, Report, Verdict};
pub use suites::{verify, RunOptions, SUITES};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::Graph;

/// An existing file is read as HGF; anything else must be a family descriptor.
pub fn load_graph(source: &str) -> Result<Graph> {
    let path = Path::new(source);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{source}: {e}")))?;
        return parse_graph(&text);
    }
    match source.parse::<Family>() {
        Ok(f) => f.build(),
        Err(_) if !source.contains(':') => Err(Error::Io(format!("{source}: no such file"))),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn load_sources() {
        assert_eq!(load_graph("C:5").unwrap().order(), 5);
        assert!(matches!(load_graph("Q:3"), Err(Error::Descriptor(_))));
        assert!(matches!(load_graph("missing.hgf"), Err(Error::Io(_))));
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("p.hgf");
        std::fs::write(&file, serialize_graph(&crate::families::petersen())).unwrap();
        assert_eq!(
            load_graph(file.to_str().unwrap()).unwrap(),
            crate::families::petersen()
        );
    }
}
