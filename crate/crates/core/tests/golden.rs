//! Structured reports of the fast suites against committed goldens. Set `HELIX_BLESS=1` to
//! rewrite them.

use std::path::PathBuf;

use helix::harness::{verify, Config, RunOptions};
use helix::Caps;

const SUITES: [&str; 6] = ["chrom-coloring", "dist", "m2", "ocy", "shomb", "while-sh"];

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.records"))
}

#[test]
fn reports_match_goldens() {
    let bless = std::env::var_os("HELIX_BLESS").is_some();
    let mut stale = Vec::new();
    for name in SUITES {
        let records = verify(
            name,
            &RunOptions::default(),
            &Config::defaults(),
            &Caps::default(),
        )
        .unwrap()
        .to_records();
        let path = golden(name);
        if bless {
            std::fs::write(&path, &records).unwrap();
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(records.as_str()) {
            stale.push(name);
        }
    }
    assert!(
        stale.is_empty(),
        "reports differ from goldens: {stale:?} (HELIX_BLESS=1 regenerates)"
    );
}
