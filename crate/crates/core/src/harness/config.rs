//! Suite defaults, read from the version-controlled `config/defaults.toml`.

use serde::Deserialize;

use crate::error::{Error, Result};

pub const DEFAULTS: &str = include_str!("../../config/defaults.toml");

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct GnpConfig {
    pub trials: usize,
    pub min_order: usize,
    pub max_order: usize,
    pub edge_probability: f64,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct HelicalSuite {
    #[serde(flatten)]
    pub corpus: GnpConfig,
    pub k: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
    pub sweep: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct OcySuite {
    #[serde(flatten)]
    pub corpus: GnpConfig,
    pub k: Vec<usize>,
    pub sweep: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct M2Suite {
    #[serde(flatten)]
    pub corpus: GnpConfig,
    pub powers: Vec<usize>,
    pub targets: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Instances<T> {
    pub instances: Vec<T>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DistSuite {
    pub instances: Vec<(usize, usize)>,
    pub max_s: usize,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct WhileSuite {
    pub max_m: usize,
    pub max_k: usize,
    pub max_order: usize,
    pub extra: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CirhelSuite {
    pub instances: Vec<String>,
    pub qcap: usize,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    pub homb: HelicalSuite,
    pub shomb: HelicalSuite,
    pub ocy: OcySuite,
    pub m2: M2Suite,
    pub chrom: Instances<String>,
    #[serde(rename = "chrom-coloring")]
    pub chrom_coloring: Instances<(usize, usize, usize)>,
    pub dist: DistSuite,
    #[serde(rename = "while-sh")]
    pub while_sh: WhileSuite,
    #[serde(rename = "cirhel-partial")]
    pub cirhel_partial: CirhelSuite,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        toml::from_str(text).map_err(|e| Error::param(format!("config: {e}")))
    }

    /// The built-in defaults.
    pub fn defaults() -> Config {
        Config::parse(DEFAULTS).expect("bundled defaults parse")
    }
}
