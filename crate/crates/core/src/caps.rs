//! Size caps for the exact searches, overridable through `HELIX_CAPS`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    pub isomorphism: usize,
    pub chromatic: usize,
    pub fractional: usize,
    pub local: usize,
    pub power_coloring: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            isomorphism: crate::graph::DEFAULT_ISO_CAP,
            chromatic: 400,
            fractional: 20,
            local: 16,
            power_coloring: crate::hom::DEFAULT_POWER_COLORING_CAP,
        }
    }
}

impl Caps {
    /// Parses `key=value` pairs separated by commas, e.g. `chromatic=600,local=18`,
    /// on top of the defaults.
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::param(format!("cap `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::param(format!("cap `{item}` has a non-numeric value")))?;
            match key.trim() {
                "iso" | "isomorphism" => caps.isomorphism = value,
                "chromatic" => caps.chromatic = value,
                "fractional" => caps.fractional = value,
                "local" => caps.local = value,
                "power_coloring" => caps.power_coloring = value,
                other => return Err(Error::param(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }

    pub fn from_env() -> Result<Caps> {
        match std::env::var("HELIX_CAPS") {
            Ok(spec) => Caps::parse(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let c = Caps::parse("chromatic=600, local=18").unwrap();
        assert_eq!(c.chromatic, 600);
        assert_eq!(c.local, 18);
        assert_eq!(c.fractional, 20);
        assert!(Caps::parse("bogus=1").is_err());
        assert!(Caps::parse("local").is_err());
        assert_eq!(Caps::parse("").unwrap(), Caps::default());
    }
}
