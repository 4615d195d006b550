//! Optional `name = value` config file overriding material and model defaults.
//!
//! One assignment per line, `#` starts a comment. Keys are dotted
//! (`graphene.tau`, `copper.sigma0`, ...); values are plain numbers in SI.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

/// Keys the loader accepts, all values in SI units.
pub const KNOWN_KEYS: &[&str] = &[
    "graphene.mu_c",    // J
    "graphene.tau",     // s
    "graphene.temp",    // K
    "graphene.vf",      // m/s (gate chain / mobility conversions)
    "cnt.radius",       // m
    "cnt.vf",           // m/s
    "cnt.tau",          // s
    "cnt.bundle_tubes", // parallel tubes in the antenna line model
    "cnt.height_ratio", // h/r for the line capacitance
    "copper.sigma0",    // S/m
    "copper.tau",       // s
    "antenna.eps1",     // relative permittivity above
    "antenna.eps2",     // relative permittivity below
    "gate.thickness",   // m
    "gate.eps_r",       // oxide relative permittivity
    "gate.vf",          // m/s
    "hsf.thickness",    // m
    "hsf.eps_r",        // slab relative permittivity
    "hsf.fill",         // graphene fill factor
];

/// Parsed config: a flat map of known keys to SI values.
#[derive(Debug, Clone, Default)]
pub struct Config {
    values: BTreeMap<String, f64>,
}

impl Config {
    /// Parse config text. Unknown keys and malformed lines are hard errors.
    pub fn parse(text: &str) -> Result<Config> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `name = value`", lineno + 1))
            })?;
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(Error::Config(format!(
                    "line {}: unknown key {key:?}",
                    lineno + 1
                )));
            }
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::Config(format!("line {}: bad value for {key:?}", lineno + 1))
            })?;
            values.insert(key.to_string(), value);
        }
        Ok(Config { values })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Config> {
        let text = std::fs::read_to_string(path.as_ref())?;
        Config::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        self.values.get(key).copied()
    }

    /// Value for `key`, or `default` when the key is absent.
    pub fn get_or(&self, key: &str, default: f64) -> f64 {
        self.get(key).unwrap_or(default)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
