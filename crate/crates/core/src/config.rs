//! Runtime limits, loaded from a `key = value` file and overridable by callers.

use std::f64::consts::FRAC_PI_3;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Largest group the Cayley BFS will materialize.
    pub max_group_order: usize,
    /// Largest reduced-word set an enumeration may produce.
    pub max_words: u64,
    /// Minimum angle (radians) between any type D edge and the horizontal in strict mode.
    pub steepness: f64,
    /// Worker threads for exhaustive sweeps.
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_group_order: 1_000_000,
            max_words: 10_000_000,
            steepness: FRAC_PI_3,
            jobs: 1,
        }
    }
}

impl Config {
    /// Parses `key = value` lines on top of the defaults. Blank lines and
    /// lines starting with `#` are ignored; unknown keys are rejected.
    pub fn parse(text: &str) -> Result<Config> {
        let mut config = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("line {}: expected key = value", lineno + 1))
            })?;
            config.set(key.trim(), value.trim())?;
        }
        Ok(config)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "max_group_order" => self.max_group_order = parse_positive(key, value)?,
            "max_words" => self.max_words = parse_positive(key, value)?,
            "jobs" => self.jobs = parse_positive(key, value)?,
            "steepness" => {
                let v: f64 = parse_value(key, value)?;
                if !(v > 0.0 && v < std::f64::consts::FRAC_PI_2) {
                    return Err(Error::Parse(format!(
                        "steepness must lie in (0, pi/2), got {v}"
                    )));
                }
                self.steepness = v;
            }
            "steepness_degrees" => {
                let v: f64 = parse_value(key, value)?;
                if !(v > 0.0 && v < 90.0) {
                    return Err(Error::Parse(format!(
                        "steepness_degrees must lie in (0, 90), got {v}"
                    )));
                }
                self.steepness = v.to_radians();
            }
            other => return Err(Error::Parse(format!("unknown config key `{other}`"))),
        }
        Ok(())
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Parse(format!("bad value `{value}` for `{key}`")))
}

fn parse_positive<T: FromStr + PartialOrd + Default>(key: &str, value: &str) -> Result<T> {
    let v: T = parse_value(key, value)?;
    if v <= T::default() {
        return Err(Error::Parse(format!("`{key}` must be positive")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_overrides_and_comments() {
        let c =
            Config::parse("# caps\nmax_group_order = 5000\n\nmax_words=12\njobs = 4\n").unwrap();
        assert_eq!(c.max_group_order, 5000);
        assert_eq!(c.max_words, 12);
        assert_eq!(c.jobs, 4);
        assert_eq!(c.steepness, FRAC_PI_3);
    }

    #[test]
    fn degrees_convert() {
        let c = Config::parse("steepness_degrees = 60").unwrap();
        assert!((c.steepness - FRAC_PI_3).abs() < 1e-12);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Config::parse("max_words").is_err());
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("jobs = 0").is_err());
        assert!(Config::parse("jobs = -3").is_err());
        assert!(Config::parse("steepness = 2.0").is_err());
    }
}
