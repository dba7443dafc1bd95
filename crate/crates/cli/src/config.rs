//! Flat `key = value` configuration files with `[section]` headers.
//!
//! ```text
//! # comment
//! [pipeline]
//! seed = 7
//! variant = sparse
//!
//! [search]
//! backtrack-budget = 2000000
//! ```
//!
//! Values keep everything after the first `=`, trimmed, so list-valued keys
//! hold space-separated words. Keys before any section header live in the
//! unnamed section `""`. Later assignments to the same key win, which is
//! also how command-line flags override file values: they are applied after
//! the file.

use anyhow::{bail, Context, Result};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Default, Clone)]
pub struct ConfigFile {
    sections: BTreeMap<String, BTreeMap<String, String>>,
}

impl ConfigFile {
    pub fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.sections.get(section)?.get(key).map(String::as_str)
    }

    /// Parses a value of any `FromStr` type, naming the key on failure.
    pub fn parse<T: std::str::FromStr>(&self, section: &str, key: &str) -> Result<Option<T>> {
        let Some(raw) = self.get(section, key) else {
            return Ok(None);
        };
        match raw.parse() {
            Ok(v) => Ok(Some(v)),
            Err(_) => bail!("config [{section}] {key}: bad value `{raw}`"),
        }
    }

    /// Space-separated list value parsed elementwise.
    pub fn parse_list<T: std::str::FromStr>(&self, section: &str, key: &str) -> Result<Option<Vec<T>>> {
        let Some(raw) = self.get(section, key) else {
            return Ok(None);
        };
        let mut out = Vec::new();
        for word in raw.split_whitespace() {
            match word.parse() {
                Ok(v) => out.push(v),
                Err(_) => bail!("config [{section}] {key}: bad value `{word}`"),
            }
        }
        Ok(Some(out))
    }

}

pub fn parse_config(text: &str) -> Result<ConfigFile> {
    let mut sections: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    let mut current = String::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let no = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let Some(name) = name.strip_suffix(']') else {
                bail!("config line {no}: unterminated section header");
            };
            current = name.trim().to_string();
            sections.entry(current.clone()).or_default();
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {no}: expected `key = value`");
        };
        sections
            .entry(current.clone())
            .or_default()
            .insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(ConfigFile { sections })
}

pub fn read_config(path: impl AsRef<Path>) -> Result<ConfigFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("config {}", path.display()))?;
    parse_config(&text).with_context(|| format!("config {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_comments_and_overrides() {
        let cfg = parse_config(
            "top = 1\n# note\n[pipeline]\nseed = 7\nseed = 9\n\n[grid]\nn = 51 101\n",
        )
        .unwrap();
        assert_eq!(cfg.get("", "top"), Some("1"));
        assert_eq!(cfg.parse::<u64>("pipeline", "seed").unwrap(), Some(9));
        assert_eq!(cfg.parse_list::<usize>("grid", "n").unwrap(), Some(vec![51, 101]));
        assert_eq!(cfg.get("pipeline", "missing"), None);
        assert_eq!(cfg.get("absent", "n"), None);
    }

    #[test]
    fn bad_lines_name_their_position() {
        let e = parse_config("ok = 1\nnot a pair\n").unwrap_err();
        assert!(e.to_string().contains("line 2"));
        let e = parse_config("[open\n").unwrap_err();
        assert!(e.to_string().contains("unterminated"));
        let e = parse_config("[s]\nx = y\n").unwrap().parse::<u64>("s", "x").unwrap_err();
        assert!(e.to_string().contains("bad value"));
    }
}
