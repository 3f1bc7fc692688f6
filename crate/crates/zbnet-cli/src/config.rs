//! Pipeline configuration: a `key = value` text file plus command-line
//! overrides, validated before any command touches the output tree.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use zbnet::analytics::IdfBase;

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    /// Raw record file to ingest.
    pub records: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub author_merge_rules: Option<PathBuf>,
    pub author_external_ids: Option<PathBuf>,
    pub journal_merge_rules: Option<PathBuf>,
    pub out: PathBuf,
    pub latin1: bool,
    pub idf_base: IdfBase,
    pub x_min: u64,
    pub core_t: f64,
    pub island_min: usize,
    pub island_max: usize,
    pub subject_prefix: String,
    pub min_works: u64,
    pub exclude_etal: bool,
    pub keyword_multiplicity: bool,
    pub tokenize_title: bool,
    pub top_k: usize,
    pub threads: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            records: None,
            stopwords: None,
            author_merge_rules: None,
            author_external_ids: None,
            journal_merge_rules: None,
            out: PathBuf::from("out"),
            latin1: false,
            idf_base: IdfBase::Natural,
            x_min: 1,
            core_t: 1.0,
            island_min: 2,
            island_max: 30,
            subject_prefix: "05C".to_string(),
            min_works: 1,
            exclude_etal: true,
            keyword_multiplicity: false,
            tokenize_title: false,
            top_k: 20,
            threads: 1,
        }
    }
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => bail!("config key {key}: expected a boolean, got {other:?}"),
    }
}

impl PipelineConfig {
    pub fn from_file(path: &Path) -> Result<PipelineConfig> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        let mut config = PipelineConfig::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("{}:{}: expected `key = value`", path.display(), lineno + 1))?;
            config
                .set(key.trim(), value.trim())
                .with_context(|| format!("{}:{}", path.display(), lineno + 1))?;
        }
        Ok(config)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "records" => self.records = Some(PathBuf::from(value)),
            "stopwords" => self.stopwords = Some(PathBuf::from(value)),
            "author_merge_rules" => self.author_merge_rules = Some(PathBuf::from(value)),
            "author_external_ids" => self.author_external_ids = Some(PathBuf::from(value)),
            "journal_merge_rules" => self.journal_merge_rules = Some(PathBuf::from(value)),
            "out" => self.out = PathBuf::from(value),
            "latin1" => self.latin1 = parse_bool(key, value)?,
            "idf_base" => {
                self.idf_base = match value {
                    "e" => IdfBase::Natural,
                    "2" => IdfBase::Base2,
                    "10" => IdfBase::Base10,
                    other => bail!("idf_base must be e, 2, or 10, got {other:?}"),
                }
            }
            "x_min" => self.x_min = value.parse().context("x_min must be an integer")?,
            "core_t" => self.core_t = value.parse().context("core_t must be a number")?,
            "island_min" => {
                self.island_min = value.parse().context("island_min must be an integer")?
            }
            "island_max" => {
                self.island_max = value.parse().context("island_max must be an integer")?
            }
            "subject_prefix" => self.subject_prefix = value.to_string(),
            "min_works" => self.min_works = value.parse().context("min_works must be an integer")?,
            "exclude_etal" => self.exclude_etal = parse_bool(key, value)?,
            "keyword_multiplicity" => self.keyword_multiplicity = parse_bool(key, value)?,
            "tokenize_title" => self.tokenize_title = parse_bool(key, value)?,
            "top_k" => self.top_k = value.parse().context("top_k must be an integer")?,
            "threads" => self.threads = value.parse().context("threads must be an integer")?,
            other => bail!("unknown config key {other:?}"),
        }
        Ok(())
    }

    /// Range and path checks shared by every subcommand.
    pub fn validate(&self) -> Result<()> {
        if self.core_t < 0.0 {
            bail!("core_t must be >= 0, got {}", self.core_t);
        }
        if self.island_min <= 1 || self.island_min > self.island_max {
            bail!(
                "island bounds must satisfy 1 < island_min <= island_max, got [{}, {}]",
                self.island_min,
                self.island_max
            );
        }
        if self.min_works < 1 {
            bail!("min_works must be >= 1");
        }
        if self.x_min < 1 {
            bail!("x_min must be >= 1");
        }
        for (name, path) in [
            ("stopwords", &self.stopwords),
            ("author_merge_rules", &self.author_merge_rules),
            ("author_external_ids", &self.author_external_ids),
            ("journal_merge_rules", &self.journal_merge_rules),
        ] {
            if let Some(path) = path {
                if !path.exists() {
                    bail!("{name} path {} does not exist", path.display());
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn parses_key_value_file() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(
            f,
            "# comment\nout = results\ncore_t = 2.5\nexclude_etal = false\nsubject_prefix = 11A"
        )
        .unwrap();
        let c = PipelineConfig::from_file(f.path()).unwrap();
        assert_eq!(c.out, PathBuf::from("results"));
        assert_eq!(c.core_t, 2.5);
        assert!(!c.exclude_etal);
        assert_eq!(c.subject_prefix, "11A");
    }

    #[test]
    fn rejects_unknown_keys_and_bad_ranges() {
        let mut c = PipelineConfig::default();
        assert!(c.set("nonsense", "1").is_err());
        c.island_min = 1;
        assert!(c.validate().is_err());
        c.island_min = 5;
        c.island_max = 4;
        assert!(c.validate().is_err());
    }

    #[test]
    fn default_validates() {
        assert!(PipelineConfig::default().validate().is_ok());
    }
}
