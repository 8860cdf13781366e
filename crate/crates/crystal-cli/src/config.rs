//! Run-time configuration: an optional TOML file, overridden by the
//! `CRYSTAL_THREADS` environment variable for the thread count.

use std::path::{Path, PathBuf};

use crystal::graph::DEFAULT_MAX_VERTICES;
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Cap on the number of vertices any graph closure may create.
    pub max_vertices: usize,
    /// Worker threads for the library's parallel loops.
    pub threads: usize,
    /// Where outputs go when no explicit `--out` is given.
    pub output_dir: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    max_vertices: Option<usize>,
    threads: Option<usize>,
    output_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_vertices: DEFAULT_MAX_VERTICES,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            output_dir: None,
        }
    }
}

impl Config {
    /// Loads `path` if given, then applies the `threads` override.
    pub fn load(path: Option<&Path>, threads_override: Option<&str>) -> Result<Self, CliError> {
        let file = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| CliError::io(p, e))?;
                toml::from_str::<ConfigFile>(&text)
                    .map_err(|e| CliError::Invalid(format!("{}: {}", p.display(), e.message())))?
            }
            None => ConfigFile::default(),
        };
        let mut config = Config::default();
        if let Some(m) = file.max_vertices {
            config.max_vertices = m;
        }
        if let Some(t) = file.threads {
            config.threads = t;
        }
        config.output_dir = file.output_dir;
        if let Some(t) = threads_override {
            config.threads = t
                .trim()
                .parse()
                .map_err(|_| CliError::Invalid(format!("CRYSTAL_THREADS must be a positive integer, got {t:?}")))?;
        }
        if config.max_vertices == 0 || config.threads == 0 {
            return Err(CliError::Invalid("max_vertices and threads must be positive".into()));
        }
        Ok(config)
    }
}
