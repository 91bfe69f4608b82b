//! `key=value` settings file plus flag/environment overrides.

use std::path::{Path, PathBuf};

use permpow::enumerate::DEFAULT_MAX_N;
use permpow::tableaux::DEFAULT_SYT_BOUND;
use permpow::EnumerationConfig;

use crate::CliError;

pub const CACHE_ENV: &str = "PERMPOW_CACHE";
pub const DEFAULT_CACHE: &str = "permpow-cache.jsonl";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FileSettings {
    pub max_n: Option<usize>,
    pub syt_max_boxes: Option<usize>,
    pub threads: Option<usize>,
    pub cache: Option<PathBuf>,
}

impl FileSettings {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut s = FileSettings::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || {
                value
                    .parse::<usize>()
                    .map_err(|_| format!("line {}: {key} needs a non-negative integer", lineno + 1))
            };
            match key {
                "max_n" => s.max_n = Some(number()?),
                "syt_max_boxes" => s.syt_max_boxes = Some(number()?),
                "threads" => s.threads = Some(number()?),
                "cache" => s.cache = Some(PathBuf::from(value)),
                _ => return Err(format!("line {}: unknown key {key:?}", lineno + 1)),
            }
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Values given on the command line; `None` means not given.
#[derive(Debug, Clone, Default)]
pub struct FlagSettings {
    pub max_n: Option<usize>,
    pub syt_max_boxes: Option<usize>,
    pub threads: Option<usize>,
    pub cache: Option<PathBuf>,
    pub no_cache: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub enumeration: EnumerationConfig,
    pub syt_max_boxes: usize,
    pub cache: Option<PathBuf>,
}

impl Settings {
    /// Flag, then environment, then file, then default.
    pub fn resolve(
        flags: &FlagSettings,
        env_cache: Option<PathBuf>,
        file: &FileSettings,
    ) -> Result<Self, CliError> {
        let threads = flags.threads.or(file.threads);
        if threads == Some(0) {
            return Err(CliError::Usage("threads must be positive".into()));
        }
        let cache = if flags.no_cache {
            None
        } else {
            Some(
                flags
                    .cache
                    .clone()
                    .or(env_cache)
                    .or_else(|| file.cache.clone())
                    .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE)),
            )
        };
        Ok(Settings {
            enumeration: EnumerationConfig {
                max_n: flags.max_n.or(file.max_n).unwrap_or(DEFAULT_MAX_N),
                threads,
            },
            syt_max_boxes: flags
                .syt_max_boxes
                .or(file.syt_max_boxes)
                .unwrap_or(DEFAULT_SYT_BOUND),
            cache,
        })
    }
}
