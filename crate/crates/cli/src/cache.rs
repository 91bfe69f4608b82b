//! Append-only JSON-lines record of computed counts.

use std::collections::{BTreeMap, HashMap};
use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;

use permpow::AvoidanceQuery;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CacheRecord {
    pub schema_version: u32,
    pub kind: String,
    pub parameters: BTreeMap<String, String>,
    /// Decimal string so counts of any size survive JSON.
    pub count: String,
    pub elapsed_millis: u64,
    pub tool_version: String,
    pub timestamp: String,
}

type Key = (String, BTreeMap<String, String>);

pub fn query_parameters(q: &AvoidanceQuery) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("n".into(), q.n().to_string());
    let pats: Vec<String> = q.patterns().iter().map(|p| p.to_string()).collect();
    m.insert("patterns".into(), pats.join(","));
    m.insert("mode".into(), q.mode().to_string());
    if let Some(orders) = q.order_set() {
        let o: Vec<String> = orders.iter().map(u64::to_string).collect();
        m.insert("orderSet".into(), o.join(","));
    }
    m
}

/// The only writer of the cache file for this process.
#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    known: HashMap<Key, String>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache::default()
    }

    pub fn open(path: PathBuf) -> Result<Self, CliError> {
        let mut known = HashMap::new();
        match std::fs::read_to_string(&path) {
            Ok(text) => {
                for (i, line) in text.lines().enumerate() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let rec: CacheRecord = serde_json::from_str(line).map_err(|e| {
                        CliError::Io(format!("{} line {}: {e}", path.display(), i + 1))
                    })?;
                    let key = (rec.kind, rec.parameters);
                    if let Some(prev) = known.get(&key) {
                        if *prev != rec.count {
                            return Err(CliError::Verify(format!(
                                "{} holds conflicting counts {prev} and {} for {} {:?}",
                                path.display(),
                                rec.count,
                                key.0,
                                key.1
                            )));
                        }
                    }
                    known.insert(key, rec.count);
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(CliError::Io(format!("reading {}: {e}", path.display()))),
        }
        Ok(Cache {
            path: Some(path),
            known,
        })
    }

    #[cfg(test)]
    pub fn lookup(&self, kind: &str, parameters: &BTreeMap<String, String>) -> Option<&str> {
        self.known
            .get(&(kind.to_string(), parameters.clone()))
            .map(String::as_str)
    }

    /// Stores a fresh result, or checks it against the stored one.
    pub fn record(
        &mut self,
        kind: &str,
        parameters: BTreeMap<String, String>,
        count: String,
        elapsed_millis: u64,
    ) -> Result<(), CliError> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let key = (kind.to_string(), parameters);
        if let Some(prev) = self.known.get(&key) {
            if *prev == count {
                return Ok(());
            }
            return Err(CliError::Verify(format!(
                "cached count {prev} for {kind} {:?} differs from recomputed {count}",
                key.1
            )));
        }
        let rec = CacheRecord {
            schema_version: SCHEMA_VERSION,
            kind: key.0.clone(),
            parameters: key.1.clone(),
            count: count.clone(),
            elapsed_millis,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        };
        let line = serde_json::to_string(&rec).expect("record serializes");
        let io = |e: std::io::Error| CliError::Io(format!("writing {}: {e}", path.display()));
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(io)?;
        writeln!(f, "{line}").map_err(io)?;
        self.known.insert(key, count);
        Ok(())
    }
}
