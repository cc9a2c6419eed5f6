//! Result cache: one JSON file mapping request keys to payloads.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Bumped whenever a payload layout changes; older files are ignored.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub value: Value,
    pub version: u32,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, CacheEntry>,
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<String, CacheEntry>,
}

impl Cache {
    /// Loads `path`; a missing, unreadable or outdated file gives an empty cache.
    pub fn open(path: &Path) -> Self {
        let entries = fs::read_to_string(path)
            .ok()
            .and_then(|text| serde_json::from_str::<CacheFile>(&text).ok())
            .filter(|f| f.version == SCHEMA_VERSION)
            .map(|f| f.entries)
            .unwrap_or_default();
        Self {
            path: path.to_path_buf(),
            entries,
        }
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries
            .get(key)
            .filter(|e| e.version == SCHEMA_VERSION)
            .map(|e| &e.value)
    }

    /// Insert and write the whole file back through a temporary file.
    pub fn put(&mut self, key: &str, value: Value) -> std::io::Result<()> {
        self.entries.insert(
            key.to_string(),
            CacheEntry {
                key: key.to_string(),
                value,
                version: SCHEMA_VERSION,
            },
        );
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let file = CacheFile {
            version: SCHEMA_VERSION,
            entries: self.entries.clone(),
        };
        let tmp = self.path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&file)?)?;
        fs::rename(&tmp, &self.path)
    }
}

/// Canonical key: kind, then `name=value` pairs in the given order, then the
/// schema version.
pub fn cache_key(kind: &str, params: &[(&str, String)]) -> String {
    let mut key = kind.to_string();
    for (name, value) in params {
        key.push('|');
        key.push_str(name);
        key.push('=');
        key.push_str(value);
    }
    key.push_str(&format!("|v{SCHEMA_VERSION}"));
    key
}
