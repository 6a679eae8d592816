//! Content-addressed JSON cache for enumeration results.
//!
//! The directory is `$AMALGAM_CACHE_DIR` when set, otherwise
//! `$XDG_CACHE_HOME/amalgam` or `~/.cache/amalgam`.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;

pub const CACHE_ENV: &str = "AMALGAM_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        if let Some(d) = std::env::var_os(CACHE_ENV) {
            return Some(Cache::at(d));
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return Some(Cache::at(Path::new(&d).join("amalgam")));
        }
        std::env::var_os("HOME").map(|h| Cache::at(Path::new(&h).join(".cache").join("amalgam")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Hex digest of the parts, each length-prefixed.
    pub fn key(parts: &[&str]) -> String {
        let mut h = Sha256::new();
        for p in parts {
            h.update((p.len() as u64).to_le_bytes());
            h.update(p.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored value, or `None` if absent or unreadable.
    pub fn load<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Writes through a temporary file and a rename, so readers never see
    /// a partial entry.
    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let text = serde_json::to_string(value).map_err(|e| crate::Error::Io(e.to_string()))?;
        write_atomic(&self.path(key), text.as_bytes())
    }
}

/// Replaces `path` with `contents` through a temporary file in the same
/// directory.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.persist(path).map_err(|e| crate::Error::Io(e.to_string()))?;
    Ok(())
}
