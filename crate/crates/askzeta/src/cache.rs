//! Content-addressed on-disk cache of computed results.
//!
//! Entries live in `<dir>/<sha256>.txt`. The key hashes the engine version,
//! the subcommand and the canonical input text; each file starts with a header
//! line repeating the key, and entries whose header does not match are treated
//! as missing and overwritten. Writes go to a temporary file that is then
//! renamed into place.

use std::cell::Cell;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

/// Changes whenever cached text could differ for the same input.
pub const ENGINE_VERSION: &str = concat!("askzeta-", env!("CARGO_PKG_VERSION"), "/1");

pub struct Cache {
    dir: PathBuf,
    version: String,
    hits: Cell<u64>,
    misses: Cell<u64>,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        Self::with_version(dir, ENGINE_VERSION)
    }

    pub fn with_version(dir: &Path, version: &str) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf(), version: version.to_string(), hits: Cell::new(0), misses: Cell::new(0) })
    }

    pub fn key(&self, subcommand: &str, input: &str) -> String {
        let mut h = Sha256::new();
        for part in [self.version.as_str(), subcommand, input] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part.as_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.txt"))
    }

    fn header(key: &str) -> String {
        format!("askzeta-cache {key}\n")
    }

    pub fn lookup(&self, key: &str) -> Option<String> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        text.strip_prefix(&Self::header(key)).map(str::to_string)
    }

    pub fn store(&self, key: &str, value: &str) -> std::io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(Self::header(key).as_bytes())?;
        tmp.write_all(value.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }

    /// Cached value for `(subcommand, input)`, computing and storing it on a
    /// miss. `validate` rejects corrupt entries, which are then recomputed.
    pub fn get_or_compute<E>(
        &self,
        subcommand: &str,
        input: &str,
        validate: impl Fn(&str) -> bool,
        compute: impl FnOnce() -> Result<String, E>,
    ) -> Result<String, E> {
        let key = self.key(subcommand, input);
        if let Some(v) = self.lookup(&key).filter(|v| validate(v)) {
            self.hits.set(self.hits.get() + 1);
            return Ok(v);
        }
        self.misses.set(self.misses.get() + 1);
        let v = compute()?;
        let _ = self.store(&key, &v);
        Ok(v)
    }

    pub fn hits(&self) -> u64 {
        self.hits.get()
    }

    pub fn misses(&self) -> u64 {
        self.misses.get()
    }
}
