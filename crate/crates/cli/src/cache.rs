//! On-disk JSON cache for character tables and orbit posets.
//!
//! Entries live at `<dir>/<kind>-<family><rank>-v<SCHEMA>.json`. A file that
//! fails to parse or validate is reported on stderr and recomputed; a
//! directory that cannot be written disables caching with a warning. Writes
//! go to a temporary file in the same directory and are renamed into place.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use lscoinv_core::weyl::enumerate_labels;
use lscoinv_core::{build_poset, char_table, CharTable, OrbitPoset, WeylType};

/// Bump when the JSON layout of any cached type changes; old entries are then
/// simply never looked up again.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    schema: u32,
}

impl Cache {
    pub fn disabled() -> Self {
        Self { dir: None, schema: SCHEMA_VERSION }
    }

    /// Creates `dir` if needed; falls back to no caching if that fails.
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_schema(dir, SCHEMA_VERSION)
    }

    pub fn with_schema(dir: impl Into<PathBuf>, schema: u32) -> Self {
        let dir = dir.into();
        match std::fs::create_dir_all(&dir) {
            Ok(()) => Self { dir: Some(dir), schema },
            Err(e) => {
                eprintln!("warning: cache directory {} is unusable ({e}); continuing without cache", dir.display());
                Self { dir: None, schema }
            }
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn entry_path(&self, kind: &str, wt: WeylType) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{kind}-{}{}-v{}.json", wt.family, wt.rank, self.schema)))
    }

    pub fn char_table(&mut self, wt: WeylType) -> CharTable {
        self.get_or_compute("chartable", wt, |t: &CharTable| t.wt == wt, || Ok(char_table(wt)))
            .expect("character tables always compute")
    }

    pub fn poset(&mut self, wt: WeylType) -> anyhow::Result<OrbitPoset> {
        self.get_or_compute(
            "poset",
            wt,
            |p: &OrbitPoset| p.wt == wt && p.labels == enumerate_labels(wt),
            || Ok(build_poset(wt)?),
        )
    }

    fn get_or_compute<T, V, F>(&mut self, kind: &str, wt: WeylType, valid: V, compute: F) -> anyhow::Result<T>
    where
        T: Serialize + DeserializeOwned,
        V: Fn(&T) -> bool,
        F: FnOnce() -> anyhow::Result<T>,
    {
        let Some(path) = self.entry_path(kind, wt) else {
            return compute();
        };
        if path.exists() {
            match read_entry::<T>(&path) {
                Ok(v) if valid(&v) => return Ok(v),
                Ok(_) => eprintln!("warning: cache entry {} is for a different group; recomputing", path.display()),
                Err(e) => eprintln!("warning: discarding corrupt cache entry {} ({e}); recomputing", path.display()),
            }
        }
        let value = compute()?;
        if let Err(e) = write_atomic(&path, &value) {
            eprintln!("warning: cannot write cache entry {} ({e}); continuing without cache", path.display());
            self.dir = None;
        }
        Ok(value)
    }
}

fn read_entry<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn write_atomic<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    let dir = path.parent().expect("entry paths have a parent");
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, value)?;
    tmp.write_all(b"\n")?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)?;
    Ok(())
}
