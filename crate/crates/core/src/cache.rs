//! Content-addressed flat-file cache of JSON records.
//!
//! A record lives at `<dir>/<sha256(namespace, key, field)>.json`. Writes go to a temporary
//! file in the same directory and are renamed into place, so readers never see partial files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::census::sha256_hex;
use crate::linalg::FieldTag;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// File holding the record for a canonical key; isomorphic inputs share it.
    pub fn path_for(&self, namespace: &str, canonical: &str, field: FieldTag) -> PathBuf {
        let digest = sha256_hex(format!("{namespace}\n{canonical}\n{}", field.characteristic()).as_bytes());
        self.dir.join(format!("{digest}.json"))
    }

    /// The stored record, or `None` when it is missing or unreadable. Corrupt files are
    /// reported with a warning and left for the next `put` to overwrite.
    pub fn get<T: DeserializeOwned>(&self, namespace: &str, canonical: &str, field: FieldTag) -> Option<T> {
        let path = self.path_for(namespace, canonical, field);
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str(&text) {
            Ok(v) => Some(v),
            Err(e) => {
                log::warn!("ignoring corrupt cache entry {}: {e}", path.display());
                None
            }
        }
    }

    pub fn put<T: Serialize>(&self, namespace: &str, canonical: &str, field: FieldTag, record: &T) -> std::io::Result<()> {
        let path = self.path_for(namespace, canonical, field);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, record)?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(())
    }

    /// `get`, falling back to `compute` and storing its result.
    pub fn get_or_compute<T, E>(
        &self,
        namespace: &str,
        canonical: &str,
        field: FieldTag,
        compute: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        if let Some(hit) = self.get(namespace, canonical, field) {
            log::debug!("cache hit for {namespace} {canonical}");
            return Ok(hit);
        }
        let value = compute()?;
        if let Err(e) = self.put(namespace, canonical, field, &value) {
            log::warn!("could not write cache entry: {e}");
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path()).unwrap();
        assert_eq!(cache.get::<Vec<u32>>("t", "k", FieldTag::GF2), None);
        cache.put("t", "k", FieldTag::GF2, &vec![1u32, 2]).unwrap();
        assert_eq!(cache.get::<Vec<u32>>("t", "k", FieldTag::GF2), Some(vec![1, 2]));
        assert_eq!(cache.get::<Vec<u32>>("t", "k", FieldTag::RATIONALS), None);

        fs::write(cache.path_for("t", "k", FieldTag::GF2), "{not json").unwrap();
        let mut calls = 0;
        let v: Vec<u32> = cache
            .get_or_compute("t", "k", FieldTag::GF2, || {
                calls += 1;
                Ok::<_, ()>(vec![3])
            })
            .unwrap();
        assert_eq!((v, calls), (vec![3], 1));
        assert_eq!(cache.get::<Vec<u32>>("t", "k", FieldTag::GF2), Some(vec![3]));
    }
}
