use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::lattice::{self, encode};
use crate::weight::Weight;

use super::character::DominantCharacter;

pub const CACHE_FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "diraccoh-character-cache";

type Key = (String, Weight);

/// Insert-only memo of dominant characters keyed by system label and
/// highest weight. Safe to share between threads; a racing second insert
/// of the same key returns the first stored value.
#[derive(Debug, Default)]
pub struct CharacterCache {
    inner: RwLock<HashMap<Key, Arc<DominantCharacter>>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, system: &str, hw: &Weight) -> Option<Arc<DominantCharacter>> {
        self.inner.read().expect("cache lock").get(&(system.to_string(), hw.clone())).cloned()
    }

    pub fn insert(&self, system: &str, hw: &Weight, dc: Arc<DominantCharacter>) -> Arc<DominantCharacter> {
        let mut map = self.inner.write().expect("cache lock");
        map.entry((system.to_string(), hw.clone())).or_insert(dc).clone()
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes `<system> <highest-weight> <weight> <mult>` records after a
    /// version header, sorted for reproducible files.
    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        let io = |e: std::io::Error| Error::Cache(e.to_string());
        writeln!(out, "{MAGIC} {CACHE_FORMAT_VERSION}").map_err(io)?;
        let map = self.inner.read().expect("cache lock");
        let mut keys: Vec<&Key> = map.keys().collect();
        keys.sort();
        for k in keys {
            for (w, m) in &map[k].entries {
                writeln!(out, "{} {} {} {}", k.0, k.1, lattice::decode(w), m).map_err(io)?;
            }
        }
        Ok(())
    }

    pub fn read_from<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header =
            lines.next().ok_or_else(|| Error::Cache("empty file".into()))?.map_err(|e| Error::Cache(e.to_string()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some(MAGIC) {
            return Err(Error::Cache("missing header".into()));
        }
        let version: u32 =
            parts.next().and_then(|v| v.parse().ok()).ok_or_else(|| Error::Cache("bad version".into()))?;
        if version != CACHE_FORMAT_VERSION {
            return Err(Error::Cache(format!("unsupported format version {version}")));
        }
        let mut groups: HashMap<Key, DominantCharacter> = HashMap::new();
        for (n, line) in lines.enumerate() {
            let line = line.map_err(|e| Error::Cache(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Cache(format!("malformed record on line {}", n + 2));
            if f.len() != 4 {
                return Err(bad());
            }
            let hw: Weight = f[1].parse().map_err(|_| bad())?;
            let w = encode(&f[2].parse::<Weight>().map_err(|_| bad())?)?;
            let m: u64 = f[3].parse().map_err(|_| bad())?;
            let highest = encode(&hw)?;
            groups
                .entry((f[0].to_string(), hw))
                .or_insert_with(|| DominantCharacter { highest, entries: Vec::new() })
                .entries
                .push((w, m));
        }
        let cache = CharacterCache::new();
        {
            let mut map = cache.inner.write().expect("cache lock");
            for (k, dc) in groups {
                map.insert(k, Arc::new(dc));
            }
        }
        Ok(cache)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = fs::File::open(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Self::read_from(BufReader::new(f))
    }

    /// Writes atomically through a temporary sibling file.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let f = fs::File::create(&tmp).map_err(|e| Error::Cache(format!("{}: {e}", tmp.display())))?;
            let mut w = std::io::BufWriter::new(f);
            self.write_to(&mut w)?;
            w.flush().map_err(|e| Error::Cache(e.to_string()))?;
        }
        fs::rename(&tmp, path).map_err(|e| Error::Cache(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, Series};
    use crate::{weight, Engine};

    #[test]
    fn roundtrip_and_version_check() {
        let cache = Arc::new(CharacterCache::new());
        let e = Engine::new().cache(cache.clone());
        let b3 = build_root_system(Series::B, 3).unwrap();
        let first = e.dominant_character(&b3, &weight![2, 1, 0]).unwrap();
        let mut buf = Vec::new();
        cache.write_to(&mut buf).unwrap();
        let back = CharacterCache::read_from(&buf[..]).unwrap();
        assert_eq!(*back.get("B3", &weight![2, 1, 0]).unwrap(), *first);
        let bad = String::from_utf8(buf).unwrap().replacen(" 1\n", " 9\n", 1);
        assert!(CharacterCache::read_from(bad.as_bytes()).is_err());
    }
}
