//! A thread-safe character memo with optional on-disk persistence.
//!
//! File format: a sequence of records, each a little-endian `u32` byte
//! length followed by the payload
//! `type tag (u8) | rank (u32) | highest weight (rank × i64) |
//!  entry count (u32) | entries (rank × i64 weight, u64 multiplicity)`.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use verlinde_core::charmod::{CacheKey, CharacterCache, DominantCharacter};
use verlinde_core::rootsys::{CartanType, Weight};

use crate::error::{CliError, CliResult};

pub const CACHE_DIR_ENV: &str = "VERLINDE_CACHE_DIR";
const CACHE_FILE: &str = "characters.bin";

#[derive(Debug, Default)]
pub struct SharedCache {
    map: RwLock<HashMap<CacheKey, Arc<DominantCharacter>>>,
}

impl CharacterCache for SharedCache {
    fn lookup(&self, key: &CacheKey) -> Option<Arc<DominantCharacter>> {
        self.map.read().unwrap_or_else(|e| e.into_inner()).get(key).cloned()
    }

    fn store(&self, key: CacheKey, value: Arc<DominantCharacter>) -> Arc<DominantCharacter> {
        let mut map = self.map.write().unwrap_or_else(|e| e.into_inner());
        map.entry(key).or_insert(value).clone()
    }
}

impl SharedCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The cache file under `$VERLINDE_CACHE_DIR`, if the variable is set.
    pub fn env_path() -> Option<PathBuf> {
        std::env::var_os(CACHE_DIR_ENV).map(|d| Path::new(&d).join(CACHE_FILE))
    }

    /// Load records from `path`; a missing file yields an empty cache.
    pub fn load(path: &Path) -> CliResult<Self> {
        let cache = SharedCache::new();
        let bytes = match fs::read(path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e.into()),
        };
        let bad = |reason: &str| CliError::Cache { path: path.display().to_string(), reason: reason.to_string() };
        let mut rest = bytes.as_slice();
        while !rest.is_empty() {
            let len = take_u32(&mut rest).ok_or_else(|| bad("truncated record length"))? as usize;
            if rest.len() < len {
                return Err(bad("truncated record"));
            }
            let (record, tail) = rest.split_at(len);
            rest = tail;
            let (key, value) = decode_record(record).ok_or_else(|| bad("malformed record"))?;
            cache.store(key, Arc::new(value));
        }
        Ok(cache)
    }

    /// Write every entry to `path`, sorted by key so the file is stable.
    pub fn save(&self, path: &Path) -> CliResult<()> {
        let map = self.map.read().unwrap_or_else(|e| e.into_inner());
        let sorted: BTreeMap<&CacheKey, &Arc<DominantCharacter>> = map.iter().collect();
        let mut out = Vec::new();
        for (key, value) in sorted {
            let record = encode_record(key, value);
            out.extend_from_slice(&(record.len() as u32).to_le_bytes());
            out.extend_from_slice(&record);
        }
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, out)?;
        fs::rename(tmp, path)?;
        Ok(())
    }
}

fn encode_record(key: &CacheKey, value: &DominantCharacter) -> Vec<u8> {
    let mut buf = vec![key.cartan_type.tag()];
    buf.extend_from_slice(&(key.rank as u32).to_le_bytes());
    for c in key.highest_weight.coords() {
        buf.extend_from_slice(&c.to_le_bytes());
    }
    buf.extend_from_slice(&(value.entries().len() as u32).to_le_bytes());
    for (w, m) in value.entries() {
        for c in w.coords() {
            buf.extend_from_slice(&c.to_le_bytes());
        }
        buf.extend_from_slice(&m.to_le_bytes());
    }
    buf
}

fn decode_record(mut buf: &[u8]) -> Option<(CacheKey, DominantCharacter)> {
    let tag = *buf.first()?;
    buf = &buf[1..];
    let cartan_type = CartanType::from_tag(tag)?;
    let rank = take_u32(&mut buf)? as usize;
    let highest_weight = take_weight(&mut buf, rank)?;
    let count = take_u32(&mut buf)? as usize;
    let mut entries = BTreeMap::new();
    for _ in 0..count {
        let w = take_weight(&mut buf, rank)?;
        let m = u64::from_le_bytes(take(&mut buf, 8)?.try_into().ok()?);
        entries.insert(w, m);
    }
    if !buf.is_empty() {
        return None;
    }
    let value = DominantCharacter::from_entries(highest_weight.clone(), entries).ok()?;
    Some((CacheKey { cartan_type, rank, highest_weight }, value))
}

fn take<'a>(buf: &mut &'a [u8], n: usize) -> Option<&'a [u8]> {
    if buf.len() < n {
        return None;
    }
    let (head, tail) = buf.split_at(n);
    *buf = tail;
    Some(head)
}

fn take_u32(buf: &mut &[u8]) -> Option<u32> {
    Some(u32::from_le_bytes(take(buf, 4)?.try_into().ok()?))
}

fn take_weight(buf: &mut &[u8], rank: usize) -> Option<Weight> {
    let coords = (0..rank)
        .map(|_| take(buf, 8).and_then(|b| b.try_into().ok()).map(i64::from_le_bytes))
        .collect::<Option<Vec<_>>>()?;
    Some(Weight::new(coords))
}
