//! On-disk cache of automorphism groups, keyed by a hash of the Cayley table.

use std::fs;
use std::path::{Path, PathBuf};

use log::warn;
use realforms_core::{automorphism_group, AutGroup, FiniteGroup};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub group_label: String,
    pub group_order: usize,
    pub cayley_hash: String,
    pub automorphisms: Vec<Vec<u32>>,
}

/// SHA-256 of the order and the little-endian table entries.
pub fn cayley_hash(g: &FiniteGroup) -> String {
    let mut h = Sha256::new();
    h.update((g.order() as u64).to_le_bytes());
    for &x in g.table() {
        h.update(x.to_le_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct AutCache {
    dir: PathBuf,
}

impl AutCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        AutCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, hash: &str) -> PathBuf {
        self.dir.join(format!("aut-{hash}.json"))
    }

    /// A cached `Aut(g)`, or `None` when absent, stale or unreadable.
    pub fn load(&self, g: &FiniteGroup) -> Option<AutGroup> {
        let hash = cayley_hash(g);
        let path = self.path_for(&hash);
        let text = fs::read_to_string(&path).ok()?;
        let entry: CacheEntry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => {
                warn!("ignoring corrupted cache entry {}: {e}", path.display());
                return None;
            }
        };
        if entry.version != CACHE_VERSION {
            warn!("ignoring cache entry {} with version {}", path.display(), entry.version);
            return None;
        }
        if entry.cayley_hash != hash || entry.group_order != g.order() {
            warn!("ignoring cache entry {} for a different table", path.display());
            return None;
        }
        match AutGroup::from_maps(g, entry.automorphisms) {
            Ok(a) => Some(a),
            Err(e) => {
                warn!("ignoring invalid cache entry {}: {e}", path.display());
                None
            }
        }
    }

    pub fn store(&self, g: &FiniteGroup, a: &AutGroup) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let hash = cayley_hash(g);
        let entry = CacheEntry {
            version: CACHE_VERSION,
            group_label: g.label().to_string(),
            group_order: g.order(),
            cayley_hash: hash.clone(),
            automorphisms: a.maps().to_vec(),
        };
        let tmp = self.dir.join(format!(".aut-{hash}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        fs::rename(&tmp, self.path_for(&hash))
    }

    /// Loads `Aut(g)` or computes and stores it. The flag reports a hit.
    pub fn get_or_compute(&self, g: &FiniteGroup) -> realforms_core::Result<(AutGroup, bool)> {
        if let Some(a) = self.load(g) {
            return Ok((a, true));
        }
        let a = automorphism_group(g)?;
        if let Err(e) = self.store(g, &a) {
            warn!("could not write cache under {}: {e}", self.dir.display());
        }
        Ok((a, false))
    }
}
