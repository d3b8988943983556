//! On-disk subgroup lattice cache, one JSON file per group spec.

use std::fs;
use std::path::{Path, PathBuf};

use artinx_core::sweep::LatticeSource;
use artinx_core::{enumerate_subgroups, GroupSpec, GroupTable, LatticeCache, SubgroupLattice};

pub struct LatticeCacheDir {
    dir: PathBuf,
}

fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl LatticeCacheDir {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        LatticeCacheDir { dir: dir.into() }
    }

    pub fn path_for(&self, spec: &str) -> PathBuf {
        let clean: String = spec.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
        self.dir.join(format!("lattice-{clean}-{:016x}.json", fnv1a(spec)))
    }

    fn load(&self, path: &Path, spec: &str, group: &GroupTable) -> Option<SubgroupLattice> {
        let text = fs::read_to_string(path).ok()?;
        let cache: LatticeCache = serde_json::from_str(&text).ok()?;
        if cache.spec != spec {
            return None;
        }
        SubgroupLattice::from_cache(group, &cache).ok()
    }

    /// Cached lattice when present and consistent, otherwise a fresh
    /// enumeration written back to the cache. Write failures are not fatal.
    pub fn get(&self, spec: &str, group: &GroupTable) -> artinx_core::Result<SubgroupLattice> {
        let path = self.path_for(spec);
        if let Some(lattice) = self.load(&path, spec, group) {
            return Ok(lattice);
        }
        let lattice = enumerate_subgroups(group)?;
        if fs::create_dir_all(&self.dir).is_ok() {
            if let Ok(text) = serde_json::to_string_pretty(&lattice.to_cache(spec)) {
                let tmp = path.with_extension("json.tmp");
                if fs::write(&tmp, text).is_ok() {
                    let _ = fs::rename(&tmp, &path);
                }
            }
        }
        Ok(lattice)
    }
}

impl LatticeSource for LatticeCacheDir {
    fn lattice(&self, spec: &GroupSpec, group: &GroupTable) -> artinx_core::Result<SubgroupLattice> {
        self.get(&spec.to_string(), group)
    }
}
