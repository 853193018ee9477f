//! Optional on-disk spill of the PBW straightening memo, enabled by
//! `KW1_CACHE_DIR`. Files are keyed by a digest of the field and the
//! bracket table, so a stale or foreign file is never picked up; results do
//! not depend on whether a cache was present.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};

use kw1_core::center::RestrictedEnveloping;
use kw1_core::pbw::Monomial;
use serde::{Deserialize, Serialize};

pub const ENV_VAR: &str = "KW1_CACHE_DIR";

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct MemoFile {
    digest: String,
    entries: Vec<MemoEntry>,
}

#[derive(Serialize, Deserialize)]
struct MemoEntry {
    m: Vec<u32>,
    k: usize,
    terms: Vec<(Vec<u32>, u32)>,
}

#[derive(Clone, Debug)]
pub struct MemoCache {
    dir: PathBuf,
}

fn digest(ctx: &RestrictedEnveloping) -> String {
    let alg = ctx.algebra();
    let k = alg.field();
    let mut h = DefaultHasher::new();
    alg.labels().hash(&mut h);
    k.p().hash(&mut h);
    k.modulus().hash(&mut h);
    for ((i, j, l), c) in alg.table().constants() {
        (i, j, l, k.to_code(*c)).hash(&mut h);
    }
    format!("{:016x}", h.finish())
}

impl MemoCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        MemoCache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(ENV_VAR)
            .filter(|v| !v.is_empty())
            .map(MemoCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, digest: &str) -> PathBuf {
        self.dir.join(format!("memo-{digest}.json"))
    }

    /// Preload the memo; returns the number of entries read. A missing or
    /// unreadable file is treated as empty.
    pub fn load(&self, ctx: &RestrictedEnveloping) -> usize {
        let d = digest(ctx);
        let Ok(text) = std::fs::read_to_string(self.path(&d)) else {
            return 0;
        };
        let Ok(file) = serde_json::from_str::<MemoFile>(&text) else {
            return 0;
        };
        if file.digest != d {
            return 0;
        }
        let k = ctx.field();
        let order = k.order() as u32;
        let n = ctx.dim();
        let valid = |m: &[u32]| m.len() == n;
        let entries: Vec<_> = file
            .entries
            .into_iter()
            .filter(|e| valid(&e.m) && e.k < n && e.terms.iter().all(|(t, c)| valid(t) && *c < order))
            .map(|e| {
                let terms = e
                    .terms
                    .into_iter()
                    .map(|(t, c)| (Monomial::new(t), k.from_code(c)))
                    .collect();
                ((Monomial::new(e.m), e.k), terms)
            })
            .collect();
        let count = entries.len();
        ctx.pbw().preload_memo(entries);
        count
    }

    /// Write the current memo, replacing any previous file atomically.
    pub fn store(&self, ctx: &RestrictedEnveloping) -> anyhow::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let d = digest(ctx);
        let k = ctx.field();
        let entries = ctx
            .pbw()
            .memo_entries()
            .into_iter()
            .map(|((m, i), terms)| MemoEntry {
                m: m.exponents().to_vec(),
                k: i,
                terms: terms.into_iter().map(|(t, c)| (t.exponents().to_vec(), k.to_code(c))).collect(),
            })
            .collect();
        let file = MemoFile {
            digest: d.clone(),
            entries,
        };
        let path = self.path(&d);
        let tmp = path.with_extension("json.tmp");
        std::fs::write(&tmp, serde_json::to_vec(&file)?)?;
        std::fs::rename(tmp, path)?;
        Ok(())
    }
}
