//! On-disk caches for the group table and base-case path tables.
//!
//! Every file embeds the schema version and the generator matrices together
//! with their SHA-256 fingerprint; a file that disagrees with the current
//! generators or schema is ignored and rebuilt. Writers hold a lock file.

use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, Instant, SystemTime};

use log::{debug, warn};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::{build_group_table, GroupTable};
use crate::hurwitz::{ClassSignature, Direction, Move, Orbit};
use crate::matrix::Mat2;

pub const SCHEMA_VERSION: &str = "g6-hurwitz-cache/1";
pub const CACHE_ENV: &str = "G6_HURWITZ_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".g6-cache";

const LOCK_FILE: &str = ".lock";
const LOCK_WAIT: Duration = Duration::from_secs(60);
const STALE_LOCK: Duration = Duration::from_secs(600);

pub fn generators_fingerprint(generators: &[Mat2]) -> String {
    let mut h = Sha256::new();
    h.update(SCHEMA_VERSION.as_bytes());
    for g in generators {
        h.update(b"\n");
        h.update(g.to_string().as_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Header {
    schema_version: String,
    generators: Vec<String>,
    fingerprint: String,
}

impl Header {
    fn current(generators: &[Mat2]) -> Header {
        Header {
            schema_version: SCHEMA_VERSION.to_string(),
            generators: generators.iter().map(ToString::to_string).collect(),
            fingerprint: generators_fingerprint(generators),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    header: Header,
    table: GroupTable,
}

#[derive(Serialize, Deserialize)]
struct OrbitHeader {
    header: Header,
    len: usize,
    signature: ClassSignature,
    root: u64,
    entries: usize,
}

/// Held while writing; removes the lock file on drop.
#[derive(Debug)]
pub struct CacheLock {
    path: PathBuf,
}

impl Drop for CacheLock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheDir {
    root: PathBuf,
}

impl CacheDir {
    pub fn new(root: impl Into<PathBuf>) -> CacheDir {
        CacheDir { root: root.into() }
    }

    /// `$G6_HURWITZ_CACHE`, or `.g6-cache` in the working directory.
    pub fn from_env() -> CacheDir {
        match std::env::var_os(CACHE_ENV) {
            Some(p) if !p.is_empty() => CacheDir::new(p),
            _ => CacheDir::new(DEFAULT_CACHE_DIR),
        }
    }

    pub fn path(&self) -> &Path {
        &self.root
    }

    fn ensure(&self) -> Result<()> {
        fs::create_dir_all(&self.root).map_err(|e| Error::cache(&self.root, e))
    }

    pub fn lock(&self) -> Result<CacheLock> {
        self.ensure()?;
        let path = self.root.join(LOCK_FILE);
        let start = Instant::now();
        loop {
            match fs::OpenOptions::new().write(true).create_new(true).open(&path) {
                Ok(mut f) => {
                    let _ = writeln!(f, "{}", std::process::id());
                    return Ok(CacheLock { path });
                }
                Err(e) if e.kind() == io::ErrorKind::AlreadyExists => {
                    let stale = fs::metadata(&path)
                        .and_then(|m| m.modified())
                        .ok()
                        .and_then(|t| SystemTime::now().duration_since(t).ok())
                        .is_some_and(|age| age > STALE_LOCK);
                    if stale {
                        warn!("removing stale cache lock {}", path.display());
                        let _ = fs::remove_file(&path);
                        continue;
                    }
                    if start.elapsed() > LOCK_WAIT {
                        return Err(Error::cache(
                            &path,
                            io::Error::new(io::ErrorKind::WouldBlock, "cache is locked by another writer"),
                        ));
                    }
                    thread::sleep(Duration::from_millis(50));
                }
                Err(e) => return Err(Error::cache(&path, e)),
            }
        }
    }

    /// Removes cache files written by this crate. Returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        if !self.root.exists() {
            return Ok(0);
        }
        let _lock = self.lock()?;
        let mut removed = 0;
        let entries = fs::read_dir(&self.root).map_err(|e| Error::cache(&self.root, e))?;
        for entry in entries {
            let entry = entry.map_err(|e| Error::cache(&self.root, e))?;
            let path = entry.path();
            let ours = path
                .file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with("group-table") || n.starts_with("base-"));
            if ours && path.is_file() {
                fs::remove_file(&path).map_err(|e| Error::cache(&path, e))?;
                removed += 1;
            }
        }
        Ok(removed)
    }

    fn table_path(&self) -> PathBuf {
        self.root.join("group-table.json")
    }

    fn base_path(&self, sig: ClassSignature) -> PathBuf {
        self.root
            .join(format!("base-len{}-{}_{}_{}.bin", sig.len(), sig.n, sig.m, sig.k))
    }

    /// Loads the cached table for `generators`, building and storing it when
    /// the file is missing, unreadable or stale.
    pub fn group_table(&self, generators: &[Mat2]) -> Result<GroupTable> {
        let path = self.table_path();
        let header = Header::current(generators);
        if let Ok(text) = fs::read_to_string(&path) {
            match serde_json::from_str::<TableFile>(&text) {
                Ok(file) if file.header == header => {
                    debug!("group table loaded from {}", path.display());
                    return Ok(file.table);
                }
                Ok(_) => debug!("group table cache {} is stale", path.display()),
                Err(e) => warn!("ignoring unreadable cache {}: {e}", path.display()),
            }
        }
        let table = build_group_table(generators)?;
        let _lock = self.lock()?;
        let text = serde_json::to_string(&TableFile {
            header,
            table: table.clone(),
        })
        .map_err(|e| Error::cache(&path, io::Error::other(e)))?;
        write_atomic(&path, text.as_bytes())?;
        Ok(table)
    }

    /// Reads a stored orbit with parent moves, or `None` when absent or stale.
    pub fn load_base_orbit(&self, generators: &[Mat2], sig: ClassSignature) -> Result<Option<Orbit>> {
        let path = self.base_path(sig);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::cache(&path, e)),
        };
        let mut reader = BufReader::new(file);
        let mut line = String::new();
        reader.read_line(&mut line).map_err(|e| Error::cache(&path, e))?;
        let head: OrbitHeader = match serde_json::from_str(&line) {
            Ok(h) => h,
            Err(e) => {
                warn!("ignoring unreadable cache {}: {e}", path.display());
                return Ok(None);
            }
        };
        if head.header != Header::current(generators) || head.signature != sig || head.len != sig.len() {
            debug!("base table cache {} is stale", path.display());
            return Ok(None);
        }
        let mut members = Vec::with_capacity(head.entries + 1);
        let mut parents = FxHashMap::default();
        parents.reserve(head.entries);
        members.push(head.root);
        let mut buf = [0u8; 9];
        for _ in 0..head.entries {
            if let Err(e) = reader.read_exact(&mut buf) {
                warn!("truncated cache {}: {e}", path.display());
                return Ok(None);
            }
            let code = u64::from_le_bytes(buf[..8].try_into().expect("8 bytes"));
            let dir = if buf[8] & 1 == 0 {
                Direction::Forward
            } else {
                Direction::Inverse
            };
            members.push(code);
            parents.insert(code, Move { position: buf[8] >> 1, dir });
        }
        members.sort_unstable();
        Ok(Some(Orbit {
            len: head.len,
            root: head.root,
            members,
            parents: Some(parents),
        }))
    }

    pub fn store_base_orbit(&self, generators: &[Mat2], sig: ClassSignature, orbit: &Orbit) -> Result<()> {
        let parents = orbit
            .parents
            .as_ref()
            .ok_or_else(|| Error::Precondition("orbit has no parent moves to store".into()))?;
        let path = self.base_path(sig);
        let _lock = self.lock()?;
        let head = OrbitHeader {
            header: Header::current(generators),
            len: orbit.len,
            signature: sig,
            root: orbit.root,
            entries: parents.len(),
        };
        let mut bytes = serde_json::to_vec(&head).map_err(|e| Error::cache(&path, io::Error::other(e)))?;
        bytes.push(b'\n');
        bytes.reserve(parents.len() * 9);
        let mut codes: Vec<_> = parents.iter().collect();
        codes.sort_unstable_by_key(|(c, _)| **c);
        for (code, mv) in codes {
            bytes.extend_from_slice(&code.to_le_bytes());
            let dir = match mv.dir {
                Direction::Forward => 0,
                Direction::Inverse => 1,
            };
            bytes.push((mv.position << 1) | dir);
        }
        write_atomic(&path, &bytes)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let write = || -> io::Result<()> {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        w.write_all(bytes)?;
        w.flush()?;
        drop(w);
        fs::rename(&tmp, path)
    };
    write().map_err(|e| Error::cache(path, e))
}
