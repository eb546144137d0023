use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use log::{debug, warn};

use crate::cache::CacheDir;
use crate::context::G6;
use crate::error::{Error, Result};
use crate::hurwitz::{orbit_bfs, packed, ClassSignature, Factorization, MoveSeq, Orbit, OrbitOptions};
use crate::par::Exec;

/// Longest factorizations handled by direct path lookup.
pub const BASE_MAX_LEN: usize = 7;

/// The Hurwitz orbit of a standard factorization with a BFS parent for every
/// member, so any member can be walked back to the standard form.
#[derive(Clone, Debug)]
pub struct BasePathTable {
    pub signature: ClassSignature,
    orbit: Orbit,
}

impl BasePathTable {
    pub fn build(g6: &G6, sig: ClassSignature, state_cap: usize) -> Result<BasePathTable> {
        check_base_signature(sig)?;
        let root = g6.standard_factorization(sig)?;
        let opts = OrbitOptions {
            state_cap,
            want_paths: true,
            exec: Exec::Sequential,
        };
        Ok(BasePathTable {
            signature: sig,
            orbit: orbit_bfs(g6.system(), &root, &opts)?,
        })
    }

    pub fn len(&self) -> usize {
        self.orbit.len
    }

    pub fn is_empty(&self) -> bool {
        self.orbit.len == 0
    }

    pub fn size(&self) -> usize {
        self.orbit.size()
    }

    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    /// Moves taking `f` to the standard form. A miss means `f` is outside the
    /// orbit of the standard form, which is reported as a verification failure.
    pub fn path(&self, g6: &G6, f: &Factorization) -> Result<MoveSeq> {
        if f.len() != self.len() {
            return Err(Error::Precondition(format!(
                "factorization of length {} looked up in a length-{} table",
                f.len(),
                self.len()
            )));
        }
        self.orbit
            .path_to_root(g6.system(), packed::pack(&f.refls))
            .ok_or_else(|| {
                Error::Verification(format!(
                    "{f} is not in the orbit of the standard form {}",
                    self.signature
                ))
            })
    }
}

fn check_base_signature(sig: ClassSignature) -> Result<()> {
    if sig.len() > BASE_MAX_LEN {
        return Err(Error::LengthCap {
            len: sig.len(),
            cap: BASE_MAX_LEN,
        });
    }
    if !sig.is_admissible() {
        return Err(Error::InadmissibleSignature { sig });
    }
    Ok(())
}

/// Lazily built base tables, shared between threads. Building happens under
/// the mutex, so only one table is constructed at a time.
#[derive(Debug)]
pub struct BaseTables {
    cache: Option<CacheDir>,
    state_cap: usize,
    tables: Mutex<HashMap<ClassSignature, Arc<BasePathTable>>>,
}

impl BaseTables {
    pub fn new(cache: Option<CacheDir>, state_cap: usize) -> BaseTables {
        BaseTables {
            cache,
            state_cap,
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, g6: &G6, sig: ClassSignature) -> Result<Arc<BasePathTable>> {
        check_base_signature(sig)?;
        let mut tables = self.tables.lock().unwrap_or_else(|p| p.into_inner());
        if let Some(t) = tables.get(&sig) {
            return Ok(Arc::clone(t));
        }
        let gens = g6.generator_matrices();
        let mut loaded = None;
        if let Some(cache) = &self.cache {
            match cache.load_base_orbit(&gens, sig) {
                Ok(Some(orbit)) if orbit.root == packed::pack(&g6.standard_factorization(sig)?.refls) => {
                    debug!("base table {sig} loaded from cache");
                    loaded = Some(BasePathTable { signature: sig, orbit });
                }
                Ok(_) => {}
                Err(e) => warn!("base table cache unavailable: {e}"),
            }
        }
        let table = match loaded {
            Some(t) => t,
            None => {
                let t = BasePathTable::build(g6, sig, self.state_cap)?;
                debug!("base table {sig} built with {} members", t.size());
                if let Some(cache) = &self.cache {
                    cache.store_base_orbit(&gens, sig, &t.orbit)?;
                }
                t
            }
        };
        let table = Arc::new(table);
        tables.insert(sig, Arc::clone(&table));
        Ok(table)
    }
}
