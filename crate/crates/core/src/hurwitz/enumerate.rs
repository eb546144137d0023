use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::ElementId;
use crate::par::{self, Exec};

use super::packed::{self, PackedCode, MAX_PACKED_LEN};
use super::{ClassSignature, Refl, ReflectionSystem};

pub const MAX_LENGTH: usize = MAX_PACKED_LEN;

/// Every reflection factorization of `target` of one length, grouped by signature.
/// Each group is sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub target: ElementId,
    pub len: usize,
    pub by_signature: BTreeMap<ClassSignature, Vec<PackedCode>>,
}

impl Enumeration {
    pub fn total(&self) -> usize {
        self.by_signature.values().map(Vec::len).sum()
    }

    pub fn count(&self, sig: &ClassSignature) -> usize {
        self.by_signature.get(sig).map_or(0, Vec::len)
    }
}

struct Dfs<'a> {
    sys: &'a ReflectionSystem,
    target: ElementId,
    len: usize,
}

impl Dfs<'_> {
    fn run(&self, depth: usize, code: PackedCode, prod: ElementId, out: &mut Vec<PackedCode>) {
        let table = self.sys.table();
        if depth + 1 == self.len {
            // the last entry is forced: prod * r = target
            let need = table.mul(table.inv(prod), self.target);
            if let Some(r) = self.sys.refl_of(need) {
                out.push(code | ((r.0 as u64) << (4 * depth)));
            }
            return;
        }
        for r in self.sys.all() {
            let next = table.mul(prod, self.sys.element(r));
            self.run(depth + 1, code | ((r.0 as u64) << (4 * depth)), next, out);
        }
    }
}

/// Exhaustive depth-first enumeration of length-`len` reflection tuples multiplying to `target`.
///
/// The search is split over all two-entry prefixes; results are identical for
/// every [`Exec`] mode.
pub fn enumerate_factorizations(
    sys: &ReflectionSystem,
    target: ElementId,
    len: usize,
    exec: Exec,
) -> Result<Enumeration> {
    if len > MAX_LENGTH {
        return Err(Error::LengthCap { len, cap: MAX_LENGTH });
    }
    if len == 0 {
        return Err(Error::Precondition("factorization length must be at least 1".into()));
    }
    let dfs = Dfs { sys, target, len };
    let split = (len - 1).min(2);
    let mut prefixes: Vec<Vec<Refl>> = vec![vec![]];
    for _ in 0..split {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                sys.all().map(move |r| {
                    let mut q = p.clone();
                    q.push(r);
                    q
                })
            })
            .collect();
    }
    let chunks = par::map_collect(exec, &prefixes, |prefix| {
        let mut out = Vec::new();
        let prod = sys.product(prefix);
        dfs.run(prefix.len(), packed::pack(prefix), prod, &mut out);
        out
    });
    let mut all: Vec<PackedCode> = chunks.into_iter().flatten().collect();
    par::sort_dedup(exec, &mut all);
    let mut by_signature: BTreeMap<ClassSignature, Vec<PackedCode>> = BTreeMap::new();
    for code in all {
        by_signature
            .entry(packed::signature(sys, code, len))
            .or_default()
            .push(code);
    }
    Ok(Enumeration {
        target,
        len,
        by_signature,
    })
}
