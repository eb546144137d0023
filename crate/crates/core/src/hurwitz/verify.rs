use serde::{Deserialize, Serialize};

use crate::context::G6;
use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::group::ElementId;

use super::packed;
use super::{count_factorizations, enumerate_factorizations, orbit_bfs, ClassSignature, Factorization, OrbitOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureRow {
    pub length: usize,
    pub signature: ClassSignature,
    pub orbit_size: usize,
    pub enum_count: usize,
    pub dp_count: u128,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthReport {
    pub length: usize,
    pub target: ElementId,
    pub rows: Vec<SignatureRow>,
    pub total_enumerated: usize,
    pub orbit_sum: usize,
    /// Every enumerated factorization has a signature allowed by the determinant of the target.
    pub congruences_ok: bool,
    /// The orbits are pairwise disjoint and cover the enumeration.
    pub partition_ok: bool,
    pub pass: bool,
}

/// Signatures of length `len` whose determinant product `zeta^(n + 2m) (-1)^k`
/// equals `det`. For the Coxeter element `A B` these are exactly the admissible ones.
pub fn signatures_for_det(det: &CycloNum, len: usize) -> Vec<ClassSignature> {
    let len = len as u32;
    let mut out = Vec::new();
    for n in 0..=len {
        for m in 0..=len - n {
            let k = len - n - m;
            let mut d = CycloNum::zeta().pow((n + 2 * m) % 3);
            if k % 2 == 1 {
                d = -d;
            }
            if d == *det {
                out.push(ClassSignature::new(n, m, k));
            }
        }
    }
    out
}

/// Checks, for one length, that each signature class of factorizations of
/// `target` is a single Hurwitz orbit.
///
/// For the Coxeter element `A B` each orbit is grown from the standard
/// factorization; for other targets from the smallest enumerated code.
pub fn verify_theorem_at_length(
    g6: &G6,
    target: ElementId,
    len: usize,
    opts: &OrbitOptions,
) -> Result<LengthReport> {
    if !(2..=8).contains(&len) {
        return Err(Error::Precondition(format!(
            "verification length must be in 2..=8, got {len}"
        )));
    }
    let sys = g6.system();
    let enumeration = enumerate_factorizations(sys, target, len, opts.exec)?;
    let expected = signatures_for_det(sys.table().det(target), len);
    let congruences_ok = enumeration.by_signature.keys().all(|s| expected.contains(s));

    let mut rows = Vec::new();
    let mut orbit_sum = 0;
    let mut partition_ok = congruences_ok;
    for &sig in &expected {
        let members = enumeration.by_signature.get(&sig).map(Vec::as_slice).unwrap_or(&[]);
        let dp_count = count_factorizations(sys, target, sig);
        let root = if target == g6.coxeter() {
            Some(g6.standard_factorization(sig)?)
        } else {
            members
                .first()
                .map(|&c| Factorization::from_refls(sys, packed::unpack(c, len)))
        };
        let orbit_size = match &root {
            Some(f) => {
                let orbit = orbit_bfs(sys, f, &OrbitOptions { want_paths: false, ..*opts })?;
                let same = orbit.members == members;
                partition_ok &= same;
                orbit.size()
            }
            None => 0,
        };
        orbit_sum += orbit_size;
        let pass = orbit_size == members.len() && dp_count == members.len() as u128 && (orbit_size > 0 || root.is_none());
        rows.push(SignatureRow {
            length: len,
            signature: sig,
            orbit_size,
            enum_count: members.len(),
            dp_count,
            pass,
        });
    }
    let total_enumerated = enumeration.total();
    partition_ok &= orbit_sum == total_enumerated;
    let pass = congruences_ok && partition_ok && rows.iter().all(|r| r.pass);
    Ok(LengthReport {
        length: len,
        target,
        rows,
        total_enumerated,
        orbit_sum,
        congruences_ok,
        partition_ok,
        pass,
    })
}
