//! Marked factorizations: one entry stands for `multiplicity` equal adjacent
//! reflections that were contracted into their product.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hurwitz::{Direction, Factorization, Move, MoveSeq, Refl, ReflectionSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedFactorization {
    pub base: Factorization,
    /// Zero-based index of the marked entry in `base`.
    pub mark_pos: usize,
    pub multiplicity: usize,
    /// The reflection whose `multiplicity`-fold product is the marked entry.
    pub expansion_entry: Refl,
}

impl MarkedFactorization {
    /// The marked entry equals `expansion_entry^multiplicity`, and that root is
    /// the only one available: order 3 for pairs, order 2 for triples.
    pub fn check(&self, sys: &ReflectionSystem) -> Result<()> {
        let table = sys.table();
        let e = sys.element(self.expansion_entry);
        let marked = sys.element(self.base.refls[self.mark_pos]);
        let unique = match self.multiplicity {
            2 => table.order(e) == 3,
            3 => table.order(e) == 2 && marked == e,
            _ => false,
        };
        if table.pow(e, self.multiplicity as u32) != marked || !unique {
            return Err(Error::Verification(format!(
                "marked entry at {} is not a {}-fold power of {}",
                self.mark_pos, self.multiplicity, self.expansion_entry
            )));
        }
        Ok(())
    }

    /// Replaces the marked entry by `multiplicity` copies of the expansion entry.
    pub fn expand(&self) -> Factorization {
        let mut refls = Vec::with_capacity(self.base.len() + self.multiplicity - 1);
        refls.extend_from_slice(&self.base.refls[..self.mark_pos]);
        refls.extend(std::iter::repeat_n(self.expansion_entry, self.multiplicity));
        refls.extend_from_slice(&self.base.refls[self.mark_pos + 1..]);
        Factorization {
            target: self.base.target,
            refls,
        }
    }

    pub fn replay(&self, sys: &ReflectionSystem, moves: &MoveSeq) -> Result<MarkedFactorization> {
        let mut out = self.clone();
        for &mv in moves.iter() {
            out = apply_marked_move(sys, &out, mv)?;
        }
        Ok(out)
    }
}

/// A Hurwitz move that carries the mark along with the marked entry.
pub fn apply_marked_move(
    sys: &ReflectionSystem,
    mf: &MarkedFactorization,
    mv: Move,
) -> Result<MarkedFactorization> {
    let base = mf.base.apply_move(sys, mv)?;
    let i = mv.left();
    let old = &mf.base.refls;
    let (mark_pos, expansion_entry) = if mf.mark_pos == i {
        let s = old[i + 1];
        match mv.dir {
            // (t*, s) -> (s, (s^-1 t s)*)
            Direction::Forward => (i + 1, sys.conj(mf.expansion_entry, s)),
            // (t*, s) -> (t s t^-1, t*)
            Direction::Inverse => (i + 1, mf.expansion_entry),
        }
    } else if mf.mark_pos == i + 1 {
        let s = old[i];
        match mv.dir {
            // (s, t*) -> (t*, t^-1 s t)
            Direction::Forward => (i, mf.expansion_entry),
            // (s, t*) -> ((s t s^-1)*, s)
            Direction::Inverse => (i, sys.conj(mf.expansion_entry, sys.inverse(s))),
        }
    } else {
        (mf.mark_pos, mf.expansion_entry)
    };
    Ok(MarkedFactorization {
        base,
        mark_pos,
        multiplicity: mf.multiplicity,
        expansion_entry,
    })
}

/// Replaces the run of `multiplicity` equal entries starting at `position` by
/// their product, marked. Pairs must be order-3 reflections (`t t = t^-1`);
/// triples must be order-2 reflections (`t t t = t`).
pub fn contract(
    sys: &ReflectionSystem,
    f: &Factorization,
    position: usize,
    multiplicity: usize,
) -> Result<MarkedFactorization> {
    if !(2..=3).contains(&multiplicity) || position + multiplicity > f.len() {
        return Err(Error::Precondition(format!(
            "cannot contract {multiplicity} entries at {position} of a length-{} factorization",
            f.len()
        )));
    }
    let t = f.refls[position];
    if f.refls[position..position + multiplicity].iter().any(|&x| x != t) {
        return Err(Error::Precondition(format!(
            "entries {position}..{} are not equal",
            position + multiplicity
        )));
    }
    let table = sys.table();
    let expected_order = if multiplicity == 2 { 3 } else { 2 };
    if table.order(sys.element(t)) != expected_order {
        return Err(Error::Precondition(format!(
            "a run of {multiplicity} copies of {t} does not contract to a reflection"
        )));
    }
    let product = table.pow(sys.element(t), multiplicity as u32);
    let marked = sys.refl_of(product).ok_or_else(|| {
        Error::Verification(format!("{multiplicity}-fold product of {t} is not a reflection"))
    })?;
    let mut refls = Vec::with_capacity(f.len() - multiplicity + 1);
    refls.extend_from_slice(&f.refls[..position]);
    refls.push(marked);
    refls.extend_from_slice(&f.refls[position + multiplicity..]);
    let mf = MarkedFactorization {
        base: Factorization {
            target: f.target,
            refls,
        },
        mark_pos: position,
        multiplicity,
        expansion_entry: t,
    };
    mf.check(sys)?;
    Ok(mf)
}
