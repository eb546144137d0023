//! Constructive normalization: explicit Hurwitz moves from any reflection
//! factorization of the Coxeter element to the standard form of its signature.
//!
//! Short factorizations are looked up in base-case path tables. Longer ones are
//! sorted by class, then a run of equal entries is produced and contracted to
//! a single marked reflection, the shorter factorization is normalized
//! recursively, and its moves are lifted back through the mark.

mod base;
mod lift;
mod marked;
mod search;
mod sort;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cache::CacheDir;
use crate::context::G6;
use crate::error::{Error, Result};
use crate::hurwitz::{packed::MAX_PACKED_LEN, ClassSignature, Factorization, MoveSeq, DEFAULT_STATE_CAP};

pub use base::{BasePathTable, BaseTables, BASE_MAX_LEN};
pub use lift::lift_moves;
pub use marked::{apply_marked_move, contract, MarkedFactorization};
pub use search::{find_perfect_pair_rprime, find_perfect_triple_s, WINDOW_STATE_CAP};
pub use sort::{is_class_sorted, sort_by_class};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    BaseLookup,
    Sort,
    PerfectPair,
    PerfectTriple,
    Lift,
    ExpandSort,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StepKind::BaseLookup => "base_lookup",
            StepKind::Sort => "sort",
            StepKind::PerfectPair => "perfect_pair",
            StepKind::PerfectTriple => "perfect_triple",
            StepKind::Lift => "lift",
            StepKind::ExpandSort => "expand_sort",
        };
        f.write_str(s)
    }
}

/// One step of the recursion, for auditing traces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub depth: usize,
    /// Length of the factorization the step acted on.
    pub length: usize,
    pub step: StepKind,
    /// Number of moves the step contributed.
    pub moves: usize,
    /// Zero-based start of the contracted run, for pair and triple steps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationTrace {
    pub input: Factorization,
    pub moves: MoveSeq,
    pub standard: ClassSignature,
    pub recursion_depth: usize,
    pub strategy_log: Vec<StepRecord>,
}

/// Normalizes factorizations of the Coxeter element of a [`G6`].
/// Safe to share between threads; base tables are built on first use.
#[derive(Debug)]
pub struct Normalizer<'g> {
    g6: &'g G6,
    tables: BaseTables,
}

#[derive(Default)]
struct Run {
    log: Vec<StepRecord>,
    max_depth: usize,
}

impl Run {
    fn record(&mut self, depth: usize, length: usize, step: StepKind, moves: usize, position: Option<usize>) {
        self.log.push(StepRecord {
            depth,
            length,
            step,
            moves,
            position,
        });
    }
}

impl<'g> Normalizer<'g> {
    /// In-memory base tables only.
    pub fn new(g6: &'g G6) -> Normalizer<'g> {
        Normalizer {
            g6,
            tables: BaseTables::new(None, DEFAULT_STATE_CAP),
        }
    }

    pub fn with_cache(g6: &'g G6, cache: Option<CacheDir>, state_cap: usize) -> Normalizer<'g> {
        Normalizer {
            g6,
            tables: BaseTables::new(cache, state_cap),
        }
    }

    pub fn g6(&self) -> &G6 {
        self.g6
    }

    pub fn base_table(&self, sig: ClassSignature) -> Result<std::sync::Arc<BasePathTable>> {
        self.tables.get(self.g6, sig)
    }

    pub fn normalize(&self, f: &Factorization) -> Result<NormalizationTrace> {
        let sys = self.g6.system();
        let product = sys.product(&f.refls);
        if product != self.g6.coxeter() || f.target != self.g6.coxeter() {
            return Err(Error::ProductMismatch {
                expected: self.g6.coxeter().0,
                actual: product.0,
            });
        }
        if f.len() > MAX_PACKED_LEN {
            return Err(Error::LengthCap {
                len: f.len(),
                cap: MAX_PACKED_LEN,
            });
        }
        let sig = f.signature(sys);
        let mut run = Run::default();
        let moves = self.recurse(f, 0, &mut run)?;
        let end = f.replay(sys, &moves)?;
        let standard = self.g6.standard_factorization(sig)?;
        if end != standard {
            return Err(Error::Verification(format!(
                "moves for {f} end at {end}, expected {standard}"
            )));
        }
        Ok(NormalizationTrace {
            input: f.clone(),
            moves,
            standard: sig,
            recursion_depth: run.max_depth,
            strategy_log: run.log,
        })
    }

    fn recurse(&self, f: &Factorization, depth: usize, run: &mut Run) -> Result<MoveSeq> {
        let sys = self.g6.system();
        let len = f.len();
        run.max_depth = run.max_depth.max(depth);
        let sig = f.signature(sys);
        if len <= BASE_MAX_LEN {
            let moves = self.tables.get(self.g6, sig)?.path(self.g6, f)?;
            run.record(depth, len, StepKind::BaseLookup, moves.len(), None);
            return Ok(moves);
        }

        let (mut moves, sorted) = sort_by_class(sys, f)?;
        run.record(depth, len, StepKind::Sort, moves.len(), None);

        let triple = sig.k >= 7;
        let (found, pos) = if triple {
            find_perfect_triple_s(sys, &sorted)?
        } else {
            find_perfect_pair_rprime(sys, &sorted)?
        };
        let kind = if triple {
            StepKind::PerfectTriple
        } else {
            StepKind::PerfectPair
        };
        run.record(depth, len, kind, found.len(), Some(pos));
        moves.extend(&found);

        let runned = sorted.replay(sys, &found)?;
        let multiplicity = if triple { 3 } else { 2 };
        let marked = contract(sys, &runned, pos, multiplicity)?;
        let inner = self.recurse(&marked.base, depth + 1, run)?;
        let lifted = lift_moves(&inner, pos, multiplicity, marked.base.len())?;
        run.record(depth, len, StepKind::Lift, lifted.len(), None);
        moves.extend(&lifted);

        if !triple {
            // the expanded pair sits inside the other order-3 block
            let expanded = runned.replay(sys, &lifted)?;
            let (bubble, _) = sort_by_class(sys, &expanded)?;
            run.record(depth, len, StepKind::ExpandSort, bubble.len(), None);
            moves.extend(&bubble);
        }
        Ok(moves)
    }
}
