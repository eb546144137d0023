use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::par::{self, Exec};

use super::packed::{self, PackedCode, MAX_PACKED_LEN};
use super::{Direction, Factorization, Move, MoveSeq, Refl, ReflectionSystem};

pub const DEFAULT_STATE_CAP: usize = 100_000_000;

#[derive(Clone, Copy, Debug)]
pub struct OrbitOptions {
    pub state_cap: usize,
    /// Record a BFS parent for every member (single-threaded).
    pub want_paths: bool,
    pub exec: Exec,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            state_cap: DEFAULT_STATE_CAP,
            want_paths: false,
            exec: Exec::default(),
        }
    }
}

/// A Hurwitz orbit as a sorted list of packed codes.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub len: usize,
    pub root: PackedCode,
    pub members: Vec<PackedCode>,
    /// For each non-root member, the move that reached it from its BFS parent.
    pub parents: Option<FxHashMap<PackedCode, Move>>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, code: PackedCode) -> bool {
        self.members.binary_search(&code).is_ok()
    }

    /// Moves taking `code` to the root along BFS parent edges.
    /// `None` when the code is outside the orbit or paths were not recorded.
    pub fn path_to_root(&self, sys: &ReflectionSystem, mut code: PackedCode) -> Option<MoveSeq> {
        let parents = self.parents.as_ref()?;
        let mut moves = MoveSeq::new();
        while code != self.root {
            let mv = *parents.get(&code)?;
            let back = mv.inverted();
            code = packed::apply(sys, code, back);
            moves.push(back);
        }
        Some(moves)
    }
}

fn moves_for(len: usize) -> Vec<Move> {
    (1..len)
        .flat_map(|p| [Move::forward(p), Move::inverse(p)])
        .collect()
}

/// Breadth-first exploration of the Hurwitz orbit of `start` using forward and
/// inverse moves at every position.
pub fn orbit_bfs(sys: &ReflectionSystem, start: &Factorization, opts: &OrbitOptions) -> Result<Orbit> {
    let len = start.len();
    if len > MAX_PACKED_LEN {
        return Err(Error::LengthCap {
            len,
            cap: MAX_PACKED_LEN,
        });
    }
    let root = packed::pack(&start.refls);
    if opts.want_paths {
        orbit_with_paths(sys, root, len, opts.state_cap)
    } else {
        orbit_levels(sys, root, len, opts.state_cap, opts.exec)
    }
}

fn orbit_with_paths(sys: &ReflectionSystem, root: PackedCode, len: usize, cap: usize) -> Result<Orbit> {
    let moves = moves_for(len);
    let mut parents: FxHashMap<PackedCode, Move> = FxHashMap::default();
    let mut seen: FxHashSet<PackedCode> = FxHashSet::default();
    seen.insert(root);
    let mut queue = VecDeque::from([root]);
    while let Some(code) = queue.pop_front() {
        for &mv in &moves {
            let next = packed::apply(sys, code, mv);
            if seen.insert(next) {
                if seen.len() > cap {
                    return Err(Error::StateCapExceeded { cap });
                }
                parents.insert(next, mv);
                queue.push_back(next);
            }
        }
    }
    let mut members: Vec<PackedCode> = seen.into_iter().collect();
    members.sort_unstable();
    Ok(Orbit {
        len,
        root,
        members,
        parents: Some(parents),
    })
}

fn orbit_levels(
    sys: &ReflectionSystem,
    root: PackedCode,
    len: usize,
    cap: usize,
    exec: Exec,
) -> Result<Orbit> {
    let mut seen: FxHashSet<PackedCode> = FxHashSet::default();
    seen.insert(root);
    let mut frontier = vec![root];
    const CHUNK: usize = 4096;
    while !frontier.is_empty() {
        let chunks: Vec<&[PackedCode]> = frontier.chunks(CHUNK).collect();
        let seen_ref = &seen;
        let found = par::map_collect(exec, &chunks, |chunk| {
            let mut out = Vec::new();
            for &code in chunk.iter() {
                for i in 0..len.saturating_sub(1) {
                    for dir in [Direction::Forward, Direction::Inverse] {
                        let next = packed::apply_at(sys, code, i, dir);
                        if !seen_ref.contains(&next) {
                            out.push(next);
                        }
                    }
                }
            }
            out
        });
        let mut next: Vec<PackedCode> = found.into_iter().flatten().collect();
        par::sort_dedup(exec, &mut next);
        seen.extend(next.iter().copied());
        if seen.len() > cap {
            return Err(Error::StateCapExceeded { cap });
        }
        frontier = next;
    }
    let mut members: Vec<PackedCode> = seen.into_iter().collect();
    par::sort_dedup(exec, &mut members);
    Ok(Orbit {
        len,
        root,
        members,
        parents: None,
    })
}

/// Period of `(x, y)` under repeated forward moves at position 1.
pub fn pair_orbit_walk(sys: &ReflectionSystem, x: Refl, y: Refl) -> usize {
    let start = (x, y);
    let mut cur = sys.forward_pair(x, y);
    let mut steps = 1;
    while cur != start {
        cur = sys.forward_pair(cur.0, cur.1);
        steps += 1;
    }
    steps
}
