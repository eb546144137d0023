//! Searches for runs of equal adjacent reflections that can be contracted:
//! pairs of order-3 reflections and triples of order-2 reflections.

use std::collections::BTreeMap;

use log::debug;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::group::ReflClass;
use crate::hurwitz::packed::{self, PackedCode, MAX_PACKED_LEN};
use crate::hurwitz::{Factorization, Move, MoveSeq, Refl, ReflectionSystem};

use super::sort::is_class_sorted;

/// States explored per window before giving up on it.
type Pred<'a> = Box<dyn Fn(Refl) -> bool + 'a>;

pub const WINDOW_STATE_CAP: usize = 5_000_000;

fn class_counts(sys: &ReflectionSystem, f: &Factorization) -> (usize, usize) {
    let r = f.refls.iter().filter(|&&x| sys.class(x) != ReflClass::S).count();
    (r, f.len() - r)
}

fn require_sorted(sys: &ReflectionSystem, f: &Factorization) -> Result<()> {
    if !is_class_sorted(sys, f) {
        return Err(Error::Precondition("factorization is not sorted by class".into()));
    }
    Ok(())
}

fn leftmost_pair(sys: &ReflectionSystem, refls: &[Refl]) -> Option<usize> {
    refls
        .windows(2)
        .position(|w| w[0] == w[1] && sys.class(w[0]) != ReflClass::S)
}

fn leftmost_pair_packed(sys: &ReflectionSystem, code: PackedCode, len: usize) -> Option<usize> {
    (0..len.saturating_sub(1)).find(|&j| {
        let x = packed::get(code, j);
        x == packed::get(code, j + 1) && sys.class(x) != ReflClass::S
    })
}

/// Level-synchronous BFS over a window. Returns the local moves to the first
/// goal state, taking the smallest goal position within the shallowest level.
fn window_search(
    sys: &ReflectionSystem,
    window: &[Refl],
    goal: impl Fn(PackedCode) -> Option<usize>,
    cap: usize,
) -> Result<Option<(MoveSeq, usize)>> {
    let len = window.len();
    let root = packed::pack(window);
    if let Some(p) = goal(root) {
        return Ok(Some((MoveSeq::new(), p)));
    }
    let moves: Vec<Move> = (1..len)
        .flat_map(|p| [Move::forward(p), Move::inverse(p)])
        .collect();
    let mut parents: FxHashMap<PackedCode, Move> = FxHashMap::default();
    let mut level = vec![root];
    parents.insert(root, Move::forward(1));
    while !level.is_empty() {
        let mut next = Vec::new();
        let mut best: Option<(usize, PackedCode)> = None;
        for &code in &level {
            for &mv in &moves {
                let c = packed::apply(sys, code, mv);
                if parents.contains_key(&c) {
                    continue;
                }
                parents.insert(c, mv);
                if parents.len() > cap {
                    return Err(Error::StateCapExceeded { cap });
                }
                if let Some(p) = goal(c) {
                    if best.is_none_or(|(bp, _)| p < bp) {
                        best = Some((p, c));
                    }
                }
                next.push(c);
            }
        }
        if let Some((p, mut code)) = best {
            let mut path = Vec::new();
            while code != root {
                let mv = parents[&code];
                path.push(mv);
                code = packed::apply(sys, code, mv.inverted());
            }
            path.reverse();
            return Ok(Some((MoveSeq(path), p)));
        }
        level = next;
    }
    Ok(None)
}

fn shift_moves(local: &MoveSeq, offset: usize) -> MoveSeq {
    local
        .iter()
        .map(|mv| Move {
            position: mv.position + offset as u8,
            dir: mv.dir,
        })
        .collect()
}

/// Moves producing two equal adjacent order-3 reflections, and the zero-based
/// position of the pair afterwards.
///
/// The search runs in a window made of the last `w` order-3 entries and the
/// first order-2 entry, starting at `w = min(4, r)` and widening leftwards.
/// Requires a class-sorted input with at least three order-3 entries and at
/// least one order-2 entry.
pub fn find_perfect_pair_rprime(sys: &ReflectionSystem, f: &Factorization) -> Result<(MoveSeq, usize)> {
    require_sorted(sys, f)?;
    let (r, k) = class_counts(sys, f);
    if r < 3 || k == 0 {
        return Err(Error::Precondition(format!(
            "pair search needs at least 3 order-3 entries and one order-2 entry, got {r} and {k}"
        )));
    }
    if f.len() > MAX_PACKED_LEN {
        return Err(Error::LengthCap {
            len: f.len(),
            cap: MAX_PACKED_LEN,
        });
    }
    if let Some(p) = leftmost_pair(sys, &f.refls) {
        return Ok((MoveSeq::new(), p));
    }
    for w in r.min(4)..=r {
        let lo = r - w;
        let window = &f.refls[lo..=r];
        let found = window_search(sys, window, |c| leftmost_pair_packed(sys, c, window.len()), WINDOW_STATE_CAP)?;
        if let Some((local, p)) = found {
            debug!("perfect pair in window of width {w} after {} moves", local.len());
            return Ok((shift_moves(&local, lo), lo + p));
        }
    }
    Err(Error::Verification(format!("no perfect pair reachable in {}", f)))
}

/// Moves `g[from]` to index `to < from` with forward moves. The travelling
/// entry is unchanged; each entry it passes is conjugated by it.
fn move_left(
    sys: &ReflectionSystem,
    g: &mut Factorization,
    from: usize,
    to: usize,
    moves: &mut MoveSeq,
) -> Result<()> {
    for j in (to..from).rev() {
        let mv = Move::forward(j + 1);
        g.apply_move_in_place(sys, mv)?;
        moves.push(mv);
    }
    Ok(())
}

fn find_from(g: &Factorization, start: usize, pred: impl Fn(Refl) -> bool) -> Option<usize> {
    (start..g.len()).find(|&i| pred(g.refls[i]))
}

/// Moves producing three equal adjacent order-2 reflections inside the
/// order-2 block, and the zero-based position of the triple afterwards.
///
/// Order-2 reflections fall into three sub-classes of two. Two members of one
/// sub-class commute, while conjugating by a member of another sub-class
/// swaps them. So a reflection `u` can be gathered leftwards past copies of
/// itself and of its partner without disturbing them. When some value occurs
/// three times the copies are gathered directly. Otherwise the block is
/// arranged as `(u, u, u', s)` with `u'` the partner of `u` and `s` from
/// another sub-class, and two forward moves on `(u', s)` finish the run.
///
/// Requires a class-sorted input with at least seven order-2 entries.
pub fn find_perfect_triple_s(sys: &ReflectionSystem, f: &Factorization) -> Result<(MoveSeq, usize)> {
    require_sorted(sys, f)?;
    let (s0, k) = class_counts(sys, f);
    if k < 7 {
        return Err(Error::Precondition(format!(
            "triple search needs at least 7 order-2 entries, got {k}"
        )));
    }
    let block = &f.refls[s0..];
    if let Some(j) = block.windows(3).position(|w| w[0] == w[1] && w[1] == w[2]) {
        return Ok((MoveSeq::new(), s0 + j));
    }

    let mut positions: BTreeMap<Refl, Vec<usize>> = BTreeMap::new();
    for (j, &x) in block.iter().enumerate() {
        positions.entry(x).or_default().push(s0 + j);
    }

    // Case (a): gather three copies of the cheapest value.
    let cheapest = positions
        .iter()
        .filter(|(_, ps)| ps.len() >= 3)
        .map(|(&u, ps)| {
            let cost = (ps[1] - ps[0] - 1) + (ps[2] - ps[0] - 2);
            (cost, ps[0], u)
        })
        .min();
    let mut g = f.clone();
    let mut moves = MoveSeq::new();
    if let Some((_, p1, u)) = cheapest {
        if positions.len() == 2 {
            debug!("all order-2 entries in one sub-class");
        }
        let p2 = find_from(&g, p1 + 1, |x| x == u).expect("second copy");
        move_left(sys, &mut g, p2, p1 + 1, &mut moves)?;
        let p3 = find_from(&g, p1 + 2, |x| x == u).expect("third copy");
        move_left(sys, &mut g, p3, p1 + 2, &mut moves)?;
        return Ok((moves, p1));
    }

    // Case (b): every value occurs at most twice, so with seven entries some
    // sub-class holds at least three, one value of it exactly twice.
    let mut by_sub: BTreeMap<u8, Vec<Refl>> = BTreeMap::new();
    for &x in positions.keys() {
        let sc = sys
            .sub_class(x)
            .ok_or_else(|| Error::Verification(format!("{x} has no sub-class")))?;
        by_sub.entry(sc).or_default().push(x);
    }
    let count = |x: &Refl| positions.get(x).map_or(0, Vec::len);
    let (&sub, members) = by_sub
        .iter()
        .find(|(_, xs)| xs.iter().map(count).sum::<usize>() >= 3)
        .ok_or_else(|| Error::Verification("no sub-class with three entries".into()))?;
    let u = *members
        .iter()
        .filter(|x| count(x) == 2)
        .min_by_key(|x| positions[x][0])
        .ok_or_else(|| Error::Verification("no doubled value".into()))?;
    let partner = *members
        .iter()
        .find(|&&x| x != u)
        .ok_or_else(|| Error::Verification(format!("{u} has no partner present")))?;
    let outside = |x: Refl| sys.sub_class(x) != Some(sub);

    let targets: [(usize, Pred<'_>); 4] = [
        (s0, Box::new(move |x| x == u)),
        (s0 + 1, Box::new(move |x| x == u)),
        (s0 + 2, Box::new(move |x| x == partner)),
        (s0 + 3, Box::new(outside)),
    ];
    for (to, pred) in &targets {
        let from = find_from(&g, *to, pred)
            .ok_or_else(|| Error::Verification(format!("formation entry for slot {to} missing")))?;
        move_left(sys, &mut g, from, *to, &mut moves)?;
    }
    for _ in 0..2 {
        let mv = Move::forward(s0 + 3);
        g.apply_move_in_place(sys, mv)?;
        moves.push(mv);
    }
    if g.refls[s0..s0 + 3].iter().any(|&x| x != u) {
        return Err(Error::Verification(format!("formation did not yield a triple: {g}")));
    }
    Ok((moves, s0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::G6;
    use crate::hurwitz::ClassSignature;
    use crate::normalize::sort::sort_by_class;

    fn scrambled(g: &G6, sig: ClassSignature, seed: u64) -> Factorization {
        let sys = g.system();
        let mut f = g.standard_factorization(sig).unwrap();
        let mut s = seed;
        for _ in 0..4 * f.len() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let p = 1 + ((s >> 33) as usize % (f.len() - 1));
            let mv = if (s >> 20) & 1 == 0 { Move::forward(p) } else { Move::inverse(p) };
            f.apply_move_in_place(sys, mv).unwrap();
        }
        sort_by_class(sys, &f).unwrap().1
    }

    #[test]
    fn sub_classes_commute_or_swap() {
        let g = G6::build().unwrap();
        let sys = g.system();
        let s = sys.class_members(ReflClass::S);
        for &x in &s {
            for &y in &s {
                let c = sys.conj(x, y);
                if sys.sub_class(x) == sys.sub_class(y) {
                    assert_eq!(c, x);
                } else {
                    assert_ne!(c, x);
                    assert_eq!(sys.sub_class(c), sys.sub_class(x));
                }
            }
        }
    }

    #[test]
    fn pairs_found() {
        let g = G6::build().unwrap();
        let sys = g.system();
        for seed in 0..40 {
            for sig in [ClassSignature::new(4, 0, 1), ClassSignature::new(2, 1, 3), ClassSignature::new(5, 1, 1), ClassSignature::new(1, 3, 1)] {
                let f = scrambled(&g, sig, seed);
                let (moves, p) = find_perfect_pair_rprime(sys, &f).unwrap();
                let h = f.replay(sys, &moves).unwrap();
                assert_eq!(h.refls[p], h.refls[p + 1]);
                assert_ne!(sys.class(h.refls[p]), ReflClass::S);
            }
        }
    }

    #[test]
    fn triples_found() {
        let g = G6::build().unwrap();
        let sys = g.system();
        for seed in 0..60 {
            for sig in [ClassSignature::new(1, 0, 7), ClassSignature::new(0, 2, 9), ClassSignature::new(2, 1, 7)] {
                let f = scrambled(&g, sig, seed);
                let (moves, p) = find_perfect_triple_s(sys, &f).unwrap();
                let h = f.replay(sys, &moves).unwrap();
                assert!(h.refls[p] == h.refls[p + 1] && h.refls[p] == h.refls[p + 2]);
                assert_eq!(sys.class(h.refls[p]), ReflClass::S);
            }
        }
    }

    #[test]
    fn one_forward_move_doubles_a_value() {
        // (t1, s, t2) with t1, t2 partners and s outside their sub-class
        let g = G6::build().unwrap();
        let sys = g.system();
        let s_refls = sys.class_members(ReflClass::S);
        let t1 = s_refls[0];
        let t2 = *s_refls.iter().find(|&&x| x != t1 && sys.sub_class(x) == sys.sub_class(t1)).unwrap();
        let s = *s_refls.iter().find(|&&x| sys.sub_class(x) != sys.sub_class(t1)).unwrap();
        let f = Factorization::from_refls(sys, vec![t1, s, t2]);
        let h = f.apply_move(sys, Move::forward(1)).unwrap();
        assert_eq!(h.refls[1], t2);
        assert_eq!(h.refls[2], t2);
    }

    #[test]
    fn preconditions() {
        let g = G6::build().unwrap();
        let sys = g.system();
        let f = g.standard_factorization(ClassSignature::new(1, 0, 1)).unwrap();
        assert!(matches!(find_perfect_pair_rprime(sys, &f), Err(Error::Precondition(_))));
        assert!(matches!(find_perfect_triple_s(sys, &f), Err(Error::Precondition(_))));
        let unsorted = Factorization::from_refls(sys, vec![g.b(), g.a()]);
        assert!(matches!(find_perfect_pair_rprime(sys, &unsorted), Err(Error::Precondition(_))));
    }
}
