use crate::error::Result;
use crate::hurwitz::{Factorization, Move, MoveSeq, ReflectionSystem};

/// Bubbles entries into class order `R1 < R2 < S` using forward moves only.
///
/// A forward move at a descent `(x, y)` gives `(y, y^-1 x y)`, which swaps the
/// class labels of the two slots, so the class word is bubble-sorted while the
/// product is kept.
pub fn sort_by_class(sys: &ReflectionSystem, f: &Factorization) -> Result<(MoveSeq, Factorization)> {
    let mut g = f.clone();
    let mut moves = MoveSeq::new();
    let mut end = g.len();
    while end > 1 {
        let mut last_swap = 0;
        for i in 0..end - 1 {
            if sys.class(g.refls[i]).rank() > sys.class(g.refls[i + 1]).rank() {
                let mv = Move::forward(i + 1);
                g.apply_move_in_place(sys, mv)?;
                moves.push(mv);
                last_swap = i + 1;
            }
        }
        end = last_swap;
    }
    Ok((moves, g))
}

pub fn is_class_sorted(sys: &ReflectionSystem, f: &Factorization) -> bool {
    f.refls
        .windows(2)
        .all(|w| sys.class(w[0]).rank() <= sys.class(w[1]).rank())
}
