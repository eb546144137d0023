use crate::error::{Error, Result};
use crate::hurwitz::{Direction, Move, MoveSeq};

/// Translates moves on a contracted factorization into moves on its expansion.
///
/// The mark starts at zero-based `mark_start` in a factorization of length
/// `contracted_len`, and stands for `multiplicity` adjacent entries. Moves not
/// touching the mark are copied, shifted past the expansion when right of it.
/// A move that swaps the mark with a neighbour `s` becomes the chain of
/// `multiplicity` moves that walks `s` across the whole run.
pub fn lift_moves(
    moves: &MoveSeq,
    mark_start: usize,
    multiplicity: usize,
    contracted_len: usize,
) -> Result<MoveSeq> {
    if mark_start >= contracted_len || multiplicity == 0 {
        return Err(Error::Precondition(format!(
            "mark at {mark_start} outside a factorization of length {contracted_len}"
        )));
    }
    let shift = multiplicity - 1;
    let mut mark = mark_start;
    let mut out = MoveSeq::new();
    let at = |left: usize, dir: Direction| Move {
        position: (left + 1) as u8,
        dir,
    };
    for &mv in moves.iter() {
        mv.check(contracted_len)?;
        let i = mv.left();
        if i + 1 < mark {
            out.push(mv);
        } else if i > mark {
            out.push(at(i + shift, mv.dir));
        } else if i + 1 == mark {
            // neighbour s sits left of the run: walk it rightwards
            for j in i..i + multiplicity {
                out.push(at(j, mv.dir));
            }
            mark = i;
        } else {
            // neighbour s sits right of the run: walk it leftwards
            for j in (mark..mark + multiplicity).rev() {
                out.push(at(j, mv.dir));
            }
            mark = i + 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moves_left_of_mark_are_unchanged() {
        let moves = MoveSeq(vec![Move::forward(1), Move::inverse(2)]);
        assert_eq!(lift_moves(&moves, 4, 3, 6).unwrap(), moves);
    }

    #[test]
    fn crossing_the_mark_from_the_left() {
        // mark at index 1 (position i+1 for the move at i = 0)
        let moves = MoveSeq(vec![Move::forward(1)]);
        assert_eq!(
            lift_moves(&moves, 1, 2, 3).unwrap(),
            MoveSeq(vec![Move::forward(1), Move::forward(2)])
        );
    }

    #[test]
    fn crossing_the_mark_from_the_right() {
        let moves = MoveSeq(vec![Move::forward(1)]);
        assert_eq!(
            lift_moves(&moves, 0, 3, 3).unwrap(),
            MoveSeq(vec![Move::forward(3), Move::forward(2), Move::forward(1)])
        );
    }

    #[test]
    fn moves_right_of_mark_shift() {
        let moves = MoveSeq(vec![Move::inverse(3)]);
        assert_eq!(lift_moves(&moves, 0, 3, 5).unwrap(), MoveSeq(vec![Move::inverse(5)]));
    }

    #[test]
    fn invalid_moves_rejected() {
        assert!(lift_moves(&MoveSeq(vec![Move::forward(4)]), 0, 2, 4).is_err());
        assert!(lift_moves(&MoveSeq::new(), 4, 2, 4).is_err());
    }
}
