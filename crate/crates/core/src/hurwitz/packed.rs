//! Factorizations packed four bits per entry into a `u64`, position 0 in the
//! lowest nibble. The length is carried separately.

use super::{Direction, Move, Refl, ReflectionSystem};

pub type PackedCode = u64;

pub const MAX_PACKED_LEN: usize = 16;

pub fn pack(refls: &[Refl]) -> PackedCode {
    debug_assert!(refls.len() <= MAX_PACKED_LEN);
    refls
        .iter()
        .enumerate()
        .fold(0, |acc, (i, r)| acc | ((r.0 as u64 & 0xf) << (4 * i)))
}

pub fn unpack(code: PackedCode, len: usize) -> Vec<Refl> {
    (0..len).map(|i| get(code, i)).collect()
}

#[inline]
pub fn get(code: PackedCode, i: usize) -> Refl {
    Refl(((code >> (4 * i)) & 0xf) as u8)
}

#[inline]
fn set(code: PackedCode, i: usize, r: Refl) -> PackedCode {
    (code & !(0xf << (4 * i))) | ((r.0 as u64) << (4 * i))
}

/// Applies a move at zero-based left index `i`.
#[inline]
pub fn apply_at(sys: &ReflectionSystem, code: PackedCode, i: usize, dir: Direction) -> PackedCode {
    let (x, y) = (get(code, i), get(code, i + 1));
    let (p, q) = match dir {
        Direction::Forward => sys.forward_pair(x, y),
        Direction::Inverse => sys.inverse_pair(x, y),
    };
    set(set(code, i, p), i + 1, q)
}

#[inline]
pub fn apply(sys: &ReflectionSystem, code: PackedCode, mv: Move) -> PackedCode {
    apply_at(sys, code, mv.left(), mv.dir)
}

pub fn signature(sys: &ReflectionSystem, code: PackedCode, len: usize) -> super::ClassSignature {
    sys.signature(&unpack(code, len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn pack_round_trip(v in proptest::collection::vec(0u8..14, 1..=16)) {
            let refls: Vec<Refl> = v.into_iter().map(Refl).collect();
            let code = pack(&refls);
            prop_assert_eq!(unpack(code, refls.len()), refls.clone());
            prop_assert_eq!(pack(&unpack(code, refls.len())), code);
        }
    }

    #[test]
    fn nibble_layout() {
        assert_eq!(pack(&[Refl(1), Refl(2)]), 0x21);
        assert_eq!(get(0x21, 1), Refl(2));
    }
}
