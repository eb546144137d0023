//! Reflection factorizations and the Hurwitz action on them.

mod count;
mod enumerate;
mod orbit;
pub mod packed;
mod system;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::ElementId;

pub use count::count_factorizations;
pub use enumerate::{enumerate_factorizations, Enumeration, MAX_LENGTH};
pub use orbit::{orbit_bfs, pair_orbit_walk, Orbit, OrbitOptions, DEFAULT_STATE_CAP};
pub use packed::PackedCode;
pub use system::ReflectionSystem;
pub use verify::{verify_theorem_at_length, LengthReport, SignatureRow};

/// Canonical reflection index (0..14 for G6).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Refl(pub u8);

impl Refl {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Refl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.0)
    }
}

/// Counts `[n, m, k]` of factors in `R1`, `R2` and `S`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSignature {
    pub n: u32,
    pub m: u32,
    pub k: u32,
}

impl ClassSignature {
    pub fn new(n: u32, m: u32, k: u32) -> Self {
        ClassSignature { n, m, k }
    }

    pub fn len(&self) -> usize {
        (self.n + self.m + self.k) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `k` odd and `(n mod 3) + 2 (m mod 3) = 1 (mod 3)`: the classes a
    /// factorization of a determinant `-zeta` element can have.
    pub fn is_admissible(&self) -> bool {
        self.k % 2 == 1 && ((self.n % 3) + 2 * (self.m % 3)) % 3 == 1
    }
}

impl fmt::Display for ClassSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.m, self.k)
    }
}

impl Serialize for ClassSignature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.n, self.m, self.k].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassSignature {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [n, m, k] = <[u32; 3]>::deserialize(d)?;
        Ok(ClassSignature { n, m, k })
    }
}

impl std::str::FromStr for ClassSignature {
    type Err = Error;

    /// Parses `n,m,k`, optionally wrapped in brackets.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = t.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::parse(s, "expected `n,m,k`"));
        }
        let v: Vec<u32> = parts
            .iter()
            .map(|p| p.parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::parse(s, e.to_string()))?;
        Ok(ClassSignature::new(v[0], v[1], v[2]))
    }
}

/// All admissible signatures of the given length, in lexicographic order.
pub fn admissible_signatures(len: usize) -> Vec<ClassSignature> {
    let len = len as u32;
    let mut out = Vec::new();
    for n in 0..=len {
        for m in 0..=len - n {
            let sig = ClassSignature::new(n, m, len - n - m);
            if sig.is_admissible() {
                out.push(sig);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "fwd")]
    Forward,
    #[serde(rename = "inv")]
    Inverse,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

/// A Hurwitz move at 1-based `position`, acting on entries `position` and `position + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub position: u8,
    pub dir: Direction,
}

impl Move {
    pub fn forward(position: usize) -> Move {
        Move {
            position: position as u8,
            dir: Direction::Forward,
        }
    }

    pub fn inverse(position: usize) -> Move {
        Move {
            position: position as u8,
            dir: Direction::Inverse,
        }
    }

    /// Zero-based index of the left entry.
    pub fn left(self) -> usize {
        self.position as usize - 1
    }

    pub fn inverted(self) -> Move {
        Move {
            position: self.position,
            dir: self.dir.flip(),
        }
    }

    pub fn check(self, len: usize) -> Result<()> {
        if self.position == 0 || self.position as usize >= len {
            return Err(Error::MoveOutOfRange {
                position: self.position as usize,
                len,
            });
        }
        Ok(())
    }
}

impl Serialize for Move {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.position, self.dir).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (position, dir) = <(u8, Direction)>::deserialize(d)?;
        Ok(Move { position, dir })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dir {
            Direction::Forward => write!(f, "s{}", self.position),
            Direction::Inverse => write!(f, "s{}^-1", self.position),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveSeq(pub Vec<Move>);

impl MoveSeq {
    pub fn new() -> Self {
        MoveSeq(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, mv: Move) {
        self.0.push(mv);
    }

    pub fn extend(&mut self, other: &MoveSeq) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.0.iter()
    }

    /// The sequence that undoes this one.
    pub fn inverted(&self) -> MoveSeq {
        MoveSeq(self.0.iter().rev().map(|m| m.inverted()).collect())
    }
}

impl FromIterator<Move> for MoveSeq {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveSeq(iter.into_iter().collect())
    }
}

/// An ordered tuple of reflections together with the element it multiplies to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pub target: ElementId,
    pub refls: Vec<Refl>,
}

impl Factorization {
    /// Builds a factorization of whatever the entries multiply to.
    pub fn from_refls(sys: &ReflectionSystem, refls: Vec<Refl>) -> Factorization {
        Factorization {
            target: sys.product(&refls),
            refls,
        }
    }

    /// Builds a factorization and checks that it multiplies to `target`.
    pub fn new(sys: &ReflectionSystem, refls: Vec<Refl>, target: ElementId) -> Result<Factorization> {
        let actual = sys.product(&refls);
        if actual != target {
            return Err(Error::ProductMismatch {
                expected: target.0,
                actual: actual.0,
            });
        }
        Ok(Factorization { target, refls })
    }

    pub fn len(&self) -> usize {
        self.refls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.refls.is_empty()
    }

    pub fn signature(&self, sys: &ReflectionSystem) -> ClassSignature {
        sys.signature(&self.refls)
    }

    pub fn apply_move_in_place(&mut self, sys: &ReflectionSystem, mv: Move) -> Result<()> {
        mv.check(self.len())?;
        let i = mv.left();
        let (x, y) = (self.refls[i], self.refls[i + 1]);
        let (p, q) = match mv.dir {
            Direction::Forward => sys.forward_pair(x, y),
            Direction::Inverse => sys.inverse_pair(x, y),
        };
        self.refls[i] = p;
        self.refls[i + 1] = q;
        Ok(())
    }

    pub fn apply_move(&self, sys: &ReflectionSystem, mv: Move) -> Result<Factorization> {
        let mut out = self.clone();
        out.apply_move_in_place(sys, mv)?;
        Ok(out)
    }

    pub fn replay(&self, sys: &ReflectionSystem, moves: &MoveSeq) -> Result<Factorization> {
        let mut out = self.clone();
        for &mv in moves.iter() {
            out.apply_move_in_place(sys, mv)?;
        }
        Ok(out)
    }

    /// Class of each entry, e.g. `[R1, S]`.
    pub fn class_word(&self, sys: &ReflectionSystem) -> Vec<crate::group::ReflClass> {
        self.refls.iter().map(|&r| sys.class(r)).collect()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.refls.iter().map(Refl::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_small_lengths() {
        assert_eq!(admissible_signatures(1), vec![]);
        assert_eq!(admissible_signatures(2), vec![ClassSignature::new(1, 0, 1)]);
        assert_eq!(admissible_signatures(3), vec![ClassSignature::new(0, 2, 1)]);
        assert_eq!(
            admissible_signatures(4),
            vec![ClassSignature::new(1, 0, 3), ClassSignature::new(2, 1, 1)]
        );
    }

    #[test]
    fn signature_text() {
        let s: ClassSignature = "1,0,1".parse().unwrap();
        assert_eq!(s, ClassSignature::new(1, 0, 1));
        assert_eq!("[0,2,1]".parse::<ClassSignature>().unwrap(), ClassSignature::new(0, 2, 1));
        assert!("1,2".parse::<ClassSignature>().is_err());
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,0,1]");
    }

    #[test]
    fn move_json_shape() {
        let seq = MoveSeq(vec![Move::forward(1), Move::inverse(3)]);
        assert_eq!(serde_json::to_string(&seq).unwrap(), r#"[[1,"fwd"],[3,"inv"]]"#);
        assert_eq!(seq.inverted(), MoveSeq(vec![Move::forward(3), Move::inverse(1)]));
    }

    #[test]
    fn move_bounds() {
        assert!(Move::forward(0).check(3).is_err());
        assert!(Move::forward(3).check(3).is_err());
        assert!(Move::forward(2).check(3).is_ok());
    }
}
