//! Exact construction of the complex reflection group G6, exhaustive Hurwitz
//! orbit verification, and a constructive normalizer that produces explicit
//! Hurwitz-move sequences from any reflection factorization of the Coxeter
//! element to its standard form.

pub mod cache;
pub mod context;
pub mod cyclo;
pub mod error;
pub mod group;
pub mod harness;
pub mod hurwitz;
pub mod matrix;
pub mod normalize;
pub mod par;
pub mod parse;

pub use context::G6;
pub use cyclo::{CycloNum, Rational};
pub use error::{Error, Result};
pub use group::{build_group_table, ElementId, GroupTable, ReflClass};
pub use hurwitz::{ClassSignature, Direction, Factorization, Move, MoveSeq, Refl, ReflectionSystem};
pub use matrix::Mat2;
pub use normalize::{NormalizationTrace, Normalizer};
pub use par::Exec;
