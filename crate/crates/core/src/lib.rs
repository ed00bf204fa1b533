//! Formation width of sequences.
//!
//! An `(r, s)`-formation is a concatenation of `s` permutations of the same
//! `r` letters. The formation width `fw(u)` of a sequence `u` is the smallest
//! `s` for which every `(r, s)`-formation contains `u` for some `r`; it is
//! enough to check binary formations on `u`'s own letters, which is what all
//! algorithms here do.

pub mod bench;
pub mod cases;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod formation;
pub mod fw;
pub mod par;
pub mod perm;
pub mod sequence;
pub mod text;

pub use error::{Error, Result};
pub use formation::{BinaryFormation, MatchVector};
pub use fw::{fw, fw_binary, fw_pv, fw_tree, Algorithm, FwOptions, FwResult};
pub use perm::PermutationTable;
pub use sequence::{alternation_length, contains_general, contains_isomorphic, Sequence};
pub use text::parse_sequence;
