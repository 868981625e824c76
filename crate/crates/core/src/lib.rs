// SPDX-License-Identifier: Apache-2.0

//! Combinatorial machinery for finitely generated free groups.
//!
//! * [`word`]: freely reduced words, cyclic reduction, conjugacy, commutators
//!   and the two text syntaxes.
//! * [`whitehead_graph`]: Whitehead graphs, connectivity and cut vertices.
//! * [`automorphism`]: Whitehead automorphisms (signed permutations and
//!   subset-multiplier maps), their enumeration and action on words.
//! * [`primitivity`]: Whitehead length minimization, the primitivity test,
//!   Nielsen's basis criterion in `F_2` and a brute-force orbit oracle.
//! * [`stallings`]: folded subgroup graphs, membership, rank and generation.
//! * [`verify`]: batch checks that turn combinatorial statements about free
//!   groups into reproducible pass/fail reports.
//!
//! ```
//! use whitehead::prelude::*;
//!
//! let w: Word = "ababa".parse().unwrap();
//! assert!(is_primitive(&w, 2).unwrap());
//! assert!(!is_primitive(&"aabb".parse().unwrap(), 2).unwrap());
//! ```

pub mod automorphism;
pub mod enumerate;
pub mod primitivity;
pub mod stallings;
pub mod verify;
pub mod whitehead_graph;
pub mod word;

use thiserror::Error;

pub use word::{CyclicWord, Letter, ParseError, RankError, Word};

pub mod prelude {
    pub use crate::automorphism::{enumerate_kind2, SignedPermutation, SubsetMultiplier, WhiteheadAut};
    pub use crate::primitivity::{is_basis_pair_f2, is_primitive, whitehead_minimize};
    pub use crate::stallings::{generates_whole_group, SubgroupGraph};
    pub use crate::whitehead_graph::{CutVertexVerdict, WhiteheadGraph};
    pub use crate::word::{CyclicWord, Letter, Word};
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("{what} {value} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("{what} {value} is below the minimum of {min}")]
    BelowMinimum { what: &'static str, value: u64, min: u64 },
    #[error("invalid Whitehead automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("subgroup graph is not folded")]
    NotFolded,
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
}

pub(crate) fn check_cap(what: &'static str, value: u64, cap: u64) -> Result<(), Error> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
