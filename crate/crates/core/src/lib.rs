//! Ideal graphs of finite commutative rings presented as products of residue
//! rings `Z_{n1} x ... x Z_{nk}`.
//!
//! Three graphs share the vertex set of non-zero proper ideals:
//!
//! * `SII(R)`: `I -- J` when `I ∩ J` is a second ideal,
//! * `PIS(R)`: `I -- J` when `I + J` is a prime ideal,
//! * `Γ(R)`:   `I -- J` when `I ∩ J ≠ 0`.
//!
//! [`ring`] holds the ideal lattice and the ideal-theoretic predicates (each
//! with an element-level oracle in [`ring::oracle`]), [`graph`] the invariants,
//! [`builders`] the three constructions and [`theorems`] the executable claim
//! registry with its sweep driver.

#![forbid(unsafe_code)]

pub mod arith;
pub mod builders;
mod error;
pub mod graph;
pub mod ring;
pub mod theorems;

pub use builders::{build, build_gamma, build_pis, build_sii, PredicateMode};
pub use error::{CapKind, Error, Result};
pub use graph::{Extended, Graph, GraphKind, IdealGraph, InvariantReport};
pub use ring::{Ideal, IdealClassification, RingSpec};

/// Work limits shared by every layer. All of them can be overridden.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of ideals a ring may have before enumeration refuses.
    pub ideals: usize,
    /// Maximum ring order accepted by the element-level oracles.
    pub oracle_order: u64,
    /// Maximum vertex count for the exact domination number.
    pub domination: usize,
    /// Maximum vertex count for the isomorphism search.
    pub isomorphism: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ideals: 100_000,
            oracle_order: 10_000,
            domination: 40,
            isomorphism: 32,
        }
    }
}
