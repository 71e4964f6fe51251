//! Executable claim registry and the sweep driver.
//!
//! Each [`Claim`] is a check on one ring. A check first decides whether the
//! claim applies (otherwise the result is `skipped` with a reason), then
//! evaluates both directions of every biconditional literally. Failures carry
//! a [`Witness`] naming the ideals and edges involved. Cap errors raised while
//! checking become `capped` results rather than errors.

use std::cell::OnceCell;

use serde::{Deserialize, Serialize};

use crate::builders::build;
use crate::graph::{GraphKind, IdealGraph};
use crate::ring::{Ideal, RingSpec};
use crate::{Caps, Error, PredicateMode, Result};

mod claims;
mod figures;
mod sweep;

pub use figures::{Figure, FIGURES};
pub use sweep::{product_specs, sweep, RingFamily, Summary, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Capped,
}

/// The objects a failed check was evaluated on.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witness {
    pub reason: String,
    pub ideals: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub ring: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

pub struct Claim {
    pub id: &'static str,
    /// The checked property, in a line.
    pub statement: &'static str,
    /// Rings the claim is evaluated on; others are skipped.
    pub scope: &'static str,
    check: fn(&Context) -> Result<Outcome>,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).finish()
    }
}

pub(crate) enum Outcome {
    Pass(Option<String>),
    Fail(Witness),
    Skip(String),
}

pub fn registry() -> &'static [Claim] {
    claims::REGISTRY
}

pub fn claim(id: &str) -> Result<&'static Claim> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Per-ring state shared by the claims evaluated on it. Graphs and ideal lists
/// are built on first use.
pub(crate) struct Context<'a> {
    pub ring: &'a RingSpec,
    pub caps: &'a Caps,
    vertices: OnceCell<Result<Vec<Ideal>>>,
    graphs: [OnceCell<Result<IdealGraph>>; 3],
}

impl<'a> Context<'a> {
    pub fn new(ring: &'a RingSpec, caps: &'a Caps) -> Self {
        Context {
            ring,
            caps,
            vertices: OnceCell::new(),
            graphs: Default::default(),
        }
    }

    pub fn vertices(&self) -> Result<&[Ideal]> {
        self.vertices
            .get_or_init(|| self.ring.vertices(self.caps.ideals))
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn graph(&self, kind: GraphKind) -> Result<&IdealGraph> {
        let slot = &self.graphs[kind as usize];
        slot.get_or_init(|| build(self.ring, kind, PredicateMode::Fast, self.caps))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn sii(&self) -> Result<&IdealGraph> {
        self.graph(GraphKind::Sii)
    }

    pub fn pis(&self) -> Result<&IdealGraph> {
        self.graph(GraphKind::Pis)
    }

    pub fn gamma(&self) -> Result<&IdealGraph> {
        self.graph(GraphKind::Gamma)
    }

    /// A field has no vertices, and only a cyclic ring of prime order is a field.
    pub fn is_field(&self) -> bool {
        self.ring.is_cyclic() && self.ring.factorization(0).total() == 1
    }

    fn evaluate(&self, claim: &Claim) -> Result<ClaimResult> {
        let outcome = if self.is_field() && claim.id != "E-integers" {
            Ok(Outcome::Skip("no vertices".into()))
        } else {
            (claim.check)(self)
        };
        let (status, note, witness) = match outcome {
            Ok(Outcome::Pass(note)) => (Status::Pass, note, None),
            Ok(Outcome::Fail(w)) => (Status::Fail, None, Some(w)),
            Ok(Outcome::Skip(reason)) => (Status::Skipped, Some(reason), None),
            Err(e) if e.is_cap() => (Status::Capped, Some(e.to_string()), None),
            Err(e) => return Err(e),
        };
        Ok(ClaimResult {
            claim: claim.id.to_string(),
            ring: self.ring.to_string(),
            status,
            note,
            witness,
        })
    }
}

pub fn verify_claim(id: &str, ring: &RingSpec, caps: &Caps) -> Result<ClaimResult> {
    let claim = claim(id)?;
    Context::new(ring, caps).evaluate(claim)
}

/// Evaluates several claims on one ring, sharing the built graphs.
pub fn verify_claims(ids: &[&str], ring: &RingSpec, caps: &Caps) -> Result<Vec<ClaimResult>> {
    let claims = ids.iter().map(|id| claim(id)).collect::<Result<Vec<_>>>()?;
    let ctx = Context::new(ring, caps);
    claims.into_iter().map(|c| ctx.evaluate(c)).collect()
}

#[cfg(test)]
mod tests;
