use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{claim, ClaimResult, Context, Status};
use crate::arith::factorize;
use crate::ring::RingSpec;
use crate::{Caps, Error, Result};

/// Cyclic rings `Z_n` for `2 <= n <= cyclic_max`, plus explicit products.
#[derive(Debug, Clone, Default)]
pub struct RingFamily {
    pub cyclic_max: Option<u64>,
    pub products: Vec<RingSpec>,
}

impl RingFamily {
    pub fn cyclic(n_max: u64) -> Self {
        RingFamily {
            cyclic_max: Some(n_max),
            products: Vec::new(),
        }
    }

    pub fn with_products(mut self, products: Vec<RingSpec>) -> Self {
        self.products.extend(products);
        self
    }

    /// Members sorted by order, then by spec string.
    pub fn rings(&self) -> Result<Vec<RingSpec>> {
        let mut rings = match self.cyclic_max {
            Some(n) if n < 2 => return Err(Error::Domain(format!("cyclic bound {n} is below 2"))),
            Some(n) => (2..=n).map(RingSpec::cyclic).collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };
        rings.extend(self.products.iter().cloned());
        let mut keyed: Vec<(u64, String, RingSpec)> = rings
            .into_iter()
            .map(|r| (r.order(), r.to_string(), r))
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        keyed.dedup_by(|a, b| a.1 == b.1);
        if keyed.is_empty() {
            return Err(Error::domain("empty ring family"));
        }
        Ok(keyed.into_iter().map(|(_, _, r)| r).collect())
    }
}

/// Products of at least two prime-power rings, listed in non-decreasing
/// modulus order, with total order at most `max_order`.
pub fn product_specs(max_order: u64) -> Vec<RingSpec> {
    let prime_powers: Vec<u64> = (2..=max_order / 2)
        .filter(|&q| factorize(q).is_ok_and(|f| f.distinct() == 1))
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend_products(&prime_powers, 0, 1, max_order, &mut stack, &mut out);
    out.sort_by_key(|a| (a.order(), a.to_string()));
    out
}

fn extend_products(
    qs: &[u64],
    from: usize,
    order: u64,
    max: u64,
    stack: &mut Vec<u64>,
    out: &mut Vec<RingSpec>,
) {
    if stack.len() >= 2 {
        out.push(RingSpec::new(stack.clone()).expect("prime powers are valid moduli"));
    }
    for (i, &q) in qs.iter().enumerate().skip(from) {
        if order * q > max {
            break;
        }
        stack.push(q);
        extend_products(qs, i, order * q, max, stack, out);
        stack.pop();
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub capped: usize,
}

impl Summary {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped => self.skipped += 1,
            Status::Capped => self.capped += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub results: Vec<ClaimResult>,
    pub summary: Summary,
    pub per_claim: BTreeMap<String, Summary>,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }
}

/// Runs every claim on every ring. Rings are processed in parallel; results are
/// ordered by ring (order, then spec string) and then by the order of `ids`.
pub fn sweep(ids: &[&str], family: &RingFamily, caps: &Caps) -> Result<SweepReport> {
    let claims = ids.iter().map(|id| claim(id)).collect::<Result<Vec<_>>>()?;
    let rings = family.rings()?;
    let per_ring: Vec<Vec<ClaimResult>> = rings
        .par_iter()
        .map(|ring| {
            let ctx = Context::new(ring, caps);
            claims
                .iter()
                .map(|c| ctx.evaluate(c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let results: Vec<ClaimResult> = per_ring.into_iter().flatten().collect();
    let mut summary = Summary::default();
    let mut per_claim: BTreeMap<String, Summary> = ids
        .iter()
        .map(|id| (id.to_string(), Summary::default()))
        .collect();
    for r in &results {
        summary.add(r.status);
        per_claim
            .get_mut(&r.claim)
            .expect("claim listed")
            .add(r.status);
    }
    Ok(SweepReport {
        results,
        summary,
        per_claim,
    })
}
