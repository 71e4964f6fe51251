//! Finite rings `Z_{n1} x ... x Z_{nk}` and their ideal lattices.
//!
//! Every ideal of such a ring is a product of principal ideals `<d1> x ... x <dk>`
//! with `di | ni`, so an ideal is named by its divisor tuple. The zero ideal is
//! `(n1,...,nk)` and the unit ideal `(1,...,1)`; containment is divisibility
//! (`<a> ⊇ <b>` iff `a | b`), intersection is the componentwise lcm and sum the
//! componentwise gcd.
//!
//! The ideal-theoretic predicates here are closed forms over divisor tuples.
//! They are only trusted because [`oracle`] re-derives each of them from the
//! element-level definitions and the test suites compare the two.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{self, Factorization, MAX_INT};
use crate::{CapKind, Error, Result};

pub mod oracle;

/// A finite commutative ring given as a product of residue rings.
///
/// Divisor lists and factorizations of every component are computed once at
/// construction and never mutated afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    moduli: Vec<u64>,
    factorizations: Vec<Factorization>,
    divisors: Vec<Vec<u64>>,
    order: u64,
}

/// An ideal named by its canonical divisor tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    gens: Vec<u64>,
}

/// Flags describing one ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealClassification {
    pub is_zero: bool,
    pub is_unit: bool,
    pub is_second: bool,
    pub is_prime: bool,
    pub is_minimal: bool,
    pub is_maximal: bool,
}

impl Ideal {
    pub fn gens(&self) -> &[u64] {
        &self.gens
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [d] = self.gens.as_slice() {
            return write!(f, "<{d}>");
        }
        f.write_str("(")?;
        for (i, d) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.moduli.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts `"24"` or `"4x2x9"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::RingSpec {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(bad("empty spec".into()));
        }
        let moduli = trimmed
            .split(['x', 'X'])
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|e| bad(format!("component {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        RingSpec::new(moduli).map_err(|e| match e {
            Error::RingSpec { reason, .. } => bad(reason),
            other => bad(other.to_string()),
        })
    }
}

impl RingSpec {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        let bad = |reason: String| Error::RingSpec {
            input: moduli
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join("x"),
            reason,
        };
        if moduli.is_empty() {
            return Err(bad("at least one component is required".into()));
        }
        let mut order: u64 = 1;
        for &n in &moduli {
            if n < 2 {
                return Err(bad(format!("component modulus {n} must be >= 2")));
            }
            order = order
                .checked_mul(n)
                .filter(|&o| o <= MAX_INT)
                .ok_or_else(|| bad("ring order does not fit in 63 bits".into()))?;
        }
        let factorizations = moduli
            .iter()
            .map(|&n| arith::factorize(n))
            .collect::<Result<Vec<_>>>()?;
        let divisors = moduli
            .iter()
            .map(|&n| arith::divisors(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(RingSpec {
            moduli,
            factorizations,
            divisors,
            order,
        })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        RingSpec::new(vec![n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Number of residue-ring factors `k`.
    pub fn components(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.moduli.len() == 1
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn factorization(&self, component: usize) -> &Factorization {
        &self.factorizations[component]
    }

    pub fn divisors(&self, component: usize) -> &[u64] {
        &self.divisors[component]
    }

    /// Total number of ideals, `∏ τ(ni)`, saturating.
    pub fn ideal_count(&self) -> u64 {
        self.divisors
            .iter()
            .fold(1u64, |acc, d| acc.saturating_mul(d.len() as u64))
    }

    /// Builds an ideal from generators, normalizing `di := gcd(di, ni)`.
    /// A generator of 0 names the zero component.
    pub fn ideal(&self, gens: &[u64]) -> Result<Ideal> {
        if gens.len() != self.moduli.len() {
            return Err(Error::IdealSpec {
                input: format!("{gens:?}"),
                reason: format!("expected {} generators for ring {self}", self.components()),
            });
        }
        Ok(Ideal {
            gens: gens
                .iter()
                .zip(&self.moduli)
                .map(|(&d, &n)| arith::gcd(d, n))
                .collect(),
        })
    }

    /// Parses `"<8>"`, `"8"` or `"(4,2)"`.
    pub fn parse_ideal(&self, s: &str) -> Result<Ideal> {
        let bad = |reason: &str| Error::IdealSpec {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let inner = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .unwrap_or(t);
        let gens = inner
            .split(',')
            .map(|g| {
                g.trim()
                    .parse::<u64>()
                    .map_err(|_| bad("generators must be integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        self.ideal(&gens)
    }

    pub fn zero(&self) -> Ideal {
        Ideal {
            gens: self.moduli.clone(),
        }
    }

    pub fn unit(&self) -> Ideal {
        Ideal {
            gens: vec![1; self.moduli.len()],
        }
    }

    pub fn is_zero(&self, ideal: &Ideal) -> bool {
        ideal.gens == self.moduli
    }

    pub fn is_unit(&self, ideal: &Ideal) -> bool {
        ideal.gens.iter().all(|&d| d == 1)
    }

    pub fn is_vertex(&self, ideal: &Ideal) -> bool {
        !self.is_zero(ideal) && !self.is_unit(ideal)
    }

    /// All ideals in lexicographic generator order.
    pub fn enumerate_ideals(&self, cap: usize) -> Result<Vec<Ideal>> {
        let count = self.ideal_count();
        if count > cap as u64 {
            return Err(Error::cap(CapKind::Ideals, cap, count));
        }
        let mut out: Vec<Vec<u64>> = vec![Vec::with_capacity(self.components())];
        for divs in &self.divisors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    divs.iter().map(move |&d| {
                        let mut g = prefix.clone();
                        g.push(d);
                        g
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(|gens| Ideal { gens }).collect())
    }

    /// Non-zero proper ideals, in enumeration order. Empty for fields.
    pub fn vertices(&self, cap: usize) -> Result<Vec<Ideal>> {
        Ok(self
            .enumerate_ideals(cap)?
            .into_iter()
            .filter(|i| self.is_vertex(i))
            .collect())
    }

    pub fn intersect(&self, a: &Ideal, b: &Ideal) -> Ideal {
        // lcm of two divisors of n divides n, so it cannot overflow.
        Ideal {
            gens: a
                .gens
                .iter()
                .zip(&b.gens)
                .map(|(&x, &y)| x / arith::gcd(x, y) * y)
                .collect(),
        }
    }

    pub fn sum(&self, a: &Ideal, b: &Ideal) -> Ideal {
        Ideal {
            gens: a
                .gens
                .iter()
                .zip(&b.gens)
                .map(|(&x, &y)| arith::gcd(x, y))
                .collect(),
        }
    }

    /// `outer ⊇ inner`.
    pub fn contains(&self, outer: &Ideal, inner: &Ideal) -> bool {
        outer
            .gens
            .iter()
            .zip(&inner.gens)
            .all(|(&o, &i)| i % o == 0)
    }

    pub fn comparable(&self, a: &Ideal, b: &Ideal) -> bool {
        self.contains(a, b) || self.contains(b, a)
    }

    pub fn annihilator(&self, ideal: &Ideal) -> Ideal {
        Ideal {
            gens: ideal
                .gens
                .iter()
                .zip(&self.moduli)
                .map(|(&d, &n)| n / d)
                .collect(),
        }
    }

    /// Indices of components where the ideal is not zero.
    fn support<'a>(&'a self, ideal: &'a Ideal) -> impl Iterator<Item = usize> + 'a {
        (0..self.components()).filter(move |&i| ideal.gens[i] != self.moduli[i])
    }

    fn is_prime_factor(&self, component: usize, q: u64) -> bool {
        self.factorizations[component].primes().any(|p| p == q)
    }

    /// Second: exactly one non-zero component `<d>` of `Z_n`, and `n/d` prime.
    pub fn is_second(&self, ideal: &Ideal) -> bool {
        let mut support = self.support(ideal);
        match (support.next(), support.next()) {
            (Some(i), None) => self.is_prime_factor(i, self.moduli[i] / ideal.gens[i]),
            _ => false,
        }
    }

    /// Prime: exactly one component with prime generator, every other component 1.
    pub fn is_prime_ideal(&self, ideal: &Ideal) -> bool {
        let mut nontrivial = ideal.gens.iter().enumerate().filter(|(_, &d)| d != 1);
        match (nontrivial.next(), nontrivial.next()) {
            (Some((i, &d)), None) => self.is_prime_factor(i, d),
            _ => false,
        }
    }

    /// Minimal: one component `n/p` for a prime `p | n`, every other component zero.
    pub fn is_minimal(&self, ideal: &Ideal) -> bool {
        let mut support = self.support(ideal);
        match (support.next(), support.next()) {
            (Some(i), None) => {
                !self.is_unit(ideal) && self.is_prime_factor(i, self.moduli[i] / ideal.gens[i])
            }
            _ => false,
        }
    }

    pub fn is_maximal(&self, ideal: &Ideal) -> bool {
        self.is_prime_ideal(ideal)
    }

    pub fn minimal_ideals(&self) -> Vec<Ideal> {
        let mut out: Vec<Ideal> = (0..self.components())
            .flat_map(|i| {
                self.factorizations[i].primes().map(move |p| {
                    let mut gens = self.moduli.clone();
                    gens[i] /= p;
                    Ideal { gens }
                })
            })
            .filter(|m| !self.is_unit(m))
            .collect();
        out.sort();
        out
    }

    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        let mut out: Vec<Ideal> = (0..self.components())
            .flat_map(|i| {
                self.factorizations[i].primes().map(move |p| {
                    let mut gens = vec![1; self.components()];
                    gens[i] = p;
                    Ideal { gens }
                })
            })
            .collect();
        out.sort();
        out
    }

    /// Second ideals. A second ideal has exactly one non-zero component, so only
    /// those tuples are tested.
    pub fn second_ideals(&self) -> Vec<Ideal> {
        let mut out: Vec<Ideal> = (0..self.components())
            .flat_map(|i| {
                self.divisors[i].iter().map(move |&d| {
                    let mut gens = self.moduli.clone();
                    gens[i] = d;
                    Ideal { gens }
                })
            })
            .filter(|c| self.is_second(c))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Sum of all second ideals; the zero ideal when there are none.
    pub fn second_socle(&self) -> Ideal {
        self.second_ideals()
            .iter()
            .fold(self.zero(), |acc, s| self.sum(&acc, s))
    }

    pub fn is_coreduced(&self) -> bool {
        self.factorizations.iter().all(Factorization::is_squarefree)
    }

    /// `R = M1 ⊕ M2` for its only two minimal ideals.
    pub fn is_sum_of_two_minimal(&self) -> bool {
        match self.minimal_ideals().as_slice() {
            [a, b] => self.is_unit(&self.sum(a, b)) && self.is_zero(&self.intersect(a, b)),
            _ => false,
        }
    }

    /// Isomorphic copy split into prime-power components (ascending).
    pub fn primary_decomposition(&self) -> RingSpec {
        let mut parts: Vec<u64> = self
            .factorizations
            .iter()
            .flat_map(Factorization::prime_powers)
            .collect();
        parts.sort_unstable();
        RingSpec::new(parts).expect("prime-power split of a valid ring is valid")
    }

    /// `R ≅ F1 x F2` for fields `F1, F2`: exactly two local factors, both fields.
    pub fn is_direct_sum_of_two_fields(&self) -> bool {
        let mut local = self.factorizations.iter().flat_map(|f| f.exponents());
        matches!(
            (local.next(), local.next(), local.next()),
            (Some(1), Some(1), None)
        )
    }

    /// Checks `Ann(Ann(I)) = I` on every ideal, returning the first violation.
    pub fn comultiplication_violation(&self, cap: usize) -> Result<Option<Ideal>> {
        Ok(self
            .enumerate_ideals(cap)?
            .into_iter()
            .find(|i| &self.annihilator(&self.annihilator(i)) != i))
    }

    pub fn classify(&self, ideal: &Ideal) -> IdealClassification {
        IdealClassification {
            is_zero: self.is_zero(ideal),
            is_unit: self.is_unit(ideal),
            is_second: self.is_second(ideal),
            is_prime: self.is_prime_ideal(ideal),
            is_minimal: self.is_minimal(ideal),
            is_maximal: self.is_maximal(ideal),
        }
    }

    /// Image of `ideal` under the ring isomorphism that reorders components:
    /// component `j` of the target is component `perm[j]` of `self`.
    pub fn permute_ideal(&self, ideal: &Ideal, perm: &[usize]) -> Ideal {
        Ideal {
            gens: perm.iter().map(|&j| ideal.gens[j]).collect(),
        }
    }

    /// Image of `ideal` in [`RingSpec::primary_decomposition`] under the
    /// Chinese-remainder isomorphism.
    pub fn primary_image(&self, ideal: &Ideal) -> Ideal {
        let mut parts: Vec<(u64, u64)> = self
            .factorizations
            .iter()
            .zip(&ideal.gens)
            .flat_map(|(f, &d)| {
                f.prime_powers()
                    .into_iter()
                    .map(move |q| (q, arith::gcd(d, q)))
            })
            .collect();
        parts.sort_unstable_by_key(|&(q, _)| q);
        Ideal {
            gens: parts.into_iter().map(|(_, g)| g).collect(),
        }
    }
}
