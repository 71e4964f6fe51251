//! Integer primitives: trial-division factorization, divisor lists, gcd/lcm.
//!
//! Target moduli are desk-scale (at most around 10^7), so nothing here goes
//! beyond trial division.

use crate::{Error, Result};

/// Largest integer accepted anywhere in the crate (`2^63 - 1`).
pub const MAX_INT: u64 = i64::MAX as u64;

/// Prime factorization as `(prime, exponent)` pairs, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&(_, e)| e)
    }

    /// Number of distinct prime factors.
    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    /// Number of prime factors counted with multiplicity.
    pub fn total(&self) -> u32 {
        self.exponents().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents().all(|e| e == 1)
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    /// Prime powers `p^e`, one per distinct prime.
    pub fn prime_powers(&self) -> Vec<u64> {
        self.0.iter().map(|&(p, e)| p.pow(e)).collect()
    }

    /// Multiplies the factorization back out.
    pub fn recompose(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::domain(format!("cannot factorize {n}: need n >= 2")));
    }
    if n > MAX_INT {
        return Err(Error::domain(format!("{n} exceeds 2^63 - 1")));
    }
    let mut rest = n;
    let mut pairs = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization(pairs))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::domain("divisors of 0 are not a finite list"));
    }
    if n == 1 {
        return Ok(vec![1]);
    }
    let mut out = vec![1u64];
    for &(p, e) in factorize(n)?.pairs() {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple; fails instead of wrapping.
pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_squarefree(n: u64) -> bool {
    match n {
        0 => false,
        1 => true,
        _ => factorize(n).map(|f| f.is_squarefree()).unwrap_or(false),
    }
}
