//! Element-level definitions, evaluated literally over every ring element.
//!
//! Nothing in this module uses the divisor-tuple closed forms of the parent
//! module: an ideal enters only through its generator element, and every
//! predicate is a scan over elements of the ring. Cost is polynomial in the
//! ring order, so construction is refused above the oracle order cap.

use fixedbitset::FixedBitSet;

use super::{Ideal, RingSpec};
use crate::{CapKind, Error, Result};

/// A set of ring elements, indexed by mixed-radix element index.
pub type ElementSet = FixedBitSet;

/// Ring elements as mixed-radix indices with componentwise arithmetic.
#[derive(Debug, Clone)]
pub struct ElementRing {
    moduli: Vec<u64>,
    order: usize,
    residues: Vec<u64>,
}

impl ElementRing {
    pub fn new(ring: &RingSpec, order_cap: u64) -> Result<Self> {
        if ring.order() > order_cap {
            return Err(Error::cap(CapKind::OracleOrder, order_cap, ring.order()));
        }
        let moduli = ring.moduli().to_vec();
        let order = ring.order() as usize;
        let k = moduli.len();
        let mut residues = Vec::with_capacity(order * k);
        for idx in 0..order {
            let mut rest = idx as u64;
            let mut digits = vec![0; k];
            for (slot, &n) in digits.iter_mut().zip(&moduli).rev() {
                *slot = rest % n;
                rest /= n;
            }
            residues.extend(digits);
        }
        Ok(ElementRing {
            moduli,
            order,
            residues,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn residues(&self, x: usize) -> &[u64] {
        let k = self.moduli.len();
        &self.residues[x * k..(x + 1) * k]
    }

    fn encode(&self, digits: impl Iterator<Item = u64>) -> usize {
        digits
            .zip(&self.moduli)
            .fold(0u64, |acc, (d, &n)| acc * n + d) as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.residues(a), self.residues(b));
        self.encode(
            ra.iter()
                .zip(rb)
                .zip(&self.moduli)
                .map(|((&x, &y), &n)| (x as u128 * y as u128 % n as u128) as u64),
        )
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.residues(a), self.residues(b));
        self.encode(
            ra.iter()
                .zip(rb)
                .zip(&self.moduli)
                .map(|((&x, &y), &n)| (x + y) % n),
        )
    }

    /// The element whose residues are the ideal's generators.
    pub fn generator(&self, ideal: &Ideal) -> usize {
        self.encode(ideal.gens().iter().zip(&self.moduli).map(|(&d, &n)| d % n))
    }

    fn empty(&self) -> ElementSet {
        FixedBitSet::with_capacity(self.order)
    }

    /// `xR = { x·r : r ∈ R }`.
    pub fn principal(&self, x: usize) -> ElementSet {
        let mut s = self.empty();
        for r in 0..self.order {
            s.insert(self.mul(x, r));
        }
        s
    }

    /// Element set of an ideal: the principal ideal of its generator element.
    pub fn ideal_set(&self, ideal: &Ideal) -> ElementSet {
        self.principal(self.generator(ideal))
    }

    pub fn zero_set(&self) -> ElementSet {
        let mut s = self.empty();
        s.insert(0);
        s
    }

    pub fn is_zero_set(&self, s: &ElementSet) -> bool {
        s.ones().all(|x| x == 0)
    }

    pub fn intersection(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut s = a.clone();
        s.intersect_with(b);
        s
    }

    /// `{ a + b : a ∈ A, b ∈ B }` for additive subgroups `A`, `B`. Once `a + B`
    /// has been added, any `a'` already in the result lies in a coset that is
    /// already covered, so it is skipped.
    pub fn sum(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let bs: Vec<usize> = b.ones().collect();
        let mut s = self.empty();
        for x in a.ones() {
            if s.contains(x) {
                continue;
            }
            for &y in &bs {
                s.insert(self.add(x, y));
            }
        }
        s
    }

    /// `{ r : r·x = 0 for all x ∈ S }`.
    pub fn annihilator(&self, s: &ElementSet) -> ElementSet {
        let xs: Vec<usize> = s.ones().collect();
        let mut out = self.empty();
        for r in 0..self.order {
            if xs.iter().all(|&x| self.mul(r, x) == 0) {
                out.insert(r);
            }
        }
        out
    }

    /// `S ≠ 0` and for every `r`, `rS = 0` or `rS = S`.
    pub fn is_second_set(&self, s: &ElementSet) -> bool {
        if self.is_zero_set(s) {
            return false;
        }
        let xs: Vec<usize> = s.ones().collect();
        let mut image = self.empty();
        for r in 0..self.order {
            image.clear();
            for &x in &xs {
                image.insert(self.mul(r, x));
            }
            let is_zero = image.ones().all(|y| y == 0);
            if !is_zero && image != *s {
                return false;
            }
        }
        true
    }

    /// `S ≠ R` and `ab ∈ S ⇒ a ∈ S or b ∈ S`.
    pub fn is_prime_set(&self, s: &ElementSet) -> bool {
        if s.count_ones(..) == self.order {
            return false;
        }
        let outside: Vec<usize> = (0..self.order).filter(|&x| !s.contains(x)).collect();
        for (i, &a) in outside.iter().enumerate() {
            for &b in &outside[i..] {
                if s.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// `rR = r²R` for every element `r`.
    pub fn is_coreduced(&self) -> bool {
        (0..self.order).all(|r| self.principal(r) == self.principal(self.mul(r, r)))
    }
}

pub fn is_second_oracle(ring: &RingSpec, ideal: &Ideal, order_cap: u64) -> Result<bool> {
    let er = ElementRing::new(ring, order_cap)?;
    Ok(er.is_second_set(&er.ideal_set(ideal)))
}

pub fn is_prime_oracle(ring: &RingSpec, ideal: &Ideal, order_cap: u64) -> Result<bool> {
    let er = ElementRing::new(ring, order_cap)?;
    Ok(er.is_prime_set(&er.ideal_set(ideal)))
}

pub fn is_coreduced_oracle(ring: &RingSpec, order_cap: u64) -> Result<bool> {
    Ok(ElementRing::new(ring, order_cap)?.is_coreduced())
}

/// Minimal ideals by lattice scan: non-zero ideals with no non-zero proper
/// subideal, using element-set inclusion on the given ideal list.
pub fn minimal_by_lattice(er: &ElementRing, ideals: &[Ideal]) -> Vec<Ideal> {
    let sets: Vec<ElementSet> = ideals.iter().map(|i| er.ideal_set(i)).collect();
    let full = er.order();
    ideals
        .iter()
        .zip(&sets)
        .filter(|(_, s)| !er.is_zero_set(s) && s.count_ones(..) != full)
        .filter(|(_, s)| {
            !sets
                .iter()
                .any(|t| !er.is_zero_set(t) && t != *s && t.is_subset(s))
        })
        .map(|(i, _)| i.clone())
        .collect()
}

/// Maximal ideals by lattice scan: proper ideals contained in no other proper ideal.
pub fn maximal_by_lattice(er: &ElementRing, ideals: &[Ideal]) -> Vec<Ideal> {
    let sets: Vec<ElementSet> = ideals.iter().map(|i| er.ideal_set(i)).collect();
    let full = er.order();
    ideals
        .iter()
        .zip(&sets)
        .filter(|(_, s)| s.count_ones(..) != full)
        .filter(|(_, s)| {
            !sets
                .iter()
                .any(|t| t.count_ones(..) != full && t != *s && s.is_subset(t))
        })
        .map(|(i, _)| i.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(spec: &str) -> (RingSpec, ElementRing) {
        let r: RingSpec = spec.parse().unwrap();
        let er = ElementRing::new(&r, 10_000).unwrap();
        (r, er)
    }

    fn elements(s: &ElementSet) -> Vec<usize> {
        s.ones().collect()
    }

    #[test]
    fn element_sets_of_cyclic_ideals() {
        let (r, er) = setup("24");
        let four = er.ideal_set(&r.ideal(&[4]).unwrap());
        assert_eq!(elements(&four), vec![0, 4, 8, 12, 16, 20]);
        let six = er.ideal_set(&r.ideal(&[6]).unwrap());
        // {multiples of 4} ∩ {multiples of 6} mod 24 = multiples of 12
        assert_eq!(elements(&er.intersection(&four, &six)), vec![0, 12]);
        // sums of elements give every even residue
        assert_eq!(
            elements(&er.sum(&four, &six)),
            (0..24).step_by(2).collect::<Vec<_>>()
        );
    }

    #[test]
    fn annihilator_scan() {
        let (r, er) = setup("12");
        let ann = er.annihilator(&er.ideal_set(&r.ideal(&[4]).unwrap()));
        // 4r ≡ 0 mod 12
        assert_eq!(elements(&ann), vec![0, 3, 6, 9]);
        assert_eq!(er.annihilator(&er.zero_set()).count_ones(..), 12);
    }

    #[test]
    fn second_by_definition() {
        let (r, _) = setup("16");
        assert!(is_second_oracle(&r, &r.ideal(&[8]).unwrap(), 100).unwrap());
        assert!(!is_second_oracle(&r, &r.ideal(&[4]).unwrap(), 100).unwrap());
        assert!(!is_second_oracle(&r, &r.zero(), 100).unwrap());
        let r: RingSpec = "24".parse().unwrap();
        assert!(!is_second_oracle(&r, &r.ideal(&[6]).unwrap(), 100).unwrap());
        assert!(is_second_oracle(&r, &r.ideal(&[12]).unwrap(), 100).unwrap());
    }

    #[test]
    fn prime_by_definition() {
        let (r, _) = setup("24");
        assert!(is_prime_oracle(&r, &r.ideal(&[2]).unwrap(), 100).unwrap());
        assert!(!is_prime_oracle(&r, &r.ideal(&[4]).unwrap(), 100).unwrap());
        let (p, _) = setup("2x2");
        assert!(is_prime_oracle(&p, &p.ideal(&[1, 2]).unwrap(), 100).unwrap());
        assert!(!is_prime_oracle(&p, &p.unit(), 100).unwrap());
    }

    #[test]
    fn coreduced_by_definition() {
        assert!(is_coreduced_oracle(&"30".parse().unwrap(), 100).unwrap());
        assert!(!is_coreduced_oracle(&"12".parse().unwrap(), 100).unwrap());
        assert!(is_coreduced_oracle(&"2x2".parse().unwrap(), 100).unwrap());
    }

    #[test]
    fn lattice_scans() {
        let (r, er) = setup("24");
        let ideals = r.enumerate_ideals(100).unwrap();
        let min: Vec<String> = minimal_by_lattice(&er, &ideals)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(min, ["<8>", "<12>"]);
        let (r, er) = setup("12");
        let max: Vec<String> = maximal_by_lattice(&er, &r.enumerate_ideals(100).unwrap())
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(max, ["<2>", "<3>"]);
    }

    #[test]
    fn order_cap() {
        let r: RingSpec = "101x101".parse().unwrap();
        assert!(matches!(
            ElementRing::new(&r, 10_000),
            Err(Error::Cap {
                kind: CapKind::OracleOrder,
                ..
            })
        ));
    }
}
