//! Closure-based enumeration of the subgroups of `C_m x C_m`.

use std::collections::BTreeSet;

use crate::catalog::{enumerate_standard_exponents, StandardExponents};
use crate::error::{Error, Result};

/// A subset of `C_m x C_m`, element `(x, y)` stored at bit `x m + y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    m: usize,
    bits: Vec<u64>,
}

impl ElementSet {
    fn empty(m: usize) -> Self {
        ElementSet {
            m,
            bits: vec![0; (m * m).div_ceil(64)],
        }
    }

    fn index(&self, x: usize, y: usize) -> usize {
        x * self.m + y
    }

    fn insert(&mut self, x: usize, y: usize) -> bool {
        let i = self.index(x, y);
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.bits[w] & b == 0;
        self.bits[w] |= b;
        fresh
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        let i = self.index(x % self.m, y % self.m);
        self.bits[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn order(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn elements(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.m;
        (0..m * m)
            .filter(move |&i| self.bits[i / 64] & (1u64 << (i % 64)) != 0)
            .map(move |i| (i / m, i % m))
    }
}

/// Subgroup of `C_m x C_m` generated by `gens`.
pub fn closure(m: usize, gens: &[(usize, usize)]) -> ElementSet {
    let mut set = ElementSet::empty(m);
    set.insert(0, 0);
    let mut frontier = vec![(0usize, 0usize)];
    while let Some((x, y)) = frontier.pop() {
        for &(gx, gy) in gens {
            let next = ((x + gx) % m, (y + gy) % m);
            if set.insert(next.0, next.1) {
                frontier.push(next);
            }
        }
    }
    set
}

/// `<sigma^n1 tau^a, tau^n2>` as an element set.
pub fn subgroup_of(m: i128, se: &StandardExponents) -> ElementSet {
    let mu = m as usize;
    let gens = [
        (se.n1() as usize % mu, se.a() as usize % mu),
        (0, se.n2() as usize % mu),
    ];
    closure(mu, &gens)
}

/// `H1 + H2`, the subgroup generated by two subgroups.
fn join(a: &ElementSet, b: &ElementSet) -> ElementSet {
    let m = a.m;
    let mut out = ElementSet::empty(m);
    let right: Vec<(usize, usize)> = b.elements().collect();
    for (x, y) in a.elements() {
        for &(u, v) in &right {
            out.insert((x + u) % m, (y + v) % m);
        }
    }
    out
}

/// Every subgroup of `C_m x C_m`, found without using standard exponents.
///
/// A subgroup of a 2-generated abelian group is generated by two elements,
/// so the joins of pairs of cyclic subgroups are all of them.
pub fn enumerate_subgroups_bruteforce(m: i128, cap: i128) -> Result<BTreeSet<ElementSet>> {
    if m < 1 {
        return Err(Error::NonPositive { what: "m", value: m });
    }
    if m > cap {
        return Err(Error::CapExceeded {
            what: "m",
            value: m as u128,
            cap: cap.max(0) as u128,
        });
    }
    let mu = m as usize;
    let mut cyclic = BTreeSet::new();
    let mut seen = ElementSet::empty(mu);
    for x in 0..mu {
        for y in 0..mu {
            if seen.contains(x, y) {
                continue;
            }
            let c = closure(mu, &[(x, y)]);
            // Skip the other generators of the same cyclic subgroup.
            for (u, v) in c.elements() {
                if element_order(mu, u, v) == c.order() {
                    seen.insert(u, v);
                }
            }
            cyclic.insert(c);
        }
    }
    let cyclic: Vec<ElementSet> = cyclic.into_iter().collect();
    let mut all: BTreeSet<ElementSet> = cyclic.iter().cloned().collect();
    for (i, a) in cyclic.iter().enumerate() {
        for b in &cyclic[i + 1..] {
            if b.is_subset(a) || a.is_subset(b) {
                continue;
            }
            all.insert(join(a, b));
        }
    }
    Ok(all)
}

fn element_order(m: usize, x: usize, y: usize) -> usize {
    m / crate::arith::gcd(crate::arith::gcd(m as i128, x as i128), y as i128) as usize
}

/// Outcome of comparing closure-enumerated subgroups with standard exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionCheck {
    pub m: i128,
    pub closure_count: usize,
    pub triple_count: usize,
    /// Triples whose generated subgroups coincide with another triple's.
    pub duplicate_triples: usize,
    /// Closure subgroups not generated by any triple.
    pub unmatched_subgroups: usize,
}

impl BijectionCheck {
    pub fn holds(&self) -> bool {
        self.closure_count == self.triple_count && self.duplicate_triples == 0 && self.unmatched_subgroups == 0
    }
}

pub fn check_standard_exponent_bijection(m: i128, cap: i128) -> Result<BijectionCheck> {
    let subgroups = enumerate_subgroups_bruteforce(m, cap)?;
    let triples = enumerate_standard_exponents(m)?;
    let from_triples: BTreeSet<ElementSet> = triples.iter().map(|se| subgroup_of(m, se)).collect();
    Ok(BijectionCheck {
        m,
        closure_count: subgroups.len(),
        triple_count: triples.len(),
        duplicate_triples: triples.len() - from_triples.len(),
        unmatched_subgroups: subgroups.difference(&from_triples).count(),
    })
}
