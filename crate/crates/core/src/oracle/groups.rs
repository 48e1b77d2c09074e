//! Permutation realizations of `N_2`, its subgroups, and `PSL(2,8)`.
//!
//! `N_2 = AGammaL(1,8)` acts on the eight points of `F_8` by
//! `x -> a x^(2^j) + b`: translations give `<s1, s2, s3>`, `r: x -> alpha x`
//! has order 7 with `r s1 = s2 r` for `s_k: x -> x + alpha^(k-1)`, and
//! `l: x -> x^2` satisfies `l r l^-1 = r^2`. `PSL(2,8)` acts on the nine
//! points of the projective line.

use std::collections::{BTreeMap, HashSet};

use crate::catalog::N2Subgroup;
use crate::iota::{CensusEntry, CensusGroup, OrderCensus};

/// `F_8 = F_2[x] / (x^3 + x + 1)`, elements as 3-bit polynomials.
pub mod f8 {
    pub const ALPHA: u8 = 0b010;

    pub fn mul(a: u8, b: u8) -> u8 {
        let mut acc = 0u8;
        for i in 0..3 {
            if b >> i & 1 == 1 {
                acc ^= a << i;
            }
        }
        for bit in [4u8, 3] {
            if acc >> bit & 1 == 1 {
                acc ^= 0b1011 << (bit - 3);
            }
        }
        acc
    }

    pub fn pow(a: u8, e: u32) -> u8 {
        (0..e).fold(1, |acc, _| mul(acc, a))
    }

    pub fn inv(a: u8) -> Option<u8> {
        (1..8).find(|&b| mul(a, b) == 1)
    }

    pub fn trace(a: u8) -> u8 {
        a ^ mul(a, a) ^ pow(a, 4)
    }
}

pub type Perm = Vec<u8>;

pub fn compose(f: &Perm, g: &Perm) -> Perm {
    // (f g)(x) = f(g(x))
    g.iter().map(|&x| f[x as usize]).collect()
}

pub fn perm_order(p: &Perm) -> usize {
    let id: Perm = (0..p.len() as u8).collect();
    let mut cur = p.clone();
    let mut k = 1;
    while cur != id {
        cur = compose(p, &cur);
        k += 1;
    }
    k
}

/// All elements of the group generated by `gens`.
pub fn generate(gens: &[Perm]) -> Vec<Perm> {
    let degree = gens.first().map_or(0, |g| g.len());
    let id: Perm = (0..degree as u8).collect();
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                frontier.push(y);
            }
        }
    }
    out.sort();
    out
}

fn affine(f: impl Fn(u8) -> u8) -> Perm {
    (0..8).map(f).collect()
}

pub fn translation(b: u8) -> Perm {
    affine(|x| x ^ b)
}

pub fn rotation() -> Perm {
    affine(|x| f8::mul(f8::ALPHA, x))
}

pub fn frobenius() -> Perm {
    affine(|x| f8::mul(x, x))
}

/// Generators of the realized subgroup of `N_2` of the given order class.
pub fn n2_generators(k: N2Subgroup) -> Vec<Perm> {
    let all_translations = vec![
        translation(1),
        translation(f8::ALPHA),
        translation(f8::mul(f8::ALPHA, f8::ALPHA)),
    ];
    let trace_zero: Vec<Perm> = (1..8u8).filter(|&b| f8::trace(b) == 0).map(translation).collect();
    let mut gens = match k {
        N2Subgroup::Order168 | N2Subgroup::Order56 | N2Subgroup::Order24 | N2Subgroup::Order8 => all_translations,
        N2Subgroup::Order12 | N2Subgroup::Order4 => trace_zero,
    };
    match k {
        N2Subgroup::Order168 => gens.extend([rotation(), frobenius()]),
        N2Subgroup::Order56 => gens.push(rotation()),
        N2Subgroup::Order24 | N2Subgroup::Order12 => gens.push(frobenius()),
        N2Subgroup::Order8 | N2Subgroup::Order4 => {}
    }
    gens
}

const INFINITY: u8 = 8;

/// `PSL(2,8)` on `P^1(F_8)`, point 8 being infinity.
pub fn psl28_generators() -> Vec<Perm> {
    let fix_inf = |f: &dyn Fn(u8) -> u8| -> Perm { (0..9).map(|x| if x == INFINITY { x } else { f(x) }).collect() };
    let shift = fix_inf(&|x| x ^ 1);
    let scale = fix_inf(&|x| f8::mul(f8::ALPHA, x));
    let invert: Perm = (0..9)
        .map(|x| match x {
            0 => INFINITY,
            INFINITY => 0,
            x => f8::inv(x).expect("nonzero"),
        })
        .collect();
    vec![shift, scale, invert]
}

pub fn realize(group: CensusGroup) -> Vec<Perm> {
    match group {
        CensusGroup::Psl28 => generate(&psl28_generators()),
        CensusGroup::N2(k) => generate(&n2_generators(k)),
    }
}

/// Element-order census of the realized group.
///
/// An order-3 element is flagged central when it is the cube of an element of
/// order 9, which is how the Sylow 3-centre of `PSL(2,8)` shows up.
pub fn permutation_census(group: CensusGroup) -> OrderCensus {
    let elements = realize(group);
    let orders: Vec<usize> = elements.iter().map(perm_order).collect();
    let cubes_of_nine: HashSet<Perm> = elements
        .iter()
        .zip(&orders)
        .filter(|(_, &o)| o == 9)
        .map(|(g, _)| compose(g, &compose(g, g)))
        .collect();
    let mut tally: BTreeMap<(usize, Option<bool>), i128> = BTreeMap::new();
    for (g, &o) in elements.iter().zip(&orders) {
        let central = (o == 3).then(|| cubes_of_nine.contains(g));
        *tally.entry((o, central)).or_default() += 1;
    }
    let entries = tally
        .into_iter()
        .map(|((order, central), count)| CensusEntry {
            order: order as i128,
            count,
            central,
        })
        .collect();
    OrderCensus { group, entries }
}

/// Census entries as a map, for comparing tables regardless of ordering.
pub fn census_map(census: &OrderCensus) -> BTreeMap<(i128, Option<bool>), i128> {
    let mut map = BTreeMap::new();
    for e in &census.entries {
        *map.entry((e.order, e.central)).or_default() += e.count;
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iota::census;

    #[test]
    fn field_arithmetic() {
        assert_eq!(f8::pow(f8::ALPHA, 7), 1);
        assert_eq!(f8::pow(f8::ALPHA, 3), f8::ALPHA ^ 1);
        assert!((1..8).all(|a| f8::mul(a, f8::inv(a).unwrap()) == 1));
        assert_eq!((1..8u8).filter(|&b| f8::trace(b) == 0).count(), 3);
    }

    #[test]
    fn presentation_relations() {
        let r = rotation();
        let l = frobenius();
        let s: Vec<Perm> = (0..3).map(|k| translation(f8::pow(f8::ALPHA, k))).collect();
        assert_eq!(perm_order(&r), 7);
        assert_eq!(perm_order(&l), 3);
        assert_eq!(compose(&r, &s[0]), compose(&s[1], &r));
        let l_inv = compose(&l, &l);
        assert_eq!(compose(&compose(&l, &r), &l_inv), compose(&r, &r));
    }

    #[test]
    fn realized_censuses_match_tables() {
        for group in CensusGroup::ALL {
            let elements = realize(group);
            assert_eq!(elements.len() as i128, group.order(), "{group}");
            assert_eq!(
                census_map(&permutation_census(group)),
                census_map(&census(group)),
                "{group}"
            );
        }
    }
}
