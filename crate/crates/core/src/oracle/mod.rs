//! Brute-force recomputation of the closed forms.
//!
//! Nothing here calls a closed-form `Delta`: the oracles walk the elements
//! of each subgroup and add up [`crate::iota`] contributions, count
//! congruence solutions with literal loops, and enumerate subgroups by
//! closure.

pub mod groups;
pub mod subgroups;

pub use subgroups::{check_standard_exponent_bijection, enumerate_subgroups_bruteforce, BijectionCheck, ElementSet};

use crate::catalog::StandardExponents;
use crate::error::{Error, Result};
use crate::iota::{self, CensusGroup, OrderClassRee, OrderClassSz};
use crate::params::{CurveFamily, CurveParams};

/// Elements `(sigma^n1 tau^a)^i (tau^n2)^j` as exponent pairs `(A, B)`, identity first.
fn sigma_cm_elements<'a>(
    params: &'a CurveParams,
    se: &'a StandardExponents,
) -> impl Iterator<Item = (i128, i128)> + 'a {
    let m = params.m;
    (0..m / se.n1())
        .flat_map(move |i| (0..m / se.n2()).map(move |j| ((i * se.n1()) % m, (i * se.a() + j * se.n2()) % m)))
}

pub fn delta_sigma_cm_bruteforce(params: &CurveParams, se: &StandardExponents) -> Result<i128> {
    se.validate(params.m)?;
    let mut delta = 0;
    for (a, b) in sigma_cm_elements(params, se).skip(1) {
        delta += iota::iota_sigma_element(params, a, b)?;
    }
    Ok(delta)
}

/// Literal count of `(i, j)` with `j n2 = i (n1 q^d - a) (mod m)`, `(0, 0)` included.
pub fn count_congruence_solutions(params: &CurveParams, se: &StandardExponents, d: u32) -> Result<i128> {
    if d >= params.field_exponent {
        return Err(Error::DegreeOutOfRange {
            d,
            limit: params.field_exponent,
        });
    }
    se.validate(params.m)?;
    let m = params.m;
    let qd = crate::arith::mod_pow(params.q, d as u64, m)?;
    let coefficient = (se.n1() * qd - se.a()).rem_euclid(m);
    let mut count = 0;
    for i in 0..m / se.n1() {
        let lhs = (i * coefficient) % m;
        for j in 0..m / se.n2() {
            if (j * se.n2()) % m == lhs {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// How the non-identity elements of a `Sigma_- x C_m` subgroup split up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementAccounting {
    /// Elements with `B = A q^d`, `A != 0`, one slot per `d`.
    pub special_per_degree: Vec<i128>,
    pub pure_tau: i128,
    pub zero_iota: i128,
    pub non_identity: i128,
}

impl ElementAccounting {
    pub fn balances(&self) -> bool {
        self.special_per_degree.iter().sum::<i128>() + self.pure_tau + self.zero_iota == self.non_identity
    }
}

pub fn sigma_cm_element_accounting(params: &CurveParams, se: &StandardExponents) -> Result<ElementAccounting> {
    se.validate(params.m)?;
    let m = params.m;
    let residues = params.frobenius_residues();
    let mut acc = ElementAccounting {
        special_per_degree: vec![0; residues.len()],
        pure_tau: 0,
        zero_iota: 0,
        non_identity: 0,
    };
    for (a, b) in sigma_cm_elements(params, se).skip(1) {
        acc.non_identity += 1;
        if a == 0 {
            acc.pure_tau += 1;
            continue;
        }
        let mut hit = false;
        for (d, &r) in residues.iter().enumerate() {
            if (a * r) % m == b {
                acc.special_per_degree[d] += 1;
                hit = true;
            }
        }
        if !hit {
            acc.zero_iota += 1;
        }
    }
    Ok(acc)
}

/// `Delta` of `G_0 x C_n` summed over the tabulated order census of `G_0`.
///
/// Each element `g` of `G_0` is paired with every `tau^(t m/n)`. Elements
/// whose order class is Singer are distributed evenly over the six
/// generators `sigma^(u m/7)` of the order-7 subgroup of `Sigma_-`.
pub fn delta_census(group: CensusGroup, params: &CurveParams, n: i128) -> Result<i128> {
    params.check_family(CurveFamily::Ree)?;
    let m = params.m;
    if n < 1 || m % n != 0 {
        return Err(Error::NotADivisor {
            what: "n",
            value: n,
            modulus: m,
        });
    }
    let step = m / n;
    let mut delta = 0;
    for entry in iota::census(group).entries {
        let class = OrderClassRee::classify(params, entry.order, entry.central)?;
        for t in 0..n {
            let b = t * step;
            delta += match class {
                OrderClassRee::Tau if t == 0 => 0,
                OrderClassRee::DividesQminus3q0plus1 => {
                    if entry.order != 7 || m % 7 != 0 || entry.count % 6 != 0 {
                        return Err(Error::InvalidParameter {
                            kind: "census",
                            reason: format!("Singer-class entry of order {} in {group}", entry.order),
                        });
                    }
                    let mut sum = 0;
                    for u in 1..7 {
                        sum += entry.count / 6 * iota::iota_sigma_element(params, u * (m / 7), b)?;
                    }
                    sum
                }
                _ => entry.count * iota::iota_ree(params, class, b)?,
            };
        }
    }
    Ok(delta)
}

/// `Delta` of `C_d x C_n` or `D_d x C_n` inside `B_0 x C_m`, element by element.
pub fn delta_b0_census(params: &CurveParams, dihedral: bool, d: i128, n: i128) -> Result<i128> {
    params.check_family(CurveFamily::Suzuki)?;
    let m = params.m;
    if d < 1 || (params.q - 1) % d != 0 {
        return Err(Error::NotADivisor {
            what: "d",
            value: d,
            modulus: params.q - 1,
        });
    }
    if n < 1 || m % n != 0 {
        return Err(Error::NotADivisor {
            what: "n",
            value: n,
            modulus: m,
        });
    }
    let mut delta = 0;
    for t in 0..n {
        let b = t * (m / n);
        if t != 0 {
            delta += iota::iota_suzuki(params, OrderClassSz::Tau, b)?;
        }
        // The d - 1 nontrivial rotations of order dividing q - 1.
        delta += (d - 1) * iota::iota_suzuki(params, OrderClassSz::DividesQminus1, b)?;
        if dihedral {
            delta += d * iota::iota_suzuki(params, OrderClassSz::Order2, b)?;
        }
    }
    Ok(delta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkewVariant {
    /// `H_{i,w} = <s1, s2, s3, r tau^(iw)>`.
    Full,
    /// `H'_{i,w} = <r tau^(iw)>`.
    Cyclic,
}

/// Element `(v, k, b)` of `H_56 x C_m`: the map `x -> alpha^k x + v` on `F_8`, times `tau^b`.
type SkewElement = (u8, u8, i128);

fn skew_mul(params: &CurveParams, x: SkewElement, y: SkewElement) -> SkewElement {
    let rotated = groups::f8::mul(groups::f8::pow(groups::f8::ALPHA, x.1 as u32), y.0);
    (x.0 ^ rotated, (x.1 + y.1) % 7, (x.2 + y.2) % params.m)
}

/// Materializes `H_{i,w}` or `H'_{i,w}` by closure.
pub fn skew_elements(
    params: &CurveParams,
    variant: SkewVariant,
    i: u8,
    w: i128,
    max_elements: u64,
) -> Result<Vec<SkewElement>> {
    params.check_family(CurveFamily::Ree)?;
    let m = params.m;
    if m % 7 != 0 {
        return Err(Error::SevenDoesNotDivideM(m));
    }
    if !(1..=6).contains(&i) || w < 1 || m % (7 * w) != 0 {
        return Err(Error::InvalidParameter {
            kind: "skew census",
            reason: format!("(i, w) = ({i}, {w}) with m = {m}"),
        });
    }
    let expected = match variant {
        SkewVariant::Full => 8 * m / w,
        SkewVariant::Cyclic => m / w,
    };
    if expected as u128 > max_elements as u128 {
        return Err(Error::CapExceeded {
            what: "skew subgroup order",
            value: expected as u128,
            cap: max_elements as u128,
        });
    }
    let mut gens: Vec<SkewElement> = vec![(0, 1, (i as i128 * w) % m)];
    if variant == SkewVariant::Full {
        gens.extend((0..3).map(|k| (groups::f8::pow(groups::f8::ALPHA, k), 0, 0)));
    }
    let index = |e: &SkewElement| (e.0 as usize * 7 + e.1 as usize) * m as usize + e.2 as usize;
    let mut seen = vec![false; 56 * m as usize];
    let identity: SkewElement = (0, 0, 0);
    seen[index(&identity)] = true;
    let mut out = vec![identity];
    let mut frontier = vec![identity];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = skew_mul(params, *g, x);
            if !seen[index(&y)] {
                seen[index(&y)] = true;
                out.push(y);
                frontier.push(y);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `Delta` of a skew subgroup by summing `iota` over its closure.
pub fn delta_skew_census(
    params: &CurveParams,
    variant: SkewVariant,
    i: u8,
    w: i128,
    max_elements: u64,
) -> Result<(i128, i128)> {
    let elements = skew_elements(params, variant, i, w, max_elements)?;
    let seven_class = OrderClassRee::classify(params, 7, None)?;
    if seven_class != OrderClassRee::DividesQminus3q0plus1 {
        return Err(Error::InvalidParameter {
            kind: "skew census",
            reason: format!("order 7 classified as {seven_class:?}"),
        });
    }
    let m = params.m;
    let mut delta = 0;
    for &(v, k, b) in &elements[1..] {
        delta += match (v, k) {
            (0, 0) => iota::iota_ree(params, OrderClassRee::Tau, b)?,
            (_, 0) => iota::iota_ree(params, OrderClassRee::Order2, b)?,
            // x -> alpha^k x + v is conjugate to r^k by a translation, and r = sigma^(m/7).
            _ => iota::iota_sigma_element(params, k as i128 * (m / 7), b)?,
        };
    }
    Ok((elements.len() as i128, delta))
}
