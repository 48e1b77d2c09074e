//! Subgroup families with closed-form genus formulas.
//!
//! Subgroups of `C_m x C_m = <sigma, tau>` are indexed by their standard
//! exponents `(n1, n2, a)`: the subgroup is `<sigma^n1 tau^a, tau^n2>` with
//! `n1 | m`, `n2 | m`, `0 <= a < n2` and `n1 n2 | a m`, and each subgroup has
//! exactly one such triple. The remaining descriptors name subgroups of
//! `B_0 x C_m` (Suzuki) and of `Ree(3) x C_m` (Ree) by isomorphism type.
//!
//! Families whose genera are only known from earlier work (Frobenius
//! subgroups, `N_+`, involution centralizers, subfield subgroups and the
//! direct products inside `N_- x C_m`) are not enumerated here.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{exact_div, Error, Result};
use crate::params::{CurveFamily, CurveParams};

/// Canonical triple `(n1, n2, a)` of a subgroup of `C_m x C_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StandardExponents {
    n1: i128,
    n2: i128,
    a: i128,
}

impl StandardExponents {
    pub fn new(m: i128, n1: i128, n2: i128, a: i128) -> Result<Self> {
        let invalid = || Error::InvalidStandardExponents { n1, n2, a, m };
        if m < 1 || n1 < 1 || n2 < 1 || m % n1 != 0 || m % n2 != 0 {
            return Err(invalid());
        }
        if !(0..n2).contains(&a) || (a * m) % (n1 * n2) != 0 {
            return Err(invalid());
        }
        Ok(StandardExponents { n1, n2, a })
    }

    pub fn n1(&self) -> i128 {
        self.n1
    }

    pub fn n2(&self) -> i128 {
        self.n2
    }

    pub fn a(&self) -> i128 {
        self.a
    }

    /// Re-checks the triple against a (possibly different) modulus.
    pub fn validate(&self, m: i128) -> Result<()> {
        StandardExponents::new(m, self.n1, self.n2, self.a).map(|_| ())
    }
}

impl fmt::Display for StandardExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n1, self.n2, self.a)
    }
}

/// All standard-exponent triples for `m`, ordered lexicographically by `(n1, n2, a)`.
pub fn enumerate_standard_exponents(m: i128) -> Result<Vec<StandardExponents>> {
    if m < 1 {
        return Err(Error::NonPositive { what: "m", value: m });
    }
    let divs = arith::divisors(m)?;
    let mut out = Vec::new();
    for &n1 in &divs {
        for &n2 in &divs {
            // n1 n2 | a m  <=>  n1 n2 / gcd(n1 n2, m) divides a.
            let step = n1 * n2 / arith::gcd(n1 * n2, m);
            out.extend((0..n2).step_by(step as usize).map(|a| StandardExponents { n1, n2, a }));
        }
    }
    Ok(out)
}

/// `|H| = m^2 / (n1 n2)`.
pub fn subgroup_order_sigma(m: i128, se: &StandardExponents) -> Result<i128> {
    se.validate(m)?;
    exact_div(m * m, se.n1 * se.n2, || format!("order of subgroup {se}"))
}

/// Subgroups of `N_2` (order 168) that are not covered by earlier results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum N2Subgroup {
    Order168,
    Order56,
    Order24,
    Order12,
    Order8,
    Order4,
}

impl N2Subgroup {
    pub const ALL: [N2Subgroup; 6] = [
        N2Subgroup::Order168,
        N2Subgroup::Order56,
        N2Subgroup::Order24,
        N2Subgroup::Order12,
        N2Subgroup::Order8,
        N2Subgroup::Order4,
    ];

    pub fn order(self) -> i128 {
        match self {
            N2Subgroup::Order168 => 168,
            N2Subgroup::Order56 => 56,
            N2Subgroup::Order24 => 24,
            N2Subgroup::Order12 => 12,
            N2Subgroup::Order8 => 8,
            N2Subgroup::Order4 => 4,
        }
    }

    pub fn from_order(order: i128) -> Result<Self> {
        N2Subgroup::ALL
            .into_iter()
            .find(|k| k.order() == order)
            .ok_or_else(|| Error::InvalidParameter {
                kind: "n2-nonskew",
                reason: format!("no N2 subgroup class of order {order} (expected 168, 56, 24, 12, 8 or 4)"),
            })
    }
}

/// Tag of a descriptor family, used for filtering and export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DescriptorKind {
    SigmaCm,
    B0Cyclic,
    B0Dihedral,
    Psl28,
    N2NonSkew,
    N2SkewFull,
    N2SkewCyclic,
}

impl DescriptorKind {
    pub const ALL: [DescriptorKind; 7] = [
        DescriptorKind::SigmaCm,
        DescriptorKind::B0Cyclic,
        DescriptorKind::B0Dihedral,
        DescriptorKind::Psl28,
        DescriptorKind::N2NonSkew,
        DescriptorKind::N2SkewFull,
        DescriptorKind::N2SkewCyclic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DescriptorKind::SigmaCm => "sigma-cm",
            DescriptorKind::B0Cyclic => "b0-cyclic",
            DescriptorKind::B0Dihedral => "b0-dihedral",
            DescriptorKind::Psl28 => "psl28",
            DescriptorKind::N2NonSkew => "n2-nonskew",
            DescriptorKind::N2SkewFull => "n2-skew-full",
            DescriptorKind::N2SkewCyclic => "n2-skew-cyclic",
        }
    }

    /// Whether this family exists for the given curve.
    pub fn applies_to(self, family: CurveFamily) -> bool {
        match self {
            DescriptorKind::SigmaCm => true,
            DescriptorKind::B0Cyclic | DescriptorKind::B0Dihedral => family == CurveFamily::Suzuki,
            _ => family == CurveFamily::Ree,
        }
    }

    /// Kinds evaluated for a family, in enumeration order.
    pub fn for_family(family: CurveFamily) -> Vec<DescriptorKind> {
        DescriptorKind::ALL
            .into_iter()
            .filter(|k| k.applies_to(family))
            .collect()
    }
}

impl fmt::Display for DescriptorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DescriptorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        DescriptorKind::ALL
            .into_iter()
            .find(|k| k.as_str() == key)
            .ok_or_else(|| Error::Parse {
                what: "descriptor kind",
                input: s.to_string(),
            })
    }
}

/// One subgroup (or isomorphism type of subgroup) of the automorphism group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupDescriptor {
    /// Subgroup of `Sigma_- x C_m` with the given standard exponents.
    SigmaCm(StandardExponents),
    /// `C_d x C_n` inside `B_0 x C_m`, with `d | q-1` and `n | m`.
    B0Cyclic { d: i128, n: i128 },
    /// `D_d x C_n` inside `B_0 x C_m` (order `2dn`).
    B0Dihedral { d: i128, n: i128 },
    /// `PSL(2,8) x C_n`.
    Psl28 { n: i128 },
    /// `K x C_n` with `K` a subgroup of `N_2`.
    N2NonSkew { k: N2Subgroup, n: i128 },
    /// `<s1, s2, s3, r tau^(i w)>`, order `56 m / (7 w)`.
    N2SkewFull { i: u8, w: i128 },
    /// `<r tau^(i w)>`, order `m / w`.
    N2SkewCyclic { i: u8, w: i128 },
}

impl SubgroupDescriptor {
    pub fn kind(&self) -> DescriptorKind {
        match self {
            SubgroupDescriptor::SigmaCm(_) => DescriptorKind::SigmaCm,
            SubgroupDescriptor::B0Cyclic { .. } => DescriptorKind::B0Cyclic,
            SubgroupDescriptor::B0Dihedral { .. } => DescriptorKind::B0Dihedral,
            SubgroupDescriptor::Psl28 { .. } => DescriptorKind::Psl28,
            SubgroupDescriptor::N2NonSkew { .. } => DescriptorKind::N2NonSkew,
            SubgroupDescriptor::N2SkewFull { .. } => DescriptorKind::N2SkewFull,
            SubgroupDescriptor::N2SkewCyclic { .. } => DescriptorKind::N2SkewCyclic,
        }
    }

    /// Positional parameters in export order; unused slots are `None`.
    pub fn params(&self) -> [Option<i128>; 3] {
        match *self {
            SubgroupDescriptor::SigmaCm(se) => [Some(se.n1), Some(se.n2), Some(se.a)],
            SubgroupDescriptor::B0Cyclic { d, n } | SubgroupDescriptor::B0Dihedral { d, n } => [Some(d), Some(n), None],
            SubgroupDescriptor::Psl28 { n } => [Some(n), None, None],
            SubgroupDescriptor::N2NonSkew { k, n } => [Some(k.order()), Some(n), None],
            SubgroupDescriptor::N2SkewFull { i, w } | SubgroupDescriptor::N2SkewCyclic { i, w } => {
                [Some(i as i128), Some(w), None]
            }
        }
    }

    /// Rebuilds a descriptor from its kind and positional parameters.
    pub fn from_parts(kind: DescriptorKind, values: &[i128]) -> Result<Self> {
        let arity = match kind {
            DescriptorKind::SigmaCm => 3,
            DescriptorKind::Psl28 => 1,
            _ => 2,
        };
        if values.len() != arity {
            return Err(Error::InvalidParameter {
                kind: kind.as_str(),
                reason: format!("expected {arity} parameters, got {}", values.len()),
            });
        }
        let skew_index = |v: i128| -> Result<u8> {
            if (1..=6).contains(&v) {
                Ok(v as u8)
            } else {
                Err(Error::InvalidParameter {
                    kind: kind.as_str(),
                    reason: format!("i = {v} outside 1..=6"),
                })
            }
        };
        Ok(match kind {
            DescriptorKind::SigmaCm => {
                // Structural checks against m happen in `validate`.
                let (n1, n2, a) = (values[0], values[1], values[2]);
                if n1 < 1 || n2 < 1 || !(0..n2).contains(&a) {
                    return Err(Error::InvalidParameter {
                        kind: kind.as_str(),
                        reason: format!("({n1}, {n2}, {a}) is not a standard-exponent triple"),
                    });
                }
                SubgroupDescriptor::SigmaCm(StandardExponents { n1, n2, a })
            }
            DescriptorKind::B0Cyclic => SubgroupDescriptor::B0Cyclic {
                d: values[0],
                n: values[1],
            },
            DescriptorKind::B0Dihedral => SubgroupDescriptor::B0Dihedral {
                d: values[0],
                n: values[1],
            },
            DescriptorKind::Psl28 => SubgroupDescriptor::Psl28 { n: values[0] },
            DescriptorKind::N2NonSkew => SubgroupDescriptor::N2NonSkew {
                k: N2Subgroup::from_order(values[0])?,
                n: values[1],
            },
            DescriptorKind::N2SkewFull => SubgroupDescriptor::N2SkewFull {
                i: skew_index(values[0])?,
                w: values[1],
            },
            DescriptorKind::N2SkewCyclic => SubgroupDescriptor::N2SkewCyclic {
                i: skew_index(values[0])?,
                w: values[1],
            },
        })
    }

    /// Checks the descriptor's parameters against a concrete curve.
    pub fn validate(&self, params: &CurveParams) -> Result<()> {
        let kind = self.kind();
        if !kind.applies_to(params.family) {
            return Err(Error::InvalidParameter {
                kind: kind.as_str(),
                reason: format!("not a {} subgroup family", params.family),
            });
        }
        let m = params.m;
        let divides = |what: &'static str, value: i128, modulus: i128| -> Result<()> {
            if value < 1 || modulus % value != 0 {
                return Err(Error::NotADivisor { what, value, modulus });
            }
            Ok(())
        };
        match *self {
            SubgroupDescriptor::SigmaCm(se) => se.validate(m),
            SubgroupDescriptor::B0Cyclic { d, n } | SubgroupDescriptor::B0Dihedral { d, n } => {
                divides("d", d, params.q - 1)?;
                divides("n", n, m)
            }
            SubgroupDescriptor::Psl28 { n } | SubgroupDescriptor::N2NonSkew { n, .. } => divides("n", n, m),
            SubgroupDescriptor::N2SkewFull { i, w } | SubgroupDescriptor::N2SkewCyclic { i, w } => {
                if m % 7 != 0 {
                    return Err(Error::SevenDoesNotDivideM(m));
                }
                if !(1..=6).contains(&i) {
                    return Err(Error::InvalidParameter {
                        kind: kind.as_str(),
                        reason: format!("i = {i} outside 1..=6"),
                    });
                }
                if w < 1 || m % (7 * w) != 0 {
                    return Err(Error::NotADivisor {
                        what: "7w",
                        value: 7 * w,
                        modulus: m,
                    });
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind())?;
        let values: Vec<String> = self.params().iter().flatten().map(|v| v.to_string()).collect();
        f.write_str(&values.join(","))
    }
}

impl FromStr for SubgroupDescriptor {
    type Err = Error;

    /// Parses `kind:p1,p2,...`, e.g. `sigma-cm:1,5,1` or `n2-nonskew:56,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            what: "subgroup descriptor",
            input: s.to_string(),
        };
        let (kind, rest) = s.split_once(':').ok_or_else(parse_err)?;
        let kind: DescriptorKind = kind.parse()?;
        let values = rest
            .split(',')
            .map(|v| v.trim().parse::<i128>().map_err(|_| parse_err()))
            .collect::<Result<Vec<_>>>()?;
        SubgroupDescriptor::from_parts(kind, &values)
    }
}

/// Genus data of one quotient curve `C / H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenusRecord {
    pub descriptor: SubgroupDescriptor,
    /// `|H|`.
    pub order: i128,
    /// Degree of the different of `C -> C/H`.
    pub delta: i128,
    pub genus: i128,
}

impl GenusRecord {
    /// Completes a record from `Delta_H` via Riemann–Hurwitz.
    pub fn from_delta(params: &CurveParams, descriptor: SubgroupDescriptor, order: i128, delta: i128) -> Result<Self> {
        let twice_genus_minus_two = exact_div(params.ambient_degree - delta, order, || {
            format!("Riemann-Hurwitz for {descriptor} on {params}")
        })?;
        let genus = exact_div(twice_genus_minus_two + 2, 2, || {
            format!("genus parity for {descriptor} on {params}")
        })?;
        let record = GenusRecord {
            descriptor,
            order,
            delta,
            genus,
        };
        record.validate(params)?;
        Ok(record)
    }

    /// Completes a record from the genus via Riemann–Hurwitz.
    pub fn from_genus(params: &CurveParams, descriptor: SubgroupDescriptor, order: i128, genus: i128) -> Result<Self> {
        let delta = params.ambient_degree - order * (2 * genus - 2);
        let record = GenusRecord {
            descriptor,
            order,
            delta,
            genus,
        };
        record.validate(params)?;
        Ok(record)
    }

    /// Riemann–Hurwitz identity, sign constraints and Lagrange divisibility.
    pub fn validate(&self, params: &CurveParams) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidRecord(format!("{}: {msg}", self.descriptor)));
        if self.order < 1 || !params.divides_automorphism_order(self.order) {
            return fail(format!("order {} does not divide |Aut| of {params}", self.order));
        }
        if self.genus < 0 || self.delta < 0 {
            return fail(format!(
                "negative genus {} or different degree {}",
                self.genus, self.delta
            ));
        }
        if self.order * (2 * self.genus - 2) + self.delta != params.ambient_degree {
            return fail(format!(
                "{} * (2*{} - 2) + {} != {}",
                self.order, self.genus, self.delta, params.ambient_degree
            ));
        }
        Ok(())
    }
}

/// Every descriptor this library has a genus formula for, in a fixed order.
pub fn enumerate_descriptors(params: &CurveParams) -> Result<Vec<SubgroupDescriptor>> {
    let m = params.m;
    let m_divisors = arith::divisors_of(params.m_factorization());
    let mut out: Vec<SubgroupDescriptor> = enumerate_standard_exponents(m)?
        .into_iter()
        .map(SubgroupDescriptor::SigmaCm)
        .collect();
    match params.family {
        CurveFamily::Suzuki => {
            let d_divisors = arith::divisors(params.q - 1)?;
            for dihedral in [false, true] {
                for &d in &d_divisors {
                    for &n in &m_divisors {
                        out.push(if dihedral {
                            SubgroupDescriptor::B0Dihedral { d, n }
                        } else {
                            SubgroupDescriptor::B0Cyclic { d, n }
                        });
                    }
                }
            }
        }
        CurveFamily::Ree => {
            out.extend(m_divisors.iter().map(|&n| SubgroupDescriptor::Psl28 { n }));
            for k in N2Subgroup::ALL {
                out.extend(m_divisors.iter().map(|&n| SubgroupDescriptor::N2NonSkew { k, n }));
            }
            if m % 7 == 0 {
                let ws = arith::divisors(m / 7)?;
                for &w in &ws {
                    out.extend((1..=6).map(|i| SubgroupDescriptor::N2SkewFull { i, w }));
                }
                for &w in &ws {
                    out.extend((1..=6).map(|i| SubgroupDescriptor::N2SkewCyclic { i, w }));
                }
            }
        }
    }
    Ok(out)
}
