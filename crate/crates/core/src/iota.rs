//! Per-element ramification contributions `iota(omega)`.
//!
//! For `omega` in `Aut = G x C_m`, `iota(omega)` is the sum over the fixed
//! points of `omega` of the number of ramification groups containing it, so
//! that `Delta_H` is the sum of `iota` over the nontrivial elements of `H`.
//! Apart from elements whose `G`-part lies in the Singer group `Sigma_-`,
//! `iota(sigma tau^k)` depends only on the order class of `sigma` and on
//! whether `k = 0`.
//!
//! Singer elements `sigma^A tau^B` (with the generator normalization in
//! which the special exponents are Frobenius powers) contribute `m` exactly
//! when `B = A q^d (mod m)` for some `d` below the field exponent.
//!
//! The censuses record element orders of `PSL(2,8)` and of the subgroups of
//! `N_2` inside `Ree(3)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::catalog::N2Subgroup;
use crate::error::{Error, Result};
use crate::params::{CurveFamily, CurveParams};

/// Order class of the `Sz(q)`-part of an element `sigma tau^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderClassSz {
    /// `sigma` is the identity.
    Tau,
    Order2,
    Order4,
    DividesQminus1,
    DividesQplus2q0plus1,
    /// Singer elements; see [`iota_sigma_element`].
    DividesQminus2q0plus1,
}

/// Order class of the `Ree(q)`-part of an element `sigma tau^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderClassRee {
    /// `sigma` is the identity.
    Tau,
    Order3Central,
    Order3NonCentral,
    Order9,
    Order2,
    Order6,
    DividesQminus1Not2,
    DividesQplus1Not2,
    DividesQplus3q0plus1,
    /// Singer elements; see [`iota_sigma_element`].
    DividesQminus3q0plus1,
}

impl OrderClassRee {
    /// Classifies an element of `Ree(q)` by its exact order.
    ///
    /// Orders 2, 3, 6 and 9 take precedence over the cyclic-torus classes;
    /// `central` is required for order 3. Other orders are placed by which of
    /// `q-1`, `q+1`, `q+3q0+1`, `q-3q0+1` they divide.
    pub fn classify(params: &CurveParams, order: i128, central: Option<bool>) -> Result<Self> {
        params.check_family(CurveFamily::Ree)?;
        let (q, q0) = (params.q, params.q0);
        let invalid = |reason: String| Error::InvalidParameter {
            kind: "ree order class",
            reason,
        };
        Ok(match order {
            1 => OrderClassRee::Tau,
            2 => OrderClassRee::Order2,
            3 => match central {
                Some(true) => OrderClassRee::Order3Central,
                Some(false) => OrderClassRee::Order3NonCentral,
                None => return Err(invalid("order-3 elements need a Sylow-center flag".into())),
            },
            6 => OrderClassRee::Order6,
            9 => OrderClassRee::Order9,
            k if k > 1 && (q - 1) % k == 0 => OrderClassRee::DividesQminus1Not2,
            k if k > 1 && (q + 1) % k == 0 => OrderClassRee::DividesQplus1Not2,
            k if k > 1 && (q + 3 * q0 + 1) % k == 0 => OrderClassRee::DividesQplus3q0plus1,
            k if k > 1 && (q - 3 * q0 + 1) % k == 0 => OrderClassRee::DividesQminus3q0plus1,
            k => return Err(invalid(format!("no element of order {k} in Ree({q})"))),
        })
    }
}

/// `iota(sigma tau^k)` on the Suzuki cover.
pub fn iota_suzuki(params: &CurveParams, class: OrderClassSz, k: i128) -> Result<i128> {
    params.check_family(CurveFamily::Suzuki)?;
    let m = params.m;
    let k = k.rem_euclid(m);
    let untwisted = k == 0;
    Ok(match class {
        OrderClassSz::Tau if untwisted => return Err(Error::IdentityElement),
        OrderClassSz::Tau => params.tau_iota(),
        OrderClassSz::Order2 if untwisted => m * (2 * params.q0 + 1) + 1,
        OrderClassSz::Order4 if untwisted => m + 1,
        OrderClassSz::Order2 | OrderClassSz::Order4 => 1,
        OrderClassSz::DividesQminus1 => 2,
        OrderClassSz::DividesQplus2q0plus1 => 0,
        OrderClassSz::DividesQminus2q0plus1 => return Err(Error::SingerRouted("DividesQminus2q0plus1")),
    })
}

/// `iota(sigma tau^k)` on the Ree cover.
pub fn iota_ree(params: &CurveParams, class: OrderClassRee, k: i128) -> Result<i128> {
    params.check_family(CurveFamily::Ree)?;
    let (m, q, q0) = (params.m, params.q, params.q0);
    let k = k.rem_euclid(m);
    let untwisted = k == 0;
    Ok(match class {
        OrderClassRee::Tau if untwisted => return Err(Error::IdentityElement),
        OrderClassRee::Tau => params.tau_iota(),
        OrderClassRee::Order3Central if untwisted => m * (q + 3 * q0 + 1) + 1,
        OrderClassRee::Order3NonCentral if untwisted => m * (3 * q0 + 1) + 1,
        OrderClassRee::Order9 if untwisted => m + 1,
        OrderClassRee::Order3Central | OrderClassRee::Order3NonCentral | OrderClassRee::Order9 => 1,
        OrderClassRee::Order2 => q + 1,
        OrderClassRee::Order6 => 1,
        OrderClassRee::DividesQminus1Not2 => 2,
        OrderClassRee::DividesQplus1Not2 | OrderClassRee::DividesQplus3q0plus1 => 0,
        OrderClassRee::DividesQminus3q0plus1 => return Err(Error::SingerRouted("DividesQminus3q0plus1")),
    })
}

/// `iota(sigma^A tau^B)` for an element of `Sigma_- x C_m`, either family.
pub fn iota_sigma_element(params: &CurveParams, a: i128, b: i128) -> Result<i128> {
    let m = params.m;
    let (a, b) = (a.rem_euclid(m), b.rem_euclid(m));
    if a == 0 {
        return if b == 0 {
            Err(Error::IdentityElement)
        } else {
            Ok(params.tau_iota())
        };
    }
    let special = params.frobenius_residues().iter().any(|&r| (a * r) % m == b);
    Ok(if special { m } else { 0 })
}

/// Finite groups whose element-order censuses are tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CensusGroup {
    Psl28,
    N2(N2Subgroup),
}

impl CensusGroup {
    pub const ALL: [CensusGroup; 7] = [
        CensusGroup::Psl28,
        CensusGroup::N2(N2Subgroup::Order168),
        CensusGroup::N2(N2Subgroup::Order56),
        CensusGroup::N2(N2Subgroup::Order24),
        CensusGroup::N2(N2Subgroup::Order12),
        CensusGroup::N2(N2Subgroup::Order8),
        CensusGroup::N2(N2Subgroup::Order4),
    ];

    pub fn order(self) -> i128 {
        match self {
            CensusGroup::Psl28 => 504,
            CensusGroup::N2(k) => k.order(),
        }
    }
}

impl fmt::Display for CensusGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusGroup::Psl28 => f.write_str("psl28"),
            CensusGroup::N2(k) => write!(f, "n2-{}", k.order()),
        }
    }
}

impl FromStr for CensusGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        CensusGroup::ALL
            .into_iter()
            .find(|g| g.to_string() == key)
            .ok_or_else(|| Error::Parse {
                what: "census group",
                input: s.to_string(),
            })
    }
}

/// Number of elements of one order (and Sylow-center status, for order 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CensusEntry {
    pub order: i128,
    pub count: i128,
    /// Only set for order-3 entries: whether they are central in a Sylow 3-subgroup.
    pub central: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCensus {
    pub group: CensusGroup,
    pub entries: Vec<CensusEntry>,
}

impl OrderCensus {
    pub fn total(&self) -> i128 {
        self.entries.iter().map(|e| e.count).sum()
    }

    pub fn count_of_order(&self, order: i128) -> i128 {
        self.entries.iter().filter(|e| e.order == order).map(|e| e.count).sum()
    }
}

const fn entry(order: i128, count: i128) -> CensusEntry {
    CensusEntry {
        order,
        count,
        central: None,
    }
}

const fn order3(count: i128, central: bool) -> CensusEntry {
    CensusEntry {
        order: 3,
        count,
        central: Some(central),
    }
}

/// Element-order census of `group`, identity included.
///
/// `PSL(2,8)` has its order-3 elements in Sylow centers (they are cubes of
/// order-9 elements); those of `N_2` are not central.
pub fn census(group: CensusGroup) -> OrderCensus {
    let entries = match group {
        CensusGroup::Psl28 => vec![
            entry(1, 1),
            entry(2, 63),
            order3(56, true),
            entry(7, 216),
            entry(9, 168),
        ],
        CensusGroup::N2(k) => match k {
            N2Subgroup::Order168 => vec![entry(1, 1), entry(2, 7), order3(56, false), entry(6, 56), entry(7, 48)],
            N2Subgroup::Order56 => vec![entry(1, 1), entry(2, 7), entry(7, 48)],
            N2Subgroup::Order24 => vec![entry(1, 1), entry(2, 7), order3(8, false), entry(6, 8)],
            N2Subgroup::Order12 => vec![entry(1, 1), entry(2, 3), order3(8, false)],
            N2Subgroup::Order8 => vec![entry(1, 1), entry(2, 7)],
            N2Subgroup::Order4 => vec![entry(1, 1), entry(2, 3)],
        },
    };
    OrderCensus { group, entries }
}
