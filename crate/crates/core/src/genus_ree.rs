//! Genera of quotients of the Ree cover by subgroups of `Sigma_- x C_m` and
//! of `Ree(3) x C_m`.
//!
//! `Ree(3)` contributes `PSL(2,8) x C_n`, the direct products `K x C_n` with
//! `K` in `N_2` (orders 168, 56, 24, 12, 8, 4), and, when `7 | m`, the skew
//! subgroups `H_{i,w} = <s1, s2, s3, r tau^(iw)>` and `H'_{i,w} = <r tau^(iw)>`
//! of `H_56 x C_m`.

use crate::arith;
use crate::catalog::{GenusRecord, N2Subgroup, StandardExponents, SubgroupDescriptor};
use crate::error::{exact_div, Result};
use crate::params::{CurveFamily, CurveParams};
use crate::sigma_cm;

pub fn genus_sigma_cm_ree(params: &CurveParams, se: &StandardExponents) -> Result<GenusRecord> {
    params.check_family(CurveFamily::Ree)?;
    sigma_cm::sigma_cm_record(params, se)
}

/// `H = PSL(2,8) x C_n`, `|H| = 504 n`.
pub fn genus_psl28(params: &CurveParams, n: i128) -> Result<GenusRecord> {
    params.check_family(CurveFamily::Ree)?;
    let descriptor = SubgroupDescriptor::Psl28 { n };
    descriptor.validate(params)?;
    let (q, q0, m) = (params.q, params.q0, params.m);
    let delta = 63 * n * q
        + 56 * m * (q + 3 * q0 + 4)
        + 287 * n
        + 216 * (arith::gcd(7, n) - 1) * m
        + (n - 1) * params.tau_iota();
    GenusRecord::from_delta(params, descriptor, 504 * n, delta)
}

/// `H = K x C_n` with `K` a subgroup of `N_2` of the given order class.
pub fn genus_n2_nonskew(params: &CurveParams, k: N2Subgroup, n: i128) -> Result<GenusRecord> {
    params.check_family(CurveFamily::Ree)?;
    let descriptor = SubgroupDescriptor::N2NonSkew { k, n };
    descriptor.validate(params)?;
    let (q, q0, m) = (params.q, params.q0, params.m);
    let seven = arith::gcd(7, n) - 1;
    let tau_part = (n - 1) * params.tau_iota();
    let delta = tau_part
        + match k {
            N2Subgroup::Order168 => 7 * n * q + 56 * m * (3 * q0 + 1) + 119 * n + 48 * seven * m,
            N2Subgroup::Order56 => 7 * n * (q + 1) + 48 * seven * m,
            N2Subgroup::Order24 => 7 * n * q + 8 * m * (3 * q0 + 1) + 23 * n,
            N2Subgroup::Order12 => 3 * n * q + 8 * m * (3 * q0 + 1) + 11 * n,
            N2Subgroup::Order8 => 7 * n * (q + 1),
            N2Subgroup::Order4 => 3 * n * (q + 1),
        };
    GenusRecord::from_delta(params, descriptor, k.order() * n, delta)
}

/// Returns `n = m / (7w)` after checking the skew preconditions.
fn skew_cofactor(params: &CurveParams, descriptor: SubgroupDescriptor, w: i128) -> Result<i128> {
    params.check_family(CurveFamily::Ree)?;
    descriptor.validate(params)?;
    Ok(params.m / (7 * w))
}

/// `H_{i,w} = <s1, s2, s3, r tau^(iw)>`, `|H| = 56 n` with `n = m / (7w)`.
pub fn genus_n2_skew_full(params: &CurveParams, i: u8, w: i128) -> Result<GenusRecord> {
    let descriptor = SubgroupDescriptor::N2SkewFull { i, w };
    let n = skew_cofactor(params, descriptor, w)?;
    let (q, m) = (params.q, params.m);
    let delta_skew = if n % 7 == 0 { 0 } else { 48 * m };
    let numerator = (params.tau_iota() * (q - n - 1) - 7 * n * (q + 1) - delta_skew) * w;
    let genus = exact_div(numerator, 16 * m, || format!("genus of {descriptor} on {params}"))? + 1;
    GenusRecord::from_genus(params, descriptor, 56 * n, genus)
}

/// `H'_{i,w} = <r tau^(iw)>`, `|H'| = 7 n` with `n = m / (7w)`.
pub fn genus_n2_skew_cyclic(params: &CurveParams, i: u8, w: i128) -> Result<GenusRecord> {
    let descriptor = SubgroupDescriptor::N2SkewCyclic { i, w };
    let n = skew_cofactor(params, descriptor, w)?;
    let (q, m) = (params.q, params.m);
    let delta_skew = if n % 7 == 0 { 0 } else { 6 * m };
    let numerator = (params.tau_iota() * (q - n - 1) - delta_skew) * w;
    let genus = exact_div(numerator, 2 * m, || format!("genus of {descriptor} on {params}"))? + 1;
    GenusRecord::from_genus(params, descriptor, 7 * n, genus)
}
