//! Genus spectra: every descriptor evaluated, deduplicated and exported.

pub mod export;
pub mod suite;
pub mod tables;

use rayon::prelude::*;

use crate::catalog::{enumerate_descriptors, DescriptorKind, GenusRecord};
use crate::config::Caps;
use crate::error::Result;
use crate::params::{make_params, CurveFamily, CurveParams};

pub const COMPLETENESS_NOTE: &str = "Partial spectrum. Only subgroup families with closed-form genus formulas \
implemented here are included. Excluded: F x C_m (Frobenius subgroups), N_+ x C_m, C x C_m (involution \
centralizers), N x C_m, and subfield subgroups Sz(q')/Ree(q') x C_n, whose genera are known from earlier results.";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub params: CurveParams,
    /// One record per descriptor, in [`enumerate_descriptors`] order.
    pub records: Vec<GenusRecord>,
    /// Sorted, deduplicated genera of `records`.
    pub genera: Vec<i128>,
    pub families_covered: Vec<DescriptorKind>,
    pub completeness_note: String,
}

impl SpectrumReport {
    pub fn contains(&self, genus: i128) -> bool {
        self.genera.binary_search(&genus).is_ok()
    }

    /// Closest computed genera below and above `genus`.
    pub fn nearest(&self, genus: i128) -> (Option<i128>, Option<i128>) {
        let idx = self.genera.partition_point(|&g| g < genus);
        let below = idx.checked_sub(1).map(|i| self.genera[i]);
        let above = self.genera.get(idx).copied();
        (below, above)
    }
}

/// Evaluates every descriptor of `params`, optionally restricted to `kinds`.
pub fn spectrum_for(params: &CurveParams, kinds: Option<&[DescriptorKind]>) -> Result<SpectrumReport> {
    let descriptors: Vec<_> = enumerate_descriptors(params)?
        .into_iter()
        .filter(|d| kinds.is_none_or(|ks| ks.contains(&d.kind())))
        .collect();
    // Indexed collect keeps descriptor order regardless of scheduling.
    let records = descriptors
        .par_iter()
        .map(|d| crate::evaluate(params, d))
        .collect::<Result<Vec<_>>>()?;
    let mut genera: Vec<i128> = records.iter().map(|r| r.genus).collect();
    genera.sort_unstable();
    genera.dedup();
    let families_covered = DescriptorKind::for_family(params.family)
        .into_iter()
        .filter(|k| kinds.is_none_or(|ks| ks.contains(k)))
        .collect();
    Ok(SpectrumReport {
        params: params.clone(),
        records,
        genera,
        families_covered,
        completeness_note: COMPLETENESS_NOTE.to_string(),
    })
}

pub fn compute_spectrum_with(
    family: CurveFamily,
    s: u32,
    filter: Option<DescriptorKind>,
    caps: &Caps,
) -> Result<SpectrumReport> {
    caps.check_s(family, s)?;
    let params = make_params(family, s)?;
    if let Some(kind) = filter {
        if !kind.applies_to(family) {
            return Err(crate::Error::InvalidParameter {
                kind: kind.as_str(),
                reason: format!("not a {family} subgroup family"),
            });
        }
    }
    let kinds = filter.map(|k| [k]);
    spectrum_for(&params, kinds.as_ref().map(|k| &k[..]))
}

/// [`compute_spectrum_with`] under the environment's caps.
pub fn compute_spectrum(family: CurveFamily, s: u32, filter: Option<DescriptorKind>) -> Result<SpectrumReport> {
    compute_spectrum_with(family, s, filter, &Caps::from_env()?)
}
