//! Exact genus computations for Galois subcovers of the Skabelund maximal
//! curves (the Suzuki cover `S_q` and the Ree cover `R_q`).
//!
//! Every quantity is an exact integer. Genera come from closed-form
//! different degrees and the Riemann–Hurwitz identity
//! `ambient_degree = |H| (2 g_H - 2) + Delta_H`; the [`oracle`] module
//! recomputes the same numbers by brute force.

pub mod arith;
pub mod catalog;
pub mod config;
pub mod error;
pub mod genus_ree;
pub mod genus_suzuki;
pub mod iota;
pub mod oracle;
pub mod params;
pub mod sigma_cm;
pub mod spectrum;

pub use catalog::{
    enumerate_descriptors, enumerate_standard_exponents, subgroup_order_sigma, DescriptorKind, GenusRecord, N2Subgroup,
    StandardExponents, SubgroupDescriptor,
};
pub use config::Caps;
pub use error::{Error, Result};
pub use genus_ree::{genus_n2_nonskew, genus_n2_skew_cyclic, genus_n2_skew_full, genus_psl28, genus_sigma_cm_ree};
pub use genus_suzuki::{genus_b0_cyclic, genus_b0_dihedral, genus_sigma_cm_suzuki};
pub use params::{make_params, CurveFamily, CurveParams};
pub use spectrum::suite::{run_oracle_suite, OracleReport};
pub use spectrum::tables::{verify_tables, verify_tables_with, ReferenceTable, TableReport};
pub use spectrum::{compute_spectrum, compute_spectrum_with, SpectrumReport};

/// Evaluates the closed-form genus of any descriptor on `params`.
pub fn evaluate(params: &CurveParams, descriptor: &SubgroupDescriptor) -> Result<GenusRecord> {
    match *descriptor {
        SubgroupDescriptor::SigmaCm(se) => match params.family {
            CurveFamily::Suzuki => genus_sigma_cm_suzuki(params, &se),
            CurveFamily::Ree => genus_sigma_cm_ree(params, &se),
        },
        SubgroupDescriptor::B0Cyclic { d, n } => genus_b0_cyclic(params, d, n),
        SubgroupDescriptor::B0Dihedral { d, n } => genus_b0_dihedral(params, d, n),
        SubgroupDescriptor::Psl28 { n } => genus_psl28(params, n),
        SubgroupDescriptor::N2NonSkew { k, n } => genus_n2_nonskew(params, k, n),
        SubgroupDescriptor::N2SkewFull { i, w } => genus_n2_skew_full(params, i, w),
        SubgroupDescriptor::N2SkewCyclic { i, w } => genus_n2_skew_cyclic(params, i, w),
    }
}
