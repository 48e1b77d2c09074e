//! Genera of quotients of the Suzuki cover by subgroups of `Sigma_- x C_m`
//! and of `B_0 x C_m`.

use crate::catalog::{GenusRecord, StandardExponents, SubgroupDescriptor};
use crate::error::{exact_div, Result};
use crate::params::{CurveFamily, CurveParams};
use crate::sigma_cm;

pub fn genus_sigma_cm_suzuki(params: &CurveParams, se: &StandardExponents) -> Result<GenusRecord> {
    params.check_family(CurveFamily::Suzuki)?;
    sigma_cm::sigma_cm_record(params, se)
}

/// `H = C_d x C_n` with `d | q-1`, `n | m`.
pub fn genus_b0_cyclic(params: &CurveParams, d: i128, n: i128) -> Result<GenusRecord> {
    params.check_family(CurveFamily::Suzuki)?;
    let descriptor = SubgroupDescriptor::B0Cyclic { d, n };
    descriptor.validate(params)?;
    let q = params.q;
    let numerator = (q * q + 1) * (q - n - 1) - 2 * (d - 1) * n;
    let genus = exact_div(numerator, 2 * d * n, || format!("genus of {descriptor} on {params}"))? + 1;
    GenusRecord::from_genus(params, descriptor, d * n, genus)
}

/// `H = D_d x C_n` (dihedral of order `2d`) with `d | q-1`, `n | m`.
pub fn genus_b0_dihedral(params: &CurveParams, d: i128, n: i128) -> Result<GenusRecord> {
    params.check_family(CurveFamily::Suzuki)?;
    let descriptor = SubgroupDescriptor::B0Dihedral { d, n };
    descriptor.validate(params)?;
    let (q, q0, m) = (params.q, params.q0, params.m);
    let numerator = (q * q + 1) * (q - n - 1) - d * m * (2 * q0 + 1) - 3 * d * n + 2 * n;
    let genus = exact_div(numerator, 4 * d * n, || format!("genus of {descriptor} on {params}"))? + 1;
    GenusRecord::from_genus(params, descriptor, 2 * d * n, genus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::enumerate_standard_exponents;
    use crate::error::Error;
    use crate::params::make_params;

    fn se(m: i128, n1: i128, n2: i128, a: i128) -> StandardExponents {
        StandardExponents::new(m, n1, n2, a).unwrap()
    }

    #[test]
    fn sigma_cm_examples() {
        let p1 = make_params(CurveFamily::Suzuki, 1).unwrap();
        assert_eq!(genus_sigma_cm_suzuki(&p1, &se(5, 1, 5, 1)).unwrap().genus, 38);
        assert_eq!(genus_sigma_cm_suzuki(&p1, &se(5, 5, 5, 0)).unwrap().genus, 196);
        let full = genus_sigma_cm_suzuki(&p1, &se(5, 1, 1, 0)).unwrap();
        assert_eq!((full.order, full.delta, full.genus), (25, 340, 2));

        let p2 = make_params(CurveFamily::Suzuki, 2).unwrap();
        assert_eq!(genus_sigma_cm_suzuki(&p2, &se(25, 5, 5, 1)).unwrap().genus, 534);

        let ree = make_params(CurveFamily::Ree, 1).unwrap();
        assert!(matches!(
            genus_sigma_cm_suzuki(&ree, &se(19, 1, 19, 1)),
            Err(Error::WrongFamily { .. })
        ));
    }

    #[test]
    fn full_group_has_minimum_genus() {
        for s in 1..=3 {
            let p = make_params(CurveFamily::Suzuki, s).unwrap();
            let genera: Vec<i128> = enumerate_standard_exponents(p.m)
                .unwrap()
                .iter()
                .map(|t| genus_sigma_cm_suzuki(&p, t).unwrap().genus)
                .collect();
            let full = genus_sigma_cm_suzuki(&p, &se(p.m, 1, 1, 0)).unwrap().genus;
            assert_eq!(*genera.iter().min().unwrap(), full);
            assert!(genera.iter().all(|&g| g <= p.ambient_genus()));
        }
    }

    #[test]
    fn b0_examples() {
        let p1 = make_params(CurveFamily::Suzuki, 1).unwrap();
        assert_eq!(genus_b0_cyclic(&p1, 1, 1).unwrap().genus, 196);
        assert_eq!(genus_b0_cyclic(&p1, 7, 5).unwrap().genus, 2);
        assert_eq!(genus_b0_cyclic(&p1, 7, 1).unwrap().genus, 28);
        assert_eq!(genus_b0_dihedral(&p1, 7, 5).unwrap().genus, 0);
        let inv = genus_b0_dihedral(&p1, 1, 1).unwrap();
        assert_eq!((inv.order, inv.delta, inv.genus), (2, 26, 92));

        let p2 = make_params(CurveFamily::Suzuki, 2).unwrap();
        let inv = genus_b0_dihedral(&p2, 1, 1).unwrap();
        assert_eq!(inv.delta, 25 * 9 + 1);
        assert_eq!(inv.genus, 7632);
    }

    #[test]
    fn b0_rejects_bad_divisors() {
        let p1 = make_params(CurveFamily::Suzuki, 1).unwrap();
        assert!(matches!(genus_b0_cyclic(&p1, 3, 1), Err(Error::NotADivisor { .. })));
        assert!(matches!(genus_b0_dihedral(&p1, 7, 2), Err(Error::NotADivisor { .. })));
    }
}
