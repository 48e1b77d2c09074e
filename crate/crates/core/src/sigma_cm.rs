//! Closed-form different degree for subgroups of `Sigma_- x C_m`, shared by
//! both curve families (they differ only in `q^e + 1` and in the number of
//! Frobenius exponents `d`).

use crate::arith::{self, Valuation};
use crate::catalog::{subgroup_order_sigma, GenusRecord, StandardExponents, SubgroupDescriptor};
use crate::error::{exact_div, Error, Result};
use crate::params::CurveParams;

/// `prod_l p_l^(nu_(d,l))` with `nu_(d,l) = min(v_p(n1 q^d - a), v_p(n2))`.
///
/// Only `n1 q^d - a` modulo `m` is needed: `v_p(n2) <= v_p(m)`, so the
/// truncated valuation is unchanged by reduction mod `m`. A residue of zero
/// has infinite valuation and the minimum falls back to `v_p(n2)`.
pub fn nu_product(params: &CurveParams, se: &StandardExponents, d: u32) -> Result<i128> {
    let residue = *params
        .frobenius_residues()
        .get(d as usize)
        .ok_or(Error::DegreeOutOfRange {
            d,
            limit: params.field_exponent,
        })?;
    let m = params.m;
    let shifted = (se.n1() * residue - se.a()).rem_euclid(m);
    let mut product = 1i128;
    for p in params.m_factorization().primes() {
        let nu = arith::valuation(p, shifted)?.min(arith::valuation(p, se.n2())?);
        match nu {
            Valuation::Finite(e) => product *= p.pow(e),
            Valuation::Infinite => unreachable!("v_p(n2) is finite"),
        }
    }
    Ok(product)
}

/// Number of pairs `(i, j)`, `0 <= i < m/n1`, `0 <= j < m/n2`, solving
/// `j n2 = i (n1 q^d - a) (mod m)`, i.e. `m prod p^nu / (n1 n2)`.
pub fn special_solution_count(params: &CurveParams, se: &StandardExponents, d: u32) -> Result<i128> {
    let product = nu_product(params, se, d)?;
    exact_div(params.m * product, se.n1() * se.n2(), || {
        format!("special element count for {se}, d = {d}")
    })
}

pub fn delta_sigma_cm(params: &CurveParams, se: &StandardExponents) -> Result<i128> {
    se.validate(params.m)?;
    let m = params.m;
    let mut delta = (m / se.n2() - 1) * params.tau_iota();
    for d in 0..params.field_exponent {
        delta += (special_solution_count(params, se, d)? - 1) * m;
    }
    Ok(delta)
}

pub fn sigma_cm_record(params: &CurveParams, se: &StandardExponents) -> Result<GenusRecord> {
    let order = subgroup_order_sigma(params.m, se)?;
    let delta = delta_sigma_cm(params, se)?;
    GenusRecord::from_delta(params, SubgroupDescriptor::SigmaCm(*se), order, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{make_params, CurveFamily};

    #[test]
    fn nu_uses_infinite_valuation_on_exact_hit() {
        let p = make_params(CurveFamily::Suzuki, 1).unwrap();
        let se = StandardExponents::new(5, 1, 5, 1).unwrap();
        // 1 * q^0 - 1 = 0, so nu = v_5(5) = 1.
        assert_eq!(nu_product(&p, &se, 0).unwrap(), 5);
        assert_eq!(nu_product(&p, &se, 1).unwrap(), 1);
        assert_eq!(special_solution_count(&p, &se, 0).unwrap(), 5);
        assert_eq!(special_solution_count(&p, &se, 1).unwrap(), 1);
        assert_eq!(delta_sigma_cm(&p, &se).unwrap(), 20);
        assert!(matches!(
            nu_product(&p, &se, 4),
            Err(Error::DegreeOutOfRange { d: 4, limit: 4 })
        ));
    }

    #[test]
    fn trivial_subgroup_has_zero_delta() {
        for (family, s) in [(CurveFamily::Suzuki, 2), (CurveFamily::Ree, 2)] {
            let p = make_params(family, s).unwrap();
            let se = StandardExponents::new(p.m, p.m, p.m, 0).unwrap();
            assert_eq!(delta_sigma_cm(&p, &se).unwrap(), 0);
            assert_eq!(sigma_cm_record(&p, &se).unwrap().genus, p.ambient_genus());
        }
    }
}
