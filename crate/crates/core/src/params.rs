//! Numeric parameters of the Skabelund curves.
//!
//! The Suzuki cover lives over `F_{q^4}` with `q0 = 2^s`, `q = 2 q0^2` and
//! `m = q - 2 q0 + 1`; the Ree cover lives over `F_{q^6}` with `q0 = 3^s`,
//! `q = 3 q0^2` and `m = q - 3 q0 + 1`. Both carry an automorphism group of
//! the form `G x C_m` and satisfy the Riemann–Hurwitz identity
//! `ambient_degree = |H| (2 g_H - 2) + Delta_H` for every subgroup `H`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{self, Factorization};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveFamily {
    Suzuki,
    Ree,
}

impl CurveFamily {
    /// The characteristic: 2 for Suzuki, 3 for Ree.
    pub fn characteristic(self) -> i128 {
        match self {
            CurveFamily::Suzuki => 2,
            CurveFamily::Ree => 3,
        }
    }

    /// Exponent `e` with `iota(tau^k) = q^e + 1`.
    pub fn tau_exponent(self) -> u32 {
        match self {
            CurveFamily::Suzuki => 2,
            CurveFamily::Ree => 3,
        }
    }

    /// Degree of the field of maximality over `F_q`; also the number of
    /// Frobenius-special exponents per Singer element.
    pub fn field_exponent(self) -> u32 {
        match self {
            CurveFamily::Suzuki => 4,
            CurveFamily::Ree => 6,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CurveFamily::Suzuki => "suzuki",
            CurveFamily::Ree => "ree",
        }
    }
}

impl fmt::Display for CurveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CurveFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "suzuki" | "sz" => Ok(CurveFamily::Suzuki),
            "ree" => Ok(CurveFamily::Ree),
            _ => Err(Error::Parse {
                what: "curve family",
                input: s.to_string(),
            }),
        }
    }
}

/// Validated parameters of one Skabelund curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveParams {
    pub family: CurveFamily,
    pub s: u32,
    pub q0: i128,
    pub q: i128,
    pub m: i128,
    /// `(q^2+1)(q-2)` for Suzuki, `(q^3+1)(q-2)` for Ree.
    pub ambient_degree: i128,
    /// 4 for Suzuki, 6 for Ree.
    pub field_exponent: u32,
    m_factorization: Factorization,
    /// `q^d mod m` for `d = 0..field_exponent`.
    frobenius_residues: Vec<i128>,
}

impl CurveParams {
    /// `q^e + 1`, the ramification contribution of a nontrivial `tau^k`.
    pub fn tau_iota(&self) -> i128 {
        self.q.pow(self.family.tau_exponent()) + 1
    }

    pub fn m_factorization(&self) -> &Factorization {
        &self.m_factorization
    }

    /// `q^d mod m` for `d` in `0..field_exponent`.
    pub fn frobenius_residues(&self) -> &[i128] {
        &self.frobenius_residues
    }

    /// Factors whose product is `|G| * m`, where `G` is the Suzuki or Ree group.
    fn full_group_order_factors(&self) -> Vec<i128> {
        let q = self.q;
        let mut factors = vec![q; self.family.tau_exponent() as usize];
        factors.extend([q.pow(self.family.tau_exponent()) + 1, q - 1, self.m]);
        factors
    }

    /// Whether `order` divides `|Aut| = |G| * m`, without forming the product.
    pub fn divides_automorphism_order(&self, order: i128) -> bool {
        if order < 1 {
            return false;
        }
        let mut rest = order;
        for factor in self.full_group_order_factors() {
            rest /= arith::gcd(rest, factor);
        }
        rest == 1
    }

    pub fn ambient_genus(&self) -> i128 {
        ambient_genus(self)
    }

    pub fn seven_divides_m(&self) -> bool {
        seven_divides_m(self)
    }

    pub fn check_family(&self, expected: CurveFamily) -> Result<()> {
        if self.family != expected {
            return Err(Error::WrongFamily {
                expected,
                found: self.family,
            });
        }
        Ok(())
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} s={} (q0={}, q={}, m={} = {})",
            self.family, self.s, self.q0, self.q, self.m, self.m_factorization
        )
    }
}

/// Builds the parameters for `(family, s)` and checks every structural identity.
pub fn make_params(family: CurveFamily, s: u32) -> Result<CurveParams> {
    if s < 1 {
        return Err(Error::InvalidS(s));
    }
    let p = family.characteristic();
    let q0 = p.checked_pow(s).ok_or(Error::Overflow("q0"))?;
    let q = q0
        .checked_mul(q0)
        .and_then(|v| v.checked_mul(p))
        .ok_or(Error::Overflow("q"))?;
    let m = q - p * q0 + 1;

    // The largest intermediates in the genus formulas are about 64 q^4 m.
    q.checked_pow(4)
        .and_then(|v| v.checked_mul(m))
        .and_then(|v| v.checked_mul(64))
        .ok_or(Error::Overflow("q^4 * m headroom"))?;
    if m > i64::MAX as i128 {
        return Err(Error::Overflow("m"));
    }

    let e = family.tau_exponent();
    let ambient_degree = (q.pow(e) + 1) * (q - 2);
    let field_exponent = family.field_exponent();

    let cofactor_product = match family {
        CurveFamily::Suzuki => m * (q + 2 * q0 + 1),
        CurveFamily::Ree => m * (q + 3 * q0 + 1) * (q + 1),
    };
    assert_eq!(
        cofactor_product,
        q.pow(e) + 1,
        "factorization of q^e + 1 failed for {family} s={s}"
    );
    assert_eq!(arith::gcd(m, q - 1), 1, "gcd(m, q-1) != 1 for {family} s={s}");

    let frobenius_residues = (0..field_exponent)
        .map(|d| arith::mod_pow(q, d as u64, m))
        .collect::<Result<Vec<_>>>()?;
    assert_eq!(
        arith::mod_pow(q, field_exponent as u64, m)?,
        1 % m,
        "q^{field_exponent} != 1 mod m for {family} s={s}"
    );

    Ok(CurveParams {
        family,
        s,
        q0,
        q,
        m,
        ambient_degree,
        field_exponent,
        m_factorization: arith::factorize(m)?,
        frobenius_residues,
    })
}

/// Genus of the Skabelund curve itself: the trivial subgroup in Riemann–Hurwitz.
pub fn ambient_genus(params: &CurveParams) -> i128 {
    params.ambient_degree / 2 + 1
}

/// Whether `7 | m`. For Ree curves this happens exactly when `s = 2, 3 (mod 6)`.
pub fn seven_divides_m(params: &CurveParams) -> bool {
    let divides = params.m % 7 == 0;
    if params.family == CurveFamily::Ree {
        assert_eq!(
            divides,
            matches!(params.s % 6, 2 | 3),
            "7 | m criterion failed at s={}",
            params.s
        );
    }
    divides
}
