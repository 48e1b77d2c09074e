//! Formula-versus-oracle comparisons for one curve, bounded by [`Caps`].

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::catalog::{enumerate_standard_exponents, subgroup_order_sigma, N2Subgroup, StandardExponents};
use crate::config::Caps;
use crate::error::Result;
use crate::iota::CensusGroup;
use crate::oracle::{self, SkewVariant};
use crate::params::{make_params, CurveFamily, CurveParams};
use crate::{arith, genus_ree, genus_suzuki, sigma_cm};

/// One compared quantity: closed form on the left, oracle on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub subject: String,
    pub formula: i128,
    pub oracle: i128,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.formula == self.oracle
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub family: CurveFamily,
    pub s: u32,
    pub outcomes: Vec<CheckOutcome>,
    /// Errors raised while evaluating either side.
    pub errors: Vec<String>,
    /// Work left out because of the caps.
    pub skipped: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && !self.outcomes.is_empty() && self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    /// `(passed, total)` per check name.
    pub fn tally(&self) -> BTreeMap<&'static str, (usize, usize)> {
        let mut t: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
        for o in &self.outcomes {
            let e = t.entry(o.check).or_default();
            e.0 += o.passed() as usize;
            e.1 += 1;
        }
        t
    }

    pub fn count(&self, check: &str) -> usize {
        self.outcomes.iter().filter(|o| o.check == check).count()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (check, (ok, total)) in self.tally() {
            let status = if ok == total { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {check}: {ok}/{total}")?;
        }
        for o in self.failures() {
            writeln!(
                f,
                "  diff {} {}: formula {} oracle {}",
                o.check, o.subject, o.formula, o.oracle
            )?;
        }
        for e in &self.errors {
            writeln!(f, "ERROR {e}")?;
        }
        for s in &self.skipped {
            writeln!(f, "skip {s}")?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} oracle suite {} s={}", self.family, self.s)
    }
}

/// All triples within the element cap, or an evenly spaced sample of them.
pub fn select_triples(params: &CurveParams, caps: &Caps) -> Result<(Vec<StandardExponents>, usize)> {
    let all = enumerate_standard_exponents(params.m)?;
    let total = all.len();
    let mut eligible = Vec::new();
    for se in all {
        if subgroup_order_sigma(params.m, &se)? as u128 <= caps.max_elements as u128 {
            eligible.push(se);
        }
    }
    let over_cap = total - eligible.len();
    if eligible.len() <= 4 * caps.samples || caps.samples == 0 {
        return Ok((eligible, over_cap));
    }
    let n = eligible.len();
    let sample = (0..caps.samples).map(|k| eligible[k * n / caps.samples]).collect();
    Ok((sample, total - caps.samples))
}

fn sigma_checks(params: &CurveParams, se: &StandardExponents) -> Result<Vec<CheckOutcome>> {
    let subject = se.to_string();
    let mut out = vec![CheckOutcome {
        check: "sigma-delta",
        subject: subject.clone(),
        formula: sigma_cm::delta_sigma_cm(params, se)?,
        oracle: oracle::delta_sigma_cm_bruteforce(params, se)?,
    }];
    let accounting = oracle::sigma_cm_element_accounting(params, se)?;
    out.push(CheckOutcome {
        check: "element-accounting",
        subject: subject.clone(),
        formula: subgroup_order_sigma(params.m, se)? - 1,
        oracle: accounting.special_per_degree.iter().sum::<i128>() + accounting.pure_tau + accounting.zero_iota,
    });
    for d in 0..params.field_exponent {
        let count = oracle::count_congruence_solutions(params, se, d)?;
        out.push(CheckOutcome {
            check: "congruence-count",
            subject: format!("{subject} d={d}"),
            formula: params.m * sigma_cm::nu_product(params, se, d)?,
            oracle: count * se.n1() * se.n2(),
        });
        out.push(CheckOutcome {
            check: "special-elements",
            subject: format!("{subject} d={d}"),
            formula: sigma_cm::special_solution_count(params, se, d)? - 1,
            oracle: accounting.special_per_degree[d as usize],
        });
    }
    Ok(out)
}

fn suzuki_checks(params: &CurveParams) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for d in arith::divisors(params.q - 1)? {
        for n in arith::divisors_of(params.m_factorization()) {
            let cyclic = genus_suzuki::genus_b0_cyclic(params, d, n)?;
            out.push(CheckOutcome {
                check: "b0-census",
                subject: cyclic.descriptor.to_string(),
                formula: cyclic.delta,
                oracle: oracle::delta_b0_census(params, false, d, n)?,
            });
            let dihedral = genus_suzuki::genus_b0_dihedral(params, d, n)?;
            out.push(CheckOutcome {
                check: "b0-census",
                subject: dihedral.descriptor.to_string(),
                formula: dihedral.delta,
                oracle: oracle::delta_b0_census(params, true, d, n)?,
            });
        }
    }
    Ok(out)
}

fn ree_checks(params: &CurveParams, caps: &Caps, skipped: &mut Vec<String>) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let ns = arith::divisors_of(params.m_factorization());
    for &n in &ns {
        let r = genus_ree::genus_psl28(params, n)?;
        out.push(CheckOutcome {
            check: "census",
            subject: r.descriptor.to_string(),
            formula: r.delta,
            oracle: oracle::delta_census(CensusGroup::Psl28, params, n)?,
        });
        for k in N2Subgroup::ALL {
            let r = genus_ree::genus_n2_nonskew(params, k, n)?;
            out.push(CheckOutcome {
                check: "census",
                subject: r.descriptor.to_string(),
                formula: r.delta,
                oracle: oracle::delta_census(CensusGroup::N2(k), params, n)?,
            });
        }
    }
    if params.m % 7 != 0 {
        return Ok(out);
    }
    for w in arith::divisors(params.m / 7)? {
        for i in 1..=6u8 {
            for variant in [SkewVariant::Full, SkewVariant::Cyclic] {
                let r = match variant {
                    SkewVariant::Full => genus_ree::genus_n2_skew_full(params, i, w)?,
                    SkewVariant::Cyclic => genus_ree::genus_n2_skew_cyclic(params, i, w)?,
                };
                match oracle::delta_skew_census(params, variant, i, w, caps.max_elements) {
                    Ok((order, delta)) => {
                        let subject = r.descriptor.to_string();
                        out.push(CheckOutcome {
                            check: "skew-order",
                            subject: subject.clone(),
                            formula: r.order,
                            oracle: order,
                        });
                        out.push(CheckOutcome {
                            check: "skew-delta",
                            subject,
                            formula: r.delta,
                            oracle: delta,
                        });
                    }
                    Err(crate::Error::CapExceeded { .. }) => {
                        skipped.push(format!("{} above element cap", r.descriptor))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(out)
}

/// Runs every oracle comparison available for `(family, s)` within `caps`.
pub fn run_oracle_suite(family: CurveFamily, s: u32, caps: &Caps) -> Result<OracleReport> {
    caps.check_s(family, s)?;
    let params = make_params(family, s)?;
    let mut report = OracleReport {
        family,
        s,
        outcomes: Vec::new(),
        errors: Vec::new(),
        skipped: Vec::new(),
    };

    let (triples, left_out) = select_triples(&params, caps)?;
    if left_out > 0 {
        report
            .skipped
            .push(format!("{left_out} standard-exponent triples not brute-forced"));
    }
    let results: Vec<Result<Vec<CheckOutcome>>> = triples.par_iter().map(|se| sigma_checks(&params, se)).collect();
    for (se, r) in triples.iter().zip(results) {
        match r {
            Ok(outcomes) => report.outcomes.extend(outcomes),
            Err(e) => report.errors.push(format!("sigma-cm {se}: {e}")),
        }
    }

    let family_checks = match family {
        CurveFamily::Suzuki => suzuki_checks(&params),
        CurveFamily::Ree => ree_checks(&params, caps, &mut report.skipped),
    };
    match family_checks {
        Ok(outcomes) => report.outcomes.extend(outcomes),
        Err(e) => report.errors.push(e.to_string()),
    }

    if params.m <= caps.max_subgroup_m {
        let check = oracle::check_standard_exponent_bijection(params.m, caps.max_subgroup_m)?;
        report.outcomes.push(CheckOutcome {
            check: "subgroup-bijection",
            subject: format!("m={}", params.m),
            formula: check.triple_count as i128,
            oracle: if check.holds() { check.closure_count as i128 } else { -1 },
        });
    } else {
        report.skipped.push(format!(
            "subgroup closure for m = {} above cap {}",
            params.m, caps.max_subgroup_m
        ));
    }
    Ok(report)
}
