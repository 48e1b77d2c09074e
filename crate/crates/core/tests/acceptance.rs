//! Acceptance checks, one PASS/FAIL line each. Exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use skabelund::catalog::{enumerate_standard_exponents, StandardExponents, SubgroupDescriptor};
use skabelund::iota::{census, CensusGroup};
use skabelund::oracle::{self, groups, SkewVariant};
use skabelund::sigma_cm::{delta_sigma_cm, nu_product};
use skabelund::spectrum::suite::select_triples;
use skabelund::spectrum::tables::{REE_PSL28_N2, REE_SIGMA_CM, SUZUKI_SIGMA_CM};
use skabelund::{
    arith, enumerate_descriptors, evaluate, genus_n2_nonskew, genus_n2_skew_cyclic, genus_n2_skew_full, genus_psl28,
    genus_sigma_cm_ree, genus_sigma_cm_suzuki, make_params, Caps, CurveFamily, CurveParams, N2Subgroup, Result,
};

/// Wall-clock limits.
const AC1_LIMIT: Duration = Duration::from_secs(10);
const AC2_LIMIT: Duration = Duration::from_secs(1);
const AC3_LIMIT: Duration = Duration::from_secs(1);
const AC4_LIMIT: Duration = Duration::from_secs(60);
const AC8_LIMIT: Duration = Duration::from_secs(5);

const MIN_SIGMA_SAMPLES: usize = 50;
const MIN_CONGRUENCE_SAMPLES: usize = 100;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        ok,
        detail: detail.into(),
    })
}

fn sigma_spectrum(params: &CurveParams) -> Result<Vec<i128>> {
    let mut genera = Vec::new();
    for se in enumerate_standard_exponents(params.m)? {
        genera.push(match params.family {
            CurveFamily::Suzuki => genus_sigma_cm_suzuki(params, &se)?.genus,
            CurveFamily::Ree => genus_sigma_cm_ree(params, &se)?.genus,
        });
    }
    genera.sort_unstable();
    genera.dedup();
    Ok(genera)
}

fn ac1() -> Result<Outcome> {
    let mut missing = Vec::new();
    let mut checked = 0;
    for row in SUZUKI_SIGMA_CM {
        let spectrum = sigma_spectrum(&make_params(CurveFamily::Suzuki, row.s)?)?;
        for &g in row.expected_genera {
            checked += 1;
            if spectrum.binary_search(&g).is_err() {
                missing.push((row.s, g));
            }
        }
    }
    outcome(
        missing.is_empty() && checked == 17,
        format!("{checked} genera checked, missing {missing:?}"),
    )
}

fn ac2() -> Result<Outcome> {
    let row = REE_SIGMA_CM[0];
    let spectrum = sigma_spectrum(&make_params(CurveFamily::Ree, row.s)?)?;
    let ok = row.expected_genera.iter().all(|g| spectrum.binary_search(g).is_ok());
    outcome(
        ok && row.expected_genera == [12942],
        format!("{:?} in spectrum of {} genera", row.expected_genera, spectrum.len()),
    )
}

fn ac3() -> Result<Outcome> {
    let p = make_params(CurveFamily::Ree, 1)?;
    let psl = genus_psl28(&p, 1)?.genus;
    let n2 = genus_n2_nonskew(&p, N2Subgroup::Order56, 1)?.genus;
    let expected = REE_PSL28_N2[0].expected_genera;
    outcome(
        psl == 445 && n2 == 4393 && expected == [psl, n2],
        format!("psl28:1 -> {psl}, n2-nonskew:56,1 -> {n2}"),
    )
}

fn ac4() -> Result<Outcome> {
    let mut mismatches = Vec::new();
    let mut summary = Vec::new();
    let mut enough = true;
    let caps = Caps {
        max_elements: u64::MAX,
        ..Caps::default()
    };
    for (family, s, exhaustive) in [
        (CurveFamily::Suzuki, 1, true),
        (CurveFamily::Suzuki, 2, true),
        (CurveFamily::Ree, 1, true),
        (CurveFamily::Suzuki, 3, false),
        (CurveFamily::Suzuki, 4, false),
        (CurveFamily::Ree, 2, false),
    ] {
        let p = make_params(family, s)?;
        let triples = if exhaustive {
            enumerate_standard_exponents(p.m)?
        } else {
            select_triples(&p, &caps)?.0
        };
        enough &= exhaustive || triples.len() >= MIN_SIGMA_SAMPLES;
        for se in &triples {
            let (formula, brute) = (delta_sigma_cm(&p, se)?, oracle::delta_sigma_cm_bruteforce(&p, se)?);
            if formula != brute {
                mismatches.push(format!("{family} s={s} {se}: {formula} vs {brute}"));
            }
        }
        summary.push(format!("{family} s={s}: {}", triples.len()));
    }
    outcome(
        enough && mismatches.is_empty(),
        format!("{}; mismatches {mismatches:?}", summary.join(", ")),
    )
}

fn congruence_law(p: &CurveParams, se: &StandardExponents, d: u32) -> Result<bool> {
    let count = oracle::count_congruence_solutions(p, se, d)?;
    Ok(count * se.n1() * se.n2() == p.m * nu_product(p, se, d)?)
}

fn ac5() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut exhaustive = 0;
    for (family, s) in [
        (CurveFamily::Suzuki, 1),
        (CurveFamily::Ree, 1),
        (CurveFamily::Suzuki, 2),
    ] {
        let p = make_params(family, s)?;
        for se in enumerate_standard_exponents(p.m)? {
            for d in 0..p.field_exponent {
                exhaustive += 1;
                if !congruence_law(&p, &se, d)? {
                    failures.push(format!("m={} {se} d={d}", p.m));
                }
            }
        }
    }
    let mut sampled = Vec::new();
    for (family, s) in [(CurveFamily::Ree, 2), (CurveFamily::Suzuki, 4)] {
        let p = make_params(family, s)?;
        let triples = enumerate_standard_exponents(p.m)?;
        let pairs: Vec<(usize, u32)> = (0..triples.len())
            .flat_map(|t| (0..p.field_exponent).map(move |d| (t, d)))
            .collect();
        let samples = 128.min(pairs.len());
        for k in 0..samples {
            let (t, d) = pairs[k * pairs.len() / samples];
            if !congruence_law(&p, &triples[t], d)? {
                failures.push(format!("m={} {} d={d}", p.m, triples[t]));
            }
        }
        sampled.push((p.m, samples));
    }
    let enough = sampled.iter().all(|&(_, n)| n >= MIN_CONGRUENCE_SAMPLES);
    outcome(
        enough && failures.is_empty(),
        format!("{exhaustive} exhaustive pairs, samples {sampled:?}, failures {failures:?}"),
    )
}

fn ac6() -> Result<Outcome> {
    let mut bad = Vec::new();
    for m in 1..=60 {
        let check = oracle::check_standard_exponent_bijection(m, 60)?;
        if !check.holds() {
            bad.push(format!("{check:?}"));
        }
        if arith::is_prime(m) && check.closure_count as i128 != m + 3 {
            bad.push(format!("prime {m}: {} subgroups", check.closure_count));
        }
    }
    outcome(bad.is_empty(), format!("m = 1..=60, failures {bad:?}"))
}

fn ac7() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut total = 0;
    let cases = (1..=4)
        .map(|s| (CurveFamily::Suzuki, s))
        .chain((1..=2).map(|s| (CurveFamily::Ree, s)));
    for (family, s) in cases {
        let p = make_params(family, s)?;
        for d in enumerate_descriptors(&p)? {
            total += 1;
            match evaluate(&p, &d) {
                Ok(r) if (p.ambient_degree - r.delta) % (2 * r.order) == 0 && r.genus >= 0 => {}
                Ok(r) => failures.push(format!("{family} s={s} {d}: {r:?}")),
                Err(e) => failures.push(format!("{family} s={s} {d}: {e}")),
            }
        }
    }
    let trivial = |family, s, expected| -> Result<bool> {
        let p = make_params(family, s)?;
        let se = StandardExponents::new(p.m, p.m, p.m, 0)?;
        Ok(evaluate(&p, &SubgroupDescriptor::SigmaCm(se))?.genus == expected && p.ambient_genus() == expected)
    };
    let trivial_ok = trivial(CurveFamily::Suzuki, 1, 196)? && trivial(CurveFamily::Ree, 1, 246051)?;
    outcome(
        failures.is_empty() && trivial_ok,
        format!("{total} descriptors, trivial genera ok = {trivial_ok}, failures {failures:?}"),
    )
}

fn ac8() -> Result<Outcome> {
    let p = make_params(CurveFamily::Ree, 2)?;
    let mut failures = Vec::new();
    let q3 = p.q.pow(3) + 1;
    for w in [1, 31] {
        let n = p.m / (7 * w);
        let full_1 = genus_n2_skew_full(&p, 1, w)?.genus;
        for i in 1..=6u8 {
            let cyc = genus_n2_skew_cyclic(&p, i, w)?;
            let reduced = genus_sigma_cm_ree(&p, &StandardExponents::new(p.m, 31, 7 * w, i as i128 * w)?)?;
            if cyc.genus != reduced.genus {
                failures.push(format!("cyclic i={i} w={w}: {} vs {}", cyc.genus, reduced.genus));
            }
            let full = genus_n2_skew_full(&p, i, w)?;
            if full.genus != full_1 {
                failures.push(format!("full i={i} w={w} depends on i"));
            }
            let (_, full_delta) = oracle::delta_skew_census(&p, SkewVariant::Full, i, w, u64::MAX)?;
            let (_, cyc_delta) = oracle::delta_skew_census(&p, SkewVariant::Cyclic, i, w, u64::MAX)?;
            let delta = full_delta - (n - 1) * q3 - 7 * n * (p.q + 1);
            let delta_prime = cyc_delta - (n - 1) * q3;
            let expect_nonzero = n % 7 != 0;
            if (delta != 0) != expect_nonzero || (delta_prime != 0) != expect_nonzero {
                failures.push(format!("branch i={i} w={w}: delta {delta}, delta' {delta_prime}"));
            }
            if full_delta != full.delta || cyc_delta != cyc.delta {
                failures.push(format!("oracle i={i} w={w}"));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("m = {}, w in {{1, 31}}, failures {failures:?}", p.m),
    )
}

fn ac9() -> Result<Outcome> {
    let realized = groups::permutation_census(CensusGroup::N2(N2Subgroup::Order168));
    let orders: Vec<(i128, i128)> = [1, 2, 3, 6, 7]
        .iter()
        .map(|&o| (o, realized.count_of_order(o)))
        .collect();
    let n2_ok = orders == [(1, 1), (2, 7), (3, 56), (6, 56), (7, 48)] && realized.total() == 168;
    let sums_ok = CensusGroup::ALL.iter().all(|&g| census(g).total() == g.order());
    let realized_ok = CensusGroup::ALL
        .iter()
        .all(|&g| groups::census_map(&groups::permutation_census(g)) == groups::census_map(&census(g)));
    outcome(
        n2_ok && sums_ok && realized_ok,
        format!("N2 orders {orders:?}, sums ok = {sums_ok}, all realizations ok = {realized_ok}"),
    )
}

type Criterion = (&'static str, &'static str, fn() -> Result<Outcome>, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "AC1",
            "suzuki sigma-cm reference genera, s = 1..4",
            ac1,
            Some(AC1_LIMIT),
        ),
        ("AC2", "ree sigma-cm reference genus, s = 1", ac2, Some(AC2_LIMIT)),
        (
            "AC3",
            "ree psl28 and n2-nonskew reference genera, s = 1",
            ac3,
            Some(AC3_LIMIT),
        ),
        ("AC4", "sigma-cm closed form vs brute force", ac4, Some(AC4_LIMIT)),
        ("AC5", "congruence-count law", ac5, None),
        ("AC6", "standard-exponent bijection for m <= 60", ac6, None),
        ("AC7", "Riemann-Hurwitz integrality sweep", ac7, None),
        ("AC8", "skew laws at ree s = 2", ac8, Some(AC8_LIMIT)),
        ("AC9", "census validation", ac9, None),
    ];
    let mut failed = 0;
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let (ok, detail) = match result {
            Ok(o) => (o.ok && in_time, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let limit_note = limit
            .map(|l| format!(" limit {:.0} s", l.as_secs_f64()))
            .unwrap_or_default();
        println!(
            "{} {id} {name} ({:.3} s{limit_note}): {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        failed += !ok as u32;
    }
    if failed == 0 {
        println!("acceptance: 9/9 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 failed");
        ExitCode::FAILURE
    }
}
