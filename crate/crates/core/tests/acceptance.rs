//! One line per acceptance criterion. Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use proptest::test_runner::{Config, TestRunner};

use common::*;
use selfdual::cli::swapped_pair_count;
use selfdual::cosets::{
    count_selfdual, cyclotomic_cosets, euclidean_exists, find_splitting, hermitian_exists,
};
use selfdual::cyclic_codes::{
    best_min_distance, enumerate_self_dual, is_self_dual_by_matrix, minimum_distance, CyclicCode,
    Distance,
};
use selfdual::modular::split_even_length;
use selfdual::oracle::{brute_force_self_dual, enumerated_generators};
use selfdual::polynomial::{cyclotomic_factors, Kind, Poly};

/// Enumeration cardinality is checked for rows up to this many codes.
const ENUMERATION_LIMIT: u64 = 1_000_000;
/// Codeword budget for the distance criteria: 4^14.
const MINDIST_BUDGET: u64 = 1 << 28;
const HMIND_EXPECTED: [(usize, usize); 5] = [(10, 4), (14, 4), (20, 4), (26, 6), (28, 4)];
const PROPERTY_CASES: u32 = 1000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Every (field degree, kind, n_max) covered by the oracle.
fn oracle_range() -> Vec<(u32, Kind, usize)> {
    vec![
        (1, Kind::Euclidean, 30),
        (2, Kind::Euclidean, 14),
        (2, Kind::Hermitian, 14),
    ]
}

fn table_structure() -> Outcome {
    let f4 = gf(2);
    let mut failures = Vec::new();
    let mut enumerated = 0;
    for &(n, nbar, nu, t, count, _) in TABLE1.iter() {
        let (got_nbar, got_nu) = split_even_length(n as u64);
        let got_t =
            swapped_pair_count(got_nbar, &f4, Kind::Hermitian).map_err(|e| e.to_string())?;
        let got_count = count_selfdual(got_nu, got_t);
        let mut row_ok =
            (got_nbar, got_nu, got_t, got_count.clone()) == (nbar, nu, t, BigUint::from(count));
        if got_count <= BigUint::from(ENUMERATION_LIMIT) {
            let stream =
                enumerate_self_dual(n, &f4, Kind::Hermitian, None).map_err(|e| e.to_string())?;
            let listed = stream.count() as u64;
            enumerated += 1;
            if BigUint::from(listed) != got_count {
                failures.push(format!(
                    "n={n}: enumeration gives {listed}, formula {got_count}"
                ));
            }
            row_ok &= listed == count;
        }
        if !row_ok {
            failures.push(format!(
                "n={n}: table ({nbar},{nu},{t},{count}) computed ({got_nbar},{got_nu},{got_t},{got_count})"
            ));
        }
    }
    if failures.is_empty() {
        Ok(format!("{} rows, {enumerated} enumerated", TABLE1.len()))
    } else {
        Err(failures.join("; "))
    }
}

fn table_hmind() -> Outcome {
    let f4 = gf(2);
    let mut failures = Vec::new();
    for (n, expected) in HMIND_EXPECTED {
        let listed = TABLE1.iter().find(|r| r.0 == n).and_then(|r| r.5);
        assert_eq!(listed, Some(expected), "expected values mirror the table");
        let best = best_min_distance(n, &f4, Kind::Hermitian, MINDIST_BUDGET)
            .map_err(|e| e.to_string())?;
        if best.distance() != Some(expected) {
            failures.push(format!(
                "n={n}: expected {expected}, got {:?}",
                best.distance()
            ));
        }
    }
    if failures.is_empty() {
        Ok(format!("{:?}", HMIND_EXPECTED))
    } else {
        Err(failures.join("; "))
    }
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for (m, kind, n_max) in oracle_range() {
        let f = gf(m);
        for n in (2..=n_max).step_by(2) {
            let oracle = brute_force_self_dual(n, &f, kind).map_err(|e| e.to_string())?;
            let listed = enumerated_generators(n, &f, kind).map_err(|e| e.to_string())?;
            if oracle != listed {
                return Err(format!(
                    "GF(2^{m}) {kind} n={n}: oracle {} codes, enumeration {}",
                    oracle.len(),
                    listed.len()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (field, kind, n) instances"))
}

fn existence_cross_check() -> Outcome {
    for nbar in (1..=200u64).step_by(2) {
        for r in 1..=3u32 {
            let t = find_splitting(nbar, 1 << r, -1)
                .map_err(|e| e.to_string())?
                .t();
            if euclidean_exists(nbar, r) != (t >= 1) {
                return Err(format!("euclidean nbar={nbar} r={r}"));
            }
        }
        for ell in 1..=2u32 {
            let t = find_splitting(nbar, 1 << (2 * ell), -(1i64 << ell))
                .map_err(|e| e.to_string())?
                .t();
            if hermitian_exists(nbar, ell) != (t >= 1) {
                return Err(format!("hermitian nbar={nbar} ell={ell}"));
            }
        }
    }
    Ok("odd nbar <= 200".into())
}

fn factorization_identities() -> Outcome {
    let mut checked = 0;
    for m in 1..=3u32 {
        let f = gf(m);
        let q = 1u64 << m;
        for nbar in (1..=105u64).step_by(2) {
            let factors = cyclotomic_factors(nbar, &f).map_err(|e| e.to_string())?;
            let product = factors
                .iter()
                .fold(Poly::one(&f), |acc, c| acc.mul(&c.poly).unwrap());
            if product != Poly::x_pow_minus_one(&f, nbar as usize) {
                return Err(format!(
                    "GF({q}) nbar={nbar}: product differs from x^nbar - 1"
                ));
            }
            let part = cyclotomic_cosets(nbar, q).map_err(|e| e.to_string())?;
            let mut multipliers = vec![(-1i64, Kind::Euclidean)];
            if m == 2 {
                multipliers.push((-2, Kind::Hermitian));
            }
            for (b, kind) in multipliers {
                for (i, c) in factors.iter().enumerate() {
                    let j = part.image_index(i, b).map_err(|e| e.to_string())?;
                    if kind.pair(&c.poly).map_err(|e| e.to_string())? != factors[j].poly {
                        return Err(format!(
                            "GF({q}) nbar={nbar}: {kind} image of f_{} is not f_{}",
                            c.coset.rep(),
                            factors[j].coset.rep()
                        ));
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (field, nbar) pairs"))
}

fn self_duality_double_check() -> Outcome {
    let mut codes = 0;
    for (m, kind, n_max) in oracle_range() {
        let f = gf(m);
        for n in (2..=n_max).step_by(2) {
            for code in enumerate_self_dual(n, &f, kind, None).map_err(|e| e.to_string())? {
                let by_matrix = is_self_dual_by_matrix(&code, kind).map_err(|e| e.to_string())?;
                let by_poly = code.is_self_dual(kind).map_err(|e| e.to_string())?;
                if !(by_matrix && by_poly && 2 * code.k() == n) {
                    return Err(format!(
                        "GF(2^{m}) {kind} n={n}: {} fails",
                        code.generator()
                    ));
                }
                codes += 1;
            }
        }
    }
    Ok(format!("{codes} codes"))
}

fn trivial_code() -> Outcome {
    let mut checked = 0;
    for (m, kind, n_max) in oracle_range() {
        let f = gf(m);
        for n in (2..=n_max).step_by(2) {
            let trivial = Poly::x_pow_minus_one(&f, n / 2);
            let hits = enumerate_self_dual(n, &f, kind, None)
                .map_err(|e| e.to_string())?
                .filter(|c| c.generator() == &trivial)
                .count();
            if hits != 1 {
                return Err(format!(
                    "GF(2^{m}) {kind} n={n}: trivial code listed {hits} times"
                ));
            }
            let code = CyclicCode::new(&trivial, n).map_err(|e| e.to_string())?;
            if minimum_distance(&code, MINDIST_BUDGET) != Distance::Exact(2) {
                return Err(format!("GF(2^{m}) n={n}: trivial code distance"));
            }
            if m % 2 == 0 {
                for k in [Kind::Euclidean, Kind::Hermitian] {
                    let ok = code.is_self_dual(k).map_err(|e| e.to_string())?
                        && is_self_dual_by_matrix(&code, k).map_err(|e| e.to_string())?;
                    if !ok {
                        return Err(format!("GF(2^{m}) n={n}: trivial code not {k} self-dual"));
                    }
                }
            }
            checked += 1;
        }
    }
    let f16 = gf(4);
    for n in [2usize, 6, 10, 34] {
        let code =
            CyclicCode::new(&Poly::x_pow_minus_one(&f16, n / 2), n).map_err(|e| e.to_string())?;
        for k in [Kind::Euclidean, Kind::Hermitian] {
            if !code.is_self_dual(k).map_err(|e| e.to_string())? {
                return Err(format!("GF(16) n={n}: trivial code not {k} self-dual"));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} lengths"))
}

fn property_suite() -> Outcome {
    let config = Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&field_sample(), check_field_axioms)
        .map_err(|e| format!("field axioms: {e}"))?;
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&poly_sample(), check_reciprocal_involution)
        .map_err(|e| format!("involutions: {e}"))?;
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&coset_sample(), check_multiplier_involution)
        .map_err(|e| format!("multipliers: {e}"))?;
    let mut runner = TestRunner::new(config);
    runner
        .run(&coset_sample(), check_partition_laws)
        .map_err(|e| format!("partitions: {e}"))?;
    Ok(format!("4 properties x {PROPERTY_CASES} cases"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("table structural columns", table_structure),
        ("table HMinD at desk scale", table_hmind),
        ("oracle equivalence", oracle_equivalence),
        ("existence cross-check", existence_cross_check),
        ("factorization identities", factorization_identities),
        ("self-duality double check", self_duality_double_check),
        ("trivial-code properties", trivial_code),
        ("property suite", property_suite),
    ];
    let mut failed = BTreeSet::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name} ({detail}) [{secs:.1}s]"),
            Err(detail) => {
                println!("FAIL  {name}: {detail} [{secs:.1}s]");
                failed.insert(name);
            }
        }
    }
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
