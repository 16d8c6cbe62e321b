mod common;

use std::collections::BTreeSet;

use common::gf;
use selfdual::cosets::{cyclotomic_cosets, euclidean_exists, find_splitting, hermitian_exists};
use selfdual::finite_field::{primitive_root_of_unity, splitting_field_for};
use selfdual::modular::gcd;
use selfdual::polynomial::{cyclotomic_factors, factor_cyclotomic, minimal_polynomial, Kind, Poly};

fn some_power_is(q: u64, target: u64, nbar: u64, odd_only: bool) -> bool {
    let mut x = q % nbar;
    for k in 1..=2 * nbar {
        if (!odd_only || k % 2 == 1) && x == target % nbar {
            return true;
        }
        x = x * q % nbar;
    }
    false
}

#[test]
fn power_criterion_matches_coset_pairing() {
    for nbar in (3..=201u64).step_by(2) {
        for r in 1..=3u32 {
            let q = 1u64 << r;
            let part = cyclotomic_cosets(nbar, q).unwrap();
            let power_is_minus_one = some_power_is(q, nbar - 1, nbar, false);
            let all_fixed = part
                .cosets()
                .iter()
                .enumerate()
                .all(|(i, _)| part.image_index(i, -1).unwrap() == i);
            let t = find_splitting(nbar, q, -1).unwrap().t();
            assert_eq!(power_is_minus_one, all_fixed, "nbar={nbar} q={q}");
            assert_eq!(all_fixed, t == 0);
            assert_eq!(euclidean_exists(nbar, r), t >= 1);
        }
        for ell in 1..=2u32 {
            let q = 1u64 << ell;
            let part = cyclotomic_cosets(nbar, q * q).unwrap();
            let b = -(q as i64);
            let odd_power = some_power_is(q, nbar - 1, nbar, true);
            let all_fixed = (0..part.len()).all(|i| part.image_index(i, b).unwrap() == i);
            let t = find_splitting(nbar, q * q, b).unwrap().t();
            assert_eq!(odd_power, all_fixed, "nbar={nbar} ell={ell}");
            assert_eq!(all_fixed, t == 0);
            assert_eq!(hermitian_exists(nbar, ell), t >= 1);
        }
    }
}

#[test]
fn pointwise_reading_has_counterexamples() {
    let part = cyclotomic_cosets(15, 2).unwrap();
    let i = part.index_of(5);
    assert_eq!(part.image_index(i, -1).unwrap(), i);
    assert!(!some_power_is(2, 14, 15, false));
}

#[test]
fn swapped_pairs_match_splittings() {
    for nbar in (1..=105u64).step_by(2) {
        for (m, kind) in [
            (1, Kind::Euclidean),
            (2, Kind::Euclidean),
            (2, Kind::Hermitian),
            (3, Kind::Euclidean),
        ] {
            let f = gf(m);
            let pattern = factor_cyclotomic(nbar, &f, kind).unwrap();
            let b = kind.multiplier(&f).unwrap();
            let splitting = find_splitting(nbar, 1 << m, b).unwrap();
            assert_eq!(pattern.t(), splitting.t(), "GF(2^{m}) {kind} nbar={nbar}");
            assert_eq!(pattern.product(), Poly::x_pow_minus_one(&f, nbar as usize));
            let reps: Vec<u64> = pattern
                .swapped_pairs
                .iter()
                .map(|p| p.coset.rep())
                .collect();
            let x0: Vec<u64> = splitting.x0().iter().map(|c| c.rep()).collect();
            assert_eq!(reps, x0);
        }
    }
}

#[test]
fn factor_set_does_not_depend_on_the_root() {
    for (m, nbar) in [
        (1u32, 7u64),
        (1, 15),
        (1, 21),
        (2, 5),
        (2, 21),
        (3, 9),
        (1, 63),
    ] {
        let base = gf(m);
        let (sup, emb, _) = splitting_field_for(&base, nbar).unwrap();
        let alpha = primitive_root_of_unity(&sup, nbar).unwrap();
        let reference: BTreeSet<Poly> = cyclotomic_factors(nbar, &base)
            .unwrap()
            .into_iter()
            .map(|f| f.poly)
            .collect();
        let part = cyclotomic_cosets(nbar, 1 << m).unwrap();
        for j in (1..nbar).filter(|&j| gcd(j, nbar) == 1) {
            let beta = sup.pow_u64(&alpha, j);
            let other: BTreeSet<Poly> = part
                .cosets()
                .iter()
                .map(|c| minimal_polynomial(c, &beta, &base, &emb).unwrap())
                .collect();
            assert_eq!(other, reference, "GF(2^{m}) nbar={nbar} root alpha^{j}");
        }
    }
}
