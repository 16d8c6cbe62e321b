mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;

use common::gf;
use selfdual::cyclic_codes::{
    enumerate_self_dual, is_self_dual_by_matrix, minimum_distance, CyclicCode, Distance,
};
use selfdual::finite_field::Elem;
use selfdual::polynomial::{Kind, Poly};

fn instances() -> Vec<(u32, Kind, usize)> {
    let mut v = Vec::new();
    for n in (2..=40).step_by(2) {
        v.push((1, Kind::Euclidean, n));
    }
    for n in (2..=30).step_by(2) {
        v.push((2, Kind::Euclidean, n));
        v.push((2, Kind::Hermitian, n));
        v.push((3, Kind::Euclidean, n));
    }
    for n in (2..=18).step_by(2) {
        v.push((4, Kind::Hermitian, n));
    }
    v
}

#[test]
fn generators_divide_and_count_matches() {
    for (m, kind, n) in instances() {
        let f = gf(m);
        let stream = enumerate_self_dual(n, &f, kind, None).unwrap();
        let total = stream.total();
        let modulus = Poly::x_pow_minus_one(&f, n);
        let mut seen = BTreeSet::new();
        for code in stream {
            let g = code.generator();
            assert_eq!(g.degree(), Some(n / 2));
            assert!(g.divides(&modulus).unwrap());
            assert!(
                code.is_self_dual(kind).unwrap(),
                "GF(2^{m}) {kind} n={n} {g}"
            );
            assert!(is_self_dual_by_matrix(&code, kind).unwrap());
            assert!(seen.insert(g.clone()), "duplicate generator {g}");
        }
        assert_eq!(BigUint::from(seen.len()), total, "GF(2^{m}) {kind} n={n}");
        assert!(seen.contains(&Poly::x_pow_minus_one(&f, n / 2)));
    }
}

#[test]
fn lexicographic_exponent_stream() {
    let f4 = gf(2);
    let mut stream = enumerate_self_dual(60, &f4, Kind::Hermitian, None).unwrap();
    let mut previous: Option<Vec<u32>> = None;
    let mut count = 0;
    while let Some((e, _)) = stream.next_with_exponents() {
        if let Some(p) = &previous {
            assert!(p < &e);
        }
        assert!(e.iter().all(|&x| x <= 4));
        previous = Some(e);
        count += 1;
    }
    assert_eq!(count, 125);
}

#[test]
fn large_counts_stream_lazily() {
    let f4 = gf(2);
    let stream = enumerate_self_dual(252, &f4, Kind::Hermitian, Some(5)).unwrap();
    assert_eq!(stream.total(), BigUint::from(1_953_125u32));
    assert_eq!(stream.count(), 5);
}

fn naive_distance(code: &CyclicCode) -> usize {
    let field = code.field();
    let q = field.order().unwrap();
    let rows = code.generator_matrix();
    let mut best = usize::MAX;
    for index in 1..q.pow(rows.len() as u32) {
        let mut word = vec![Elem::ZERO; code.n()];
        let mut rest = index;
        for row in &rows {
            let u = Elem::from_u64(rest % q);
            rest /= q;
            for (w, a) in word.iter_mut().zip(row) {
                *w = field.add(w, &field.mul(&u, a));
            }
        }
        best = best.min(word.iter().filter(|a| !a.is_zero()).count());
    }
    best
}

#[test]
fn distances_even_and_match_naive_scan() {
    for (m, kind, n) in instances() {
        let f = gf(m);
        let log2_words = m as usize * n / 2;
        if log2_words > 16 {
            continue;
        }
        for code in enumerate_self_dual(n, &f, kind, None).unwrap() {
            let d = minimum_distance(&code, 1 << 16);
            assert_eq!(
                d,
                Distance::Exact(naive_distance(&code)),
                "GF(2^{m}) n={n} {}",
                code.generator()
            );
            let d = d.exact().unwrap();
            assert!(d >= 2);
            if m == 1 || kind == Kind::Hermitian && m == 2 {
                assert_eq!(d % 2, 0);
            }
        }
    }
}

#[test]
fn distance_of_non_self_dual_codes() {
    let f2 = gf(1);
    for n in [7usize, 9, 15, 17, 21] {
        let modulus = Poly::x_pow_minus_one(&f2, n);
        for g in selfdual::polynomial::cyclotomic_factors(n as u64, &f2).unwrap() {
            let code = CyclicCode::new(&g.poly, n).unwrap();
            assert!(g.poly.divides(&modulus).unwrap());
            assert_eq!(
                minimum_distance(&code, 1 << 20),
                Distance::Exact(naive_distance(&code))
            );
        }
    }
}
