#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use selfdual::cosets::{cyclotomic_cosets, multiplier_image};
use selfdual::finite_field::{build_field, Elem, Field};
use selfdual::polynomial::Poly;

/// Rows of the reference table of Hermitian self-dual cyclic codes over GF(4):
/// `(n, nbar, nu, t, count, hmind)`.
pub const TABLE1: [(usize, u64, u32, usize, u64, Option<usize>); 98] = [
    (10, 5, 1, 1, 3, Some(4)),
    (14, 7, 1, 1, 3, Some(4)),
    (20, 5, 2, 1, 5, Some(4)),
    (26, 13, 1, 1, 3, Some(6)),
    (28, 7, 2, 1, 5, Some(4)),
    (30, 15, 1, 3, 27, Some(8)),
    (34, 17, 1, 2, 9, Some(8)),
    (40, 5, 3, 1, 9, Some(6)),
    (42, 21, 1, 3, 27, Some(8)),
    (46, 23, 1, 1, 3, Some(8)),
    (50, 25, 1, 2, 9, Some(4)),
    (52, 13, 2, 1, 5, Some(6)),
    (56, 7, 3, 1, 9, Some(6)),
    (58, 29, 1, 1, 3, Some(12)),
    (60, 15, 2, 3, 125, Some(8)),
    (62, 31, 1, 3, 27, Some(10)),
    (68, 17, 2, 2, 25, Some(12)),
    (70, 35, 1, 4, 81, Some(14)),
    (74, 37, 1, 1, 3, Some(12)),
    (78, 39, 1, 3, 27, Some(12)),
    (80, 5, 4, 1, 17, Some(6)),
    (82, 41, 1, 2, 9, Some(12)),
    (84, 21, 2, 3, 125, Some(10)),
    (90, 45, 1, 5, 243, Some(8)),
    (92, 23, 2, 1, 5, Some(8)),
    (94, 47, 1, 1, 3, Some(12)),
    (98, 49, 1, 2, 9, Some(4)),
    (100, 25, 2, 2, 25, Some(8)),
    (102, 51, 1, 6, 729, None),
    (104, 13, 3, 1, 9, None),
    (106, 53, 1, 1, 3, None),
    (110, 55, 1, 3, 27, None),
    (112, 7, 4, 1, 17, None),
    (114, 57, 1, 2, 9, None),
    (116, 29, 2, 1, 5, None),
    (120, 15, 3, 3, 729, None),
    (122, 61, 1, 1, 3, None),
    (124, 31, 2, 3, 125, None),
    (126, 63, 1, 9, 19683, None),
    (130, 65, 1, 6, 729, None),
    (136, 17, 3, 2, 81, None),
    (138, 69, 1, 3, 27, None),
    (140, 35, 2, 4, 625, None),
    (142, 71, 1, 1, 3, None),
    (146, 73, 1, 4, 81, None),
    (148, 37, 2, 1, 5, None),
    (150, 75, 1, 6, 729, None),
    (154, 77, 1, 3, 27, None),
    (156, 39, 2, 3, 125, None),
    (158, 79, 1, 1, 3, None),
    (160, 5, 5, 1, 33, None),
    (164, 41, 2, 2, 25, None),
    (168, 21, 3, 3, 729, None),
    (170, 85, 1, 11, 177147, None),
    (174, 87, 1, 3, 27, None),
    (178, 89, 1, 4, 81, None),
    (180, 45, 2, 5, 3125, None),
    (182, 91, 1, 8, 6561, None),
    (184, 23, 3, 1, 9, None),
    (186, 93, 1, 9, 19683, None),
    (188, 47, 2, 1, 5, None),
    (190, 95, 1, 3, 27, None),
    (194, 97, 1, 2, 9, None),
    (196, 49, 2, 2, 25, None),
    (200, 25, 3, 2, 81, None),
    (202, 101, 1, 1, 3, None),
    (204, 51, 2, 6, 15625, None),
    (206, 103, 1, 1, 3, None),
    (208, 13, 4, 1, 17, None),
    (210, 105, 1, 12, 531441, None),
    (212, 53, 2, 1, 5, None),
    (218, 109, 1, 3, 27, None),
    (220, 55, 2, 3, 125, None),
    (222, 111, 1, 3, 27, None),
    (224, 7, 5, 1, 33, None),
    (226, 113, 1, 4, 81, None),
    (228, 57, 2, 2, 25, None),
    (230, 115, 1, 4, 81, None),
    (232, 29, 3, 1, 9, None),
    (234, 117, 1, 9, 19683, None),
    (238, 119, 1, 7, 2187, None),
    (240, 15, 4, 3, 4913, None),
    (244, 61, 2, 1, 5, None),
    (246, 123, 1, 6, 729, None),
    (248, 31, 3, 3, 729, None),
    (250, 125, 1, 3, 27, None),
    (252, 63, 2, 9, 1953125, None),
    (254, 127, 1, 9, 19683, None),
    (260, 65, 2, 6, 15625, None),
    (266, 133, 1, 7, 2187, None),
    (270, 135, 1, 8, 6561, None),
    (272, 17, 4, 2, 289, None),
    (274, 137, 1, 2, 9, None),
    (276, 69, 2, 3, 125, None),
    (280, 35, 3, 4, 6561, None),
    (282, 141, 1, 3, 27, None),
    (284, 71, 2, 1, 5, None),
    (286, 143, 1, 3, 27, None),
];

pub fn gf(m: u32) -> Field {
    build_field(m, None).unwrap()
}

fn masked(m: u32, v: u64) -> Elem {
    if m >= 64 {
        Elem::from_u64(v)
    } else {
        Elem::from_u64(v & ((1 << m) - 1))
    }
}

/// Field degree and three raw elements.
pub fn field_sample() -> impl Strategy<Value = (u32, u64, u64, u64)> {
    (1u32..=64, any::<u64>(), any::<u64>(), any::<u64>())
}

pub fn check_field_axioms((m, a, b, c): (u32, u64, u64, u64)) -> Result<(), TestCaseError> {
    let f = gf(m);
    let (a, b, c) = (masked(m, a), masked(m, b), masked(m, c));
    prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
    prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
    prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
    prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
    prop_assert_eq!(
        f.mul(&a, &f.add(&b, &c)),
        f.add(&f.mul(&a, &b), &f.mul(&a, &c))
    );
    prop_assert_eq!(f.mul(&a, &Elem::ONE), a);
    prop_assert_eq!(f.add(&a, &Elem::ZERO), a);
    prop_assert!(f.add(&a, &a).is_zero());
    prop_assert_eq!(
        f.square(&f.add(&a, &b)),
        f.add(&f.square(&a), &f.square(&b))
    );
    if !a.is_zero() {
        let inv = f.inv(&a).unwrap();
        prop_assert_eq!(f.mul(&a, &inv), Elem::ONE);
    }
    Ok(())
}

/// A monic polynomial with nonzero constant term over GF(2^m), `m <= 4`.
pub fn poly_sample() -> impl Strategy<Value = (u32, Vec<u64>)> {
    (1u32..=4)
        .prop_flat_map(|m| {
            let top = (1u64 << m) - 1;
            (
                Just(m),
                (1..=top),
                proptest::collection::vec(0..=top, 0..12),
            )
        })
        .prop_map(|(m, c0, mut rest)| {
            rest.insert(0, c0);
            rest.push(1);
            (m, rest)
        })
}

pub fn check_reciprocal_involution((m, coeffs): (u32, Vec<u64>)) -> Result<(), TestCaseError> {
    let f = gf(m);
    let p = Poly::from_u64s(&f, &coeffs).unwrap();
    prop_assert_eq!(p.reciprocal().unwrap().reciprocal().unwrap(), p.clone());
    if m % 2 == 0 {
        let q = 1u64 << (m / 2);
        prop_assert_eq!(
            p.conjugate_reciprocal(q)
                .unwrap()
                .conjugate_reciprocal(q)
                .unwrap(),
            p
        );
    }
    Ok(())
}

/// Odd modulus and field exponent `r` for `q = 2^r`.
pub fn coset_sample() -> impl Strategy<Value = (u64, u32)> {
    ((0u64..300).prop_map(|k| 2 * k + 1), 1u32..=4)
}

pub fn check_partition_laws((nbar, r): (u64, u32)) -> Result<(), TestCaseError> {
    let q = 1u64 << r;
    let part = cyclotomic_cosets(nbar, q).unwrap();
    let mut seen = vec![false; nbar as usize];
    for c in part.cosets() {
        prop_assert_eq!(c.rep(), c.members()[0]);
        for &a in c.members() {
            prop_assert!(!seen[a as usize], "{} in two cosets", a);
            seen[a as usize] = true;
            prop_assert!(c.contains(a * q % nbar));
        }
    }
    prop_assert!(seen.iter().all(|&s| s));
    let reps: Vec<u64> = part.cosets().iter().map(|c| c.rep()).collect();
    prop_assert!(reps.windows(2).all(|w| w[0] < w[1]));
    Ok(())
}

pub fn check_multiplier_involution((nbar, r): (u64, u32)) -> Result<(), TestCaseError> {
    let q = 1u64 << r;
    let part = cyclotomic_cosets(nbar, q).unwrap();
    let mut multipliers = vec![-1i64];
    if r % 2 == 0 {
        multipliers.push(-(1i64 << (r / 2)));
    }
    for b in multipliers {
        for c in part.cosets() {
            let back = multiplier_image(&multiplier_image(c, b).unwrap(), b).unwrap();
            prop_assert_eq!(&back, c);
        }
    }
    Ok(())
}
