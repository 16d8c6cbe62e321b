//! Brute-force verifiers for small lengths.
//!
//! Every monic divisor of `x^n - 1 = prod f_i^(2^nu)` of degree `n/2` is
//! generated and kept when its generator-matrix rows are pairwise orthogonal.
//! Nothing here looks at how the structured enumeration pairs factors.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::cyclic_codes::CyclicCode;
use crate::error::{Error, Result};
use crate::finite_field::{Elem, Field};
use crate::modular::split_even_length;
use crate::polynomial::{cyclotomic_factors, Kind, Poly};

/// Default bound on the number of divisors of `x^n - 1` the oracle will scan.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// The divisors of `x^n - 1` as exponent vectors over its irreducible factors.
#[derive(Clone, Debug)]
pub struct DivisorLattice {
    n: usize,
    field: Field,
    multiplicity: u32,
    base: Vec<Poly>,
}

impl DivisorLattice {
    pub fn new(n: usize, field: &Field) -> Result<DivisorLattice> {
        if n == 0 || n % 2 == 1 {
            return Err(Error::OddLength(n));
        }
        let (nbar, nu) = split_even_length(n as u64);
        let base = cyclotomic_factors(nbar, field)?
            .into_iter()
            .map(|f| f.poly)
            .collect();
        Ok(DivisorLattice {
            n,
            field: field.clone(),
            multiplicity: 1 << nu,
            base,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `2^nu`, the multiplicity of each irreducible factor.
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn irreducible_base(&self) -> &[Poly] {
        &self.base
    }

    /// Number of monic divisors, `(2^nu + 1)^#factors`.
    pub fn divisor_count(&self) -> BigUint {
        BigUint::from(self.multiplicity + 1).pow(self.base.len() as u32)
    }

    /// Number of divisors of degree exactly `n/2`, read off the generating
    /// function `prod (1 + z^d + ... + z^(2^nu d))`.
    pub fn half_degree_count(&self) -> BigUint {
        let target = self.n / 2;
        let mut series = vec![BigUint::from(0u32); target + 1];
        series[0] = BigUint::from(1u32);
        for f in &self.base {
            let d = f.degree().expect("nonzero factor");
            let mut next = vec![BigUint::from(0u32); target + 1];
            for (i, c) in series.iter().enumerate() {
                for e in 0..=self.multiplicity as usize {
                    let j = i + e * d;
                    if j > target {
                        break;
                    }
                    next[j] += c;
                }
            }
            series = next;
        }
        series.swap_remove(target)
    }
}

/// Stream of every monic divisor of `x^n - 1` of degree `n/2`, in
/// lexicographic order of exponent vectors.
pub struct HalfDegreeDivisors {
    target: usize,
    degrees: Vec<usize>,
    /// `powers[i][e] = base_i^e`
    powers: Vec<Vec<Poly>>,
    multiplicity: u32,
    exponents: Vec<u32>,
    started: bool,
    done: bool,
}

/// Divisors of `x^n - 1` of degree `n/2`. Fails when `x^n - 1` has more than
/// `cap` monic divisors.
pub fn all_half_degree_divisors(n: usize, field: &Field, cap: u64) -> Result<HalfDegreeDivisors> {
    let lattice = DivisorLattice::new(n, field)?;
    let count = lattice.divisor_count();
    if count.to_u64().is_none_or(|c| c > cap) {
        return Err(Error::CapExceeded {
            what: "divisors of x^n - 1",
            count: count.to_string(),
            cap,
        });
    }
    let multiplicity = lattice.multiplicity;
    let degrees = lattice
        .base
        .iter()
        .map(|f| f.degree().expect("nonzero factor"))
        .collect();
    let powers = lattice
        .base
        .iter()
        .map(|f| (0..=multiplicity as u64).map(|e| f.pow(e)).collect())
        .collect();
    Ok(HalfDegreeDivisors {
        target: n / 2,
        degrees,
        powers,
        multiplicity,
        exponents: vec![0; lattice.base.len()],
        started: false,
        done: false,
    })
}

impl HalfDegreeDivisors {
    fn advance(&mut self) -> bool {
        for j in (0..self.exponents.len()).rev() {
            if self.exponents[j] < self.multiplicity {
                self.exponents[j] += 1;
                for e in &mut self.exponents[j + 1..] {
                    *e = 0;
                }
                return true;
            }
        }
        false
    }

    fn degree(&self) -> usize {
        self.exponents
            .iter()
            .zip(&self.degrees)
            .map(|(&e, &d)| e as usize * d)
            .sum()
    }
}

impl Iterator for HalfDegreeDivisors {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.done {
            return None;
        }
        loop {
            if self.started && !self.advance() {
                self.done = true;
                return None;
            }
            self.started = true;
            if self.degree() == self.target {
                let field = self.powers[0][0].field().clone();
                let g = self
                    .exponents
                    .iter()
                    .zip(&self.powers)
                    .fold(Poly::one(&field), |acc, (&e, p)| {
                        acc.mul_raw(&p[e as usize])
                    });
                return Some(g);
            }
        }
    }
}

type ElemMap<'a> = Box<dyn Fn(&Elem) -> Elem + Sync + 'a>;

fn conjugate_map(field: &Field, kind: Kind) -> Result<ElemMap<'_>> {
    match kind {
        Kind::Euclidean => Ok(Box::new(|a: &Elem| *a)),
        Kind::Hermitian => {
            let q = field.quadratic_base().ok_or(Error::NotQuadratic {
                q: 0,
                field: field.to_string(),
            })?;
            let shift = q.trailing_zeros();
            Ok(Box::new(move |a: &Elem| {
                (0..shift).fold(*a, |x, _| field.square(&x))
            }))
        }
    }
}

/// Whether the rows `x^i g`, `i < n/2`, are pairwise orthogonal.
fn half_rate_self_orthogonal(g: &Poly, n: usize, bar: &(dyn Fn(&Elem) -> Elem + Sync)) -> bool {
    let field = g.field();
    let k = n - g.degree().expect("nonzero divisor");
    if 2 * k != n {
        return false;
    }
    let coeffs = g.coeffs();
    let row = |i: usize| -> Vec<Elem> {
        let mut r = vec![Elem::ZERO; n];
        r[i..i + coeffs.len()].copy_from_slice(coeffs);
        r
    };
    let rows: Vec<Vec<Elem>> = (0..k).map(row).collect();
    let barred: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(bar).collect()).collect();
    rows.iter().all(|x| {
        barred.iter().all(|y| {
            x.iter()
                .zip(y)
                .fold(Elem::ZERO, |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
                .is_zero()
        })
    })
}

/// Generators of all self-dual cyclic codes of length `n`, found by exhaustion.
pub fn brute_force_self_dual(n: usize, field: &Field, kind: Kind) -> Result<BTreeSet<Poly>> {
    brute_force_self_dual_capped(n, field, kind, DEFAULT_CAP)
}

pub fn brute_force_self_dual_capped(
    n: usize,
    field: &Field,
    kind: Kind,
    cap: u64,
) -> Result<BTreeSet<Poly>> {
    let bar = conjugate_map(field, kind)?;
    let candidates: Vec<Poly> = all_half_degree_divisors(n, field, cap)?.collect();
    Ok(candidates
        .into_par_iter()
        .filter(|g| half_rate_self_orthogonal(g, n, bar.as_ref()))
        .collect())
}

/// The generators emitted by the structured enumeration, as a set.
pub fn enumerated_generators(n: usize, field: &Field, kind: Kind) -> Result<BTreeSet<Poly>> {
    Ok(
        crate::cyclic_codes::enumerate_self_dual(n, field, kind, None)?
            .map(|c: CyclicCode| c.generator().clone())
            .collect(),
    )
}
