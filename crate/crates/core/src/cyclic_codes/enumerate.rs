use num_bigint::BigUint;

use super::CyclicCode;
use crate::cosets::count_selfdual;
use crate::error::{Error, Result};
use crate::finite_field::Field;
use crate::modular::split_even_length;
use crate::polynomial::{factor_cyclotomic, hermitian_q, FactorizationPattern, Kind, Poly};

/// Lazy stream of every self-dual cyclic code of length `n = 2^nu * nbar`.
///
/// Generators are `prod f_i^(2^(nu-1)) * prod h_j^e_j h_j'^(2^nu - e_j)` over
/// exponent tuples `e` in `[0, 2^nu]^t`, in lexicographic order. Prefix
/// products are cached so advancing the last exponent costs one multiplication.
pub struct SelfDualEnumeration {
    n: usize,
    nu: u32,
    kind: Kind,
    pattern: FactorizationPattern,
    /// `pair_powers[j][e] = h_j^e * h_j'^(2^nu - e)`
    pair_powers: Vec<Vec<Poly>>,
    exponents: Vec<u32>,
    /// `prefix[j]` is the product of the fixed part and pairs `0 .. j`.
    prefix: Vec<Poly>,
    dirty: usize,
    remaining: Option<u64>,
    done: bool,
}

/// Starts the enumeration; `limit` caps the number of codes emitted.
pub fn enumerate_self_dual(
    n: usize,
    field: &Field,
    kind: Kind,
    limit: Option<u64>,
) -> Result<SelfDualEnumeration> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if kind == Kind::Hermitian {
        hermitian_q(field)?;
    }
    let (nbar, nu) = split_even_length(n as u64);
    let pattern = factor_cyclotomic(nbar, field, kind)?;
    let full = 1u64 << nu;
    let half = full / 2;

    let fixed = pattern
        .self_paired
        .iter()
        .fold(Poly::one(field), |acc, f| acc.mul_raw(&f.poly.pow(half)));
    let pair_powers: Vec<Vec<Poly>> = pattern
        .swapped_pairs
        .iter()
        .map(|pair| {
            (0..=full)
                .map(|e| pair.factor.pow(e).mul_raw(&pair.partner.pow(full - e)))
                .collect()
        })
        .collect();
    let t = pair_powers.len();
    let mut prefix = Vec::with_capacity(t + 1);
    prefix.push(fixed);
    prefix.resize(t + 1, Poly::zero(field));

    Ok(SelfDualEnumeration {
        n,
        nu,
        kind,
        pattern,
        pair_powers,
        exponents: vec![0; t],
        prefix,
        dirty: 0,
        remaining: limit,
        done: false,
    })
}

impl SelfDualEnumeration {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn pattern(&self) -> &FactorizationPattern {
        &self.pattern
    }

    pub fn t(&self) -> usize {
        self.pattern.t()
    }

    /// `(2^nu + 1)^t`, the length of the unlimited stream.
    pub fn total(&self) -> BigUint {
        count_selfdual(self.nu, self.t())
    }

    /// The exponent tuple of the code the next call to `next` returns.
    pub fn peek_exponents(&self) -> Option<&[u32]> {
        (!self.done).then_some(self.exponents.as_slice())
    }

    /// Emits the next code together with its exponent tuple.
    pub fn next_with_exponents(&mut self) -> Option<(Vec<u32>, CyclicCode)> {
        if self.done || self.remaining == Some(0) {
            return None;
        }
        for j in self.dirty..self.exponents.len() {
            let e = self.exponents[j] as usize;
            self.prefix[j + 1] = self.prefix[j].mul_raw(&self.pair_powers[j][e]);
        }
        let generator = self.prefix[self.exponents.len()].clone();
        let emitted = self.exponents.clone();

        let full = 1u32 << self.nu;
        match self.exponents.iter().rposition(|&e| e < full) {
            Some(j) => {
                self.exponents[j] += 1;
                for e in &mut self.exponents[j + 1..] {
                    *e = 0;
                }
                self.dirty = j;
            }
            None => self.done = true,
        }
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        debug_assert_eq!(generator.degree(), Some(self.n / 2));
        Some((emitted, CyclicCode::from_trusted(generator, self.n)))
    }
}

impl Iterator for SelfDualEnumeration {
    type Item = CyclicCode;

    fn next(&mut self) -> Option<CyclicCode> {
        self.next_with_exponents().map(|(_, c)| c)
    }
}
