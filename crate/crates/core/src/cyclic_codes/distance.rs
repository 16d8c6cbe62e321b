//! Exhaustive minimum distance.
//!
//! A code over GF(2^r) of dimension `k` is an `r*k`-dimensional GF(2)-space
//! spanned by `y^j * row_i`. Codewords are stored as `r` bit planes (plane `p`
//! holds coordinate bit `p` of every symbol), so adding a basis vector is a
//! handful of XORs and the Hamming weight is `popcount(OR of planes)`. The
//! space is walked in binary Gray-code order, split into chunks that run on the
//! rayon pool and share a monotonically decreasing best weight.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{enumerate_self_dual, CyclicCode};
use crate::error::Result;
use crate::finite_field::{Elem, Field};
use crate::polynomial::Kind;

/// Outcome of a distance computation under a codeword budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// `q^k` (as `log2`) exceeded the budget; nothing was computed.
    Unknown {
        log2_codewords: u64,
        budget: u64,
    },
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(*d),
            Distance::Unknown { .. } => None,
        }
    }
}

/// Highest minimum distance over an enumeration of self-dual codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BestDistance {
    Exact {
        distance: usize,
        witness: CyclicCode,
    },
    Unknown {
        log2_codewords: u64,
        budget: u64,
    },
}

impl BestDistance {
    pub fn distance(&self) -> Option<usize> {
        match self {
            BestDistance::Exact { distance, .. } => Some(*distance),
            BestDistance::Unknown { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&CyclicCode> {
        match self {
            BestDistance::Exact { witness, .. } => Some(witness),
            BestDistance::Unknown { .. } => None,
        }
    }
}

/// Gray-code steps between checks of the shared best weight.
const POLL_INTERVAL: u64 = 1 << 12;
/// Target number of codewords per parallel chunk.
const CHUNK_BITS: u32 = 16;
const MAX_SPLIT_BITS: u32 = 12;

struct Kernel {
    dims: u32,
    planes: usize,
    words: usize,
    /// `dims` basis vectors, each `planes * words` words, plane-major.
    basis: Vec<u64>,
}

impl Kernel {
    fn new(code: &CyclicCode) -> Kernel {
        let field = code.field();
        let r = field.degree() as usize;
        let n = code.n();
        let words = n.div_ceil(64);
        let stride = r * words;
        let rows = code.generator_matrix();
        let mut basis = Vec::with_capacity(rows.len() * r * stride);
        for row in &rows {
            for j in 0..r {
                let scale = Elem::from_u64(1 << j);
                let mut v = vec![0u64; stride];
                for (pos, a) in row.iter().enumerate() {
                    let s = field.mul(a, &scale).low_u64();
                    for p in 0..r {
                        if (s >> p) & 1 == 1 {
                            v[p * words + pos / 64] |= 1 << (pos % 64);
                        }
                    }
                }
                basis.extend_from_slice(&v);
            }
        }
        Kernel {
            dims: (rows.len() * r) as u32,
            planes: r,
            words,
            basis,
        }
    }

    fn vector(&self, i: usize) -> &[u64] {
        let stride = self.planes * self.words;
        &self.basis[i * stride..(i + 1) * stride]
    }

    /// Minimum nonzero weight, or some weight `<= stop_at` if one exists.
    /// `usize::MAX` for the zero code.
    fn scan(&self, stop_at: usize) -> usize {
        let best = AtomicUsize::new(usize::MAX);
        if self.dims == 0 {
            return usize::MAX;
        }
        let split = self.dims.saturating_sub(CHUNK_BITS).min(MAX_SPLIT_BITS);
        let low = self.dims - split;
        match (self.words, self.planes) {
            (1, 1) => self.run::<1>(split, low, stop_at, &best),
            (1, 2) => self.run::<2>(split, low, stop_at, &best),
            (1, 3) => self.run::<3>(split, low, stop_at, &best),
            (1, 4) => self.run::<4>(split, low, stop_at, &best),
            _ => self.run_dyn(split, low, stop_at, &best),
        }
        best.load(Ordering::Relaxed)
    }

    fn run<const R: usize>(&self, split: u32, low: u32, stop_at: usize, best: &AtomicUsize) {
        let basis: Vec<[u64; R]> = (0..self.dims as usize)
            .map(|i| {
                let mut a = [0u64; R];
                a.copy_from_slice(self.vector(i));
                a
            })
            .collect();
        (0..1u64 << split).into_par_iter().for_each(|chunk| {
            let mut cur = [0u64; R];
            for b in 0..split {
                if (chunk >> b) & 1 == 1 {
                    let v = &basis[(low + b) as usize];
                    for p in 0..R {
                        cur[p] ^= v[p];
                    }
                }
            }
            let weight = |c: &[u64; R]| c.iter().fold(0, |acc, w| acc | w).count_ones() as usize;
            let mut local = best.load(Ordering::Relaxed);
            if chunk != 0 {
                local = local.min(weight(&cur));
            }
            let steps = 1u64 << low;
            let mut i = 1u64;
            while i < steps {
                let end = (i + POLL_INTERVAL).min(steps);
                while i < end {
                    let v = &basis[i.trailing_zeros() as usize];
                    for p in 0..R {
                        cur[p] ^= v[p];
                    }
                    let w = weight(&cur);
                    if w < local {
                        local = w;
                    }
                    i += 1;
                }
                let shared = best.fetch_min(local, Ordering::Relaxed).min(local);
                if shared <= stop_at {
                    return;
                }
                local = shared;
            }
            best.fetch_min(local, Ordering::Relaxed);
        });
    }

    fn run_dyn(&self, split: u32, low: u32, stop_at: usize, best: &AtomicUsize) {
        let stride = self.planes * self.words;
        let words = self.words;
        (0..1u64 << split).into_par_iter().for_each(|chunk| {
            let mut cur = vec![0u64; stride];
            for b in 0..split {
                if (chunk >> b) & 1 == 1 {
                    for (c, v) in cur.iter_mut().zip(self.vector((low + b) as usize)) {
                        *c ^= v;
                    }
                }
            }
            let weight = |c: &[u64]| -> usize {
                (0..words)
                    .map(|w| {
                        c.iter()
                            .skip(w)
                            .step_by(words)
                            .fold(0u64, |acc, x| acc | x)
                            .count_ones() as usize
                    })
                    .sum()
            };
            let mut local = best.load(Ordering::Relaxed);
            if chunk != 0 {
                local = local.min(weight(&cur));
            }
            let steps = 1u64 << low;
            let mut i = 1u64;
            while i < steps {
                let end = (i + POLL_INTERVAL).min(steps);
                while i < end {
                    for (c, v) in cur.iter_mut().zip(self.vector(i.trailing_zeros() as usize)) {
                        *c ^= v;
                    }
                    local = local.min(weight(&cur));
                    i += 1;
                }
                let shared = best.fetch_min(local, Ordering::Relaxed).min(local);
                if shared <= stop_at {
                    return;
                }
                local = shared;
            }
            best.fetch_min(local, Ordering::Relaxed);
        });
    }
}

fn budget_check(field: &Field, k: usize, budget: u64) -> std::result::Result<(), Distance> {
    let log2 = field.degree() as u64 * k as u64;
    if log2 >= 64 || (1u64 << log2) > budget {
        Err(Distance::Unknown {
            log2_codewords: log2,
            budget,
        })
    } else {
        Ok(())
    }
}

/// Any self-dual code has distance at least 2: a weight-one word is never
/// orthogonal to itself.
fn known_floor(code: &CyclicCode) -> usize {
    let self_dual = [Kind::Euclidean, Kind::Hermitian]
        .iter()
        .any(|&kind| code.is_self_dual(kind).unwrap_or(false));
    if self_dual {
        2
    } else {
        1
    }
}

/// Minimum Hamming weight over all nonzero codewords, provided `q^k <= budget`.
/// The zero code reports distance 0.
pub fn minimum_distance(code: &CyclicCode, budget: u64) -> Distance {
    if let Err(unknown) = budget_check(code.field(), code.k(), budget) {
        return unknown;
    }
    let d = Kernel::new(code).scan(known_floor(code));
    Distance::Exact(if d == usize::MAX { 0 } else { d })
}

/// Maximum of [`minimum_distance`] over every self-dual code of length `n`,
/// with a code attaining it. A code stops being scanned as soon as it is seen
/// to have a word no heavier than the best distance found so far.
pub fn best_min_distance(n: usize, field: &Field, kind: Kind, budget: u64) -> Result<BestDistance> {
    if let Err(Distance::Unknown {
        log2_codewords,
        budget,
    }) = budget_check(field, n / 2, budget)
    {
        // Validate the arguments even when nothing will be scanned.
        enumerate_self_dual(n, field, kind, Some(0))?;
        return Ok(BestDistance::Unknown {
            log2_codewords,
            budget,
        });
    }
    let mut best: Option<(usize, CyclicCode)> = None;
    for code in enumerate_self_dual(n, field, kind, None)? {
        let floor = 2;
        let stop_at = best.as_ref().map_or(floor, |(d, _)| (*d).max(floor));
        let d = Kernel::new(&code).scan(stop_at);
        if d > stop_at || best.is_none() {
            best = Some((d, code));
        }
    }
    let (distance, witness) = best.expect("the trivial code is always enumerated");
    Ok(BestDistance::Exact { distance, witness })
}
