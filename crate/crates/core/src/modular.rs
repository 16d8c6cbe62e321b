//! Small integer helpers shared by the coset and field code.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed residue into `0..m`.
pub fn normalize(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

/// Smallest `k >= 1` with `q^k = 1 (mod m)`. Requires `gcd(q, m) = 1`; returns 1 for `m = 1`.
pub fn multiplicative_order(q: u64, m: u64) -> u64 {
    debug_assert!(m == 1 || gcd(q % m, m) == 1);
    if m == 1 {
        return 1;
    }
    let q = q % m;
    let mut x = q;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, q, m);
        k += 1;
    }
    k
}

/// Distinct prime factors by trial division, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits an even length into `(nbar, nu)` with `n = 2^nu * nbar`, `nbar` odd.
pub fn split_even_length(n: u64) -> (u64, u32) {
    assert!(n > 0);
    let nu = n.trailing_zeros();
    (n >> nu, nu)
}
