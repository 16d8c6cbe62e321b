//! Binary extension fields GF(2^m).
//!
//! A [`Field`] is presented by a monic irreducible polynomial over GF(2) and its
//! elements are packed as coordinate bits in the polynomial basis ([`Elem`]).
//! Fields up to degree 16 carry exp/log tables; larger fields (splitting fields
//! of `x^nbar - 1` routinely reach a few hundred bits) multiply by shift-and-add.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::modular::{multiplicative_order, pow_mod, prime_factors};

const LIMBS: usize = 6;

/// Largest supported extension degree. The defining polynomial, leading bit
/// included, must fit in an [`Elem`].
pub const MAX_DEGREE: u32 = (LIMBS * 64 - 1) as u32;

/// Fields at or below this degree get exp/log tables.
const TABLE_DEGREE: u32 = 16;

/// Largest subfield degree an [`Embedding`] tabulates exhaustively.
const MAX_EMBED_DEGREE: u32 = 16;

/// Coordinates of a field element in the polynomial basis, bit `i` being the
/// coefficient of `y^i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem([u64; LIMBS]);

impl Elem {
    pub const ZERO: Elem = Elem([0; LIMBS]);
    pub const ONE: Elem = Elem([1, 0, 0, 0, 0, 0]);

    pub const fn from_u64(v: u64) -> Elem {
        Elem([v, 0, 0, 0, 0, 0])
    }

    /// Low 64 coordinate bits.
    pub fn low_u64(&self) -> u64 {
        self.0[0]
    }

    /// The coordinates as an integer, if they fit in 64 bits.
    pub fn to_u64(&self) -> Option<u64> {
        self.0[1..].iter().all(|&w| w == 0).then_some(self.0[0])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn bit(&self, i: u32) -> bool {
        (self.0[(i / 64) as usize] >> (i % 64)) & 1 == 1
    }

    fn bit_len(&self) -> u32 {
        for (i, &w) in self.0.iter().enumerate().rev() {
            if w != 0 {
                return i as u32 * 64 + 64 - w.leading_zeros();
            }
        }
        0
    }

    #[inline]
    fn xor_assign(&mut self, other: &Elem) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a ^= b;
        }
    }

    #[inline]
    fn shl1(&mut self, limbs: usize) {
        let mut carry = 0u64;
        for w in self.0[..limbs].iter_mut() {
            let next = *w >> 63;
            *w = (*w << 1) | carry;
            carry = next;
        }
    }

    /// Lower-case hex of the coordinate bits, without prefix.
    pub fn to_hex(&self) -> String {
        let top = self.0.iter().rposition(|&w| w != 0);
        match top {
            None => "0".to_string(),
            Some(top) => {
                let mut s = format!("{:x}", self.0[top]);
                for w in self.0[..top].iter().rev() {
                    s.push_str(&format!("{:016x}", w));
                }
                s
            }
        }
    }

    /// Parses hex coordinates, with or without a `0x` prefix.
    pub fn from_hex(s: &str) -> Result<Elem> {
        let digits = s.trim();
        let digits = digits
            .strip_prefix("0x")
            .or_else(|| digits.strip_prefix("0X"))
            .unwrap_or(digits);
        if digits.is_empty() || digits.len() > LIMBS * 16 {
            return Err(Error::Parse(format!("bad element hex `{s}`")));
        }
        let mut out = Elem::ZERO;
        for (i, chunk) in digits.as_bytes().rchunks(16).enumerate() {
            let text = std::str::from_utf8(chunk).expect("ascii");
            out.0[i] = u64::from_str_radix(text, 16)
                .map_err(|_| Error::Parse(format!("bad element hex `{s}`")))?;
        }
        Ok(out)
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{}", self.to_hex())
    }
}

/// A polynomial over GF(2), bit-packed. Used for defining polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Poly(Vec<u64>);

impl Gf2Poly {
    pub fn from_words(mut words: Vec<u64>) -> Gf2Poly {
        while words.last() == Some(&0) {
            words.pop();
        }
        Gf2Poly(words)
    }

    pub fn from_u64(v: u64) -> Gf2Poly {
        Gf2Poly::from_words(vec![v])
    }

    /// Builds from ascending 0/1 coefficients.
    pub fn from_coeffs(coeffs: &[u8]) -> Gf2Poly {
        let mut words = vec![0u64; coeffs.len() / 64 + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            if c & 1 == 1 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Gf2Poly::from_words(words)
    }

    pub fn from_hex(s: &str) -> Result<Gf2Poly> {
        let digits = s.trim();
        let digits = digits
            .strip_prefix("0x")
            .or_else(|| digits.strip_prefix("0X"))
            .unwrap_or(digits);
        if digits.is_empty() {
            return Err(Error::Parse(format!("bad polynomial hex `{s}`")));
        }
        let mut words = Vec::new();
        for chunk in digits.as_bytes().rchunks(16) {
            let text = std::str::from_utf8(chunk).expect("ascii");
            words.push(
                u64::from_str_radix(text, 16)
                    .map_err(|_| Error::Parse(format!("bad polynomial hex `{s}`")))?,
            );
        }
        Ok(Gf2Poly::from_words(words))
    }

    pub fn to_hex(&self) -> String {
        match self.0.last() {
            None => "0".to_string(),
            Some(top) => {
                let mut s = format!("{:x}", top);
                for w in self.0[..self.0.len() - 1].iter().rev() {
                    s.push_str(&format!("{:016x}", w));
                }
                s
            }
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.0
            .last()
            .map(|top| (self.0.len() as u32 - 1) * 64 + 63 - top.leading_zeros())
    }

    pub fn coeff(&self, i: u32) -> bool {
        self.0
            .get((i / 64) as usize)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_one(&self) -> bool {
        self.0 == [1]
    }

    fn xor(&self, other: &Gf2Poly) -> Gf2Poly {
        let len = self.0.len().max(other.0.len());
        let words = (0..len)
            .map(|i| self.0.get(i).copied().unwrap_or(0) ^ other.0.get(i).copied().unwrap_or(0))
            .collect();
        Gf2Poly::from_words(words)
    }

    fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut out = vec![0u64; self.0.len() + other.0.len() + 1];
        for (i, &w) in self.0.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                let shift = i * 64 + b;
                let (ws, bs) = (shift / 64, shift % 64);
                for (j, &v) in other.0.iter().enumerate() {
                    out[ws + j] ^= v << bs;
                    if bs != 0 {
                        out[ws + j + 1] ^= v >> (64 - bs);
                    }
                }
            }
        }
        Gf2Poly::from_words(out)
    }

    fn rem(&self, modulus: &Gf2Poly) -> Gf2Poly {
        let md = modulus.degree().expect("nonzero modulus");
        let mut r = self.0.clone();
        r.resize(r.len().max(1), 0);
        let mut rp = Gf2Poly::from_words(r);
        while let Some(d) = rp.degree() {
            if d < md {
                break;
            }
            let shift = d - md;
            let mut words = rp.0.clone();
            let (ws, bs) = ((shift / 64) as usize, shift % 64);
            words.resize(words.len() + modulus.0.len() + 1, 0);
            for (j, &v) in modulus.0.iter().enumerate() {
                words[ws + j] ^= v << bs;
                if bs != 0 {
                    words[ws + j + 1] ^= v >> (64 - bs);
                }
            }
            rp = Gf2Poly::from_words(words);
        }
        rp
    }

    fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or test: `f` of degree `m` is irreducible iff
    /// `gcd(f, x^(2^i) - x) = 1` for every `1 <= i <= m/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(m) = self.degree() else {
            return false;
        };
        if m == 0 {
            return false;
        }
        let x = Gf2Poly::from_u64(2);
        let mut power = x.clone();
        for _ in 1..=m / 2 {
            power = power.mul(&power).rem(self);
            if !self.gcd(&power.xor(&x)).is_one() {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{}", self.to_hex())
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldInner {
    degree: u32,
    defpoly: Gf2Poly,
    modulus: Elem,
    limbs: usize,
    tables: Option<Tables>,
}

/// The finite field GF(2^m). Cheap to clone; equality compares presentations.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.degree == other.0.degree && self.0.defpoly == other.0.defpoly)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.degree.hash(state);
        self.0.defpoly.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF(2^{})/defpoly=0x{}",
            self.0.degree,
            self.0.defpoly.to_hex()
        )
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let bad = || Error::Parse(format!("expected `GF(2^m)/defpoly=0x<hex>`, got `{s}`"));
        let rest = s.trim().strip_prefix("GF(2^").ok_or_else(bad)?;
        let (deg, rest) = rest.split_once(')').ok_or_else(bad)?;
        let degree: u32 = deg.parse().map_err(|_| bad())?;
        match rest.strip_prefix("/defpoly=") {
            Some(hex) => build_field(degree, Some(&Gf2Poly::from_hex(hex)?)),
            None if rest.is_empty() => build_field(degree, None),
            None => Err(bad()),
        }
    }
}

/// Lexicographically smallest irreducible of the given degree with nonzero
/// constant term, reading coefficients low-to-high as a binary number.
pub fn canonical_defining_poly(degree: u32) -> Gf2Poly {
    assert!(degree >= 1);
    let limbs = degree as usize / 64 + 1;
    let mut low = 1u64;
    loop {
        let mut words = vec![0u64; limbs];
        words[0] = low;
        words[degree as usize / 64] |= 1 << (degree % 64);
        let candidate = Gf2Poly::from_words(words);
        if candidate.is_irreducible() {
            return candidate;
        }
        low += 2;
    }
}

fn canonical_cache() -> &'static Mutex<HashMap<u32, Field>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Field>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds GF(2^degree). Without an explicit defining polynomial the canonical
/// one ([`canonical_defining_poly`]) is used and the field is memoized.
pub fn build_field(degree: u32, defining_poly: Option<&Gf2Poly>) -> Result<Field> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::UnsupportedDegree {
            degree,
            max: MAX_DEGREE,
        });
    }
    match defining_poly {
        Some(p) => {
            if p.degree() != Some(degree) {
                return Err(Error::InvalidDefiningPolynomial(format!(
                    "0x{} has degree {:?}, expected {degree}",
                    p.to_hex(),
                    p.degree()
                )));
            }
            if !p.is_irreducible() {
                return Err(Error::InvalidDefiningPolynomial(format!(
                    "0x{} is reducible over GF(2)",
                    p.to_hex()
                )));
            }
            Ok(Field::from_irreducible(degree, p.clone()))
        }
        None => {
            if let Some(f) = canonical_cache().lock().unwrap().get(&degree) {
                return Ok(f.clone());
            }
            let field = Field::from_irreducible(degree, canonical_defining_poly(degree));
            canonical_cache()
                .lock()
                .unwrap()
                .entry(degree)
                .or_insert(field.clone());
            Ok(field)
        }
    }
}

impl Field {
    fn from_irreducible(degree: u32, defpoly: Gf2Poly) -> Field {
        let mut modulus = Elem::ZERO;
        for (i, &w) in defpoly.0.iter().enumerate() {
            modulus.0[i] = w;
        }
        let inner = FieldInner {
            degree,
            defpoly,
            modulus,
            limbs: (degree as usize + 1).div_ceil(64),
            tables: None,
        };
        let mut field = Field(Arc::new(inner));
        if degree <= TABLE_DEGREE {
            let tables = field.build_tables();
            Arc::get_mut(&mut field.0).expect("fresh field").tables = Some(tables);
        }
        field
    }

    fn build_tables(&self) -> Tables {
        let size = (1u32 << self.0.degree) - 1;
        let generator = self
            .root_of_unity_by(size as u64, |a, b| self.mul_shift(a, b))
            .expect("multiplicative group order divides itself");
        let mut exp = vec![0u32; 2 * size as usize];
        let mut log = vec![0u32; size as usize + 1];
        let mut x = Elem::ONE;
        for i in 0..size {
            exp[i as usize] = x.low_u64() as u32;
            exp[(i + size) as usize] = x.low_u64() as u32;
            log[x.low_u64() as usize] = i;
            x = self.mul_shift(&x, &generator);
        }
        Tables { exp, log }
    }

    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// `(exp, log)` tables for small fields; `exp` has length `2 * (2^m - 1)`.
    pub(crate) fn tables(&self) -> Option<(&[u32], &[u32])> {
        self.0
            .tables
            .as_ref()
            .map(|t| (t.exp.as_slice(), t.log.as_slice()))
    }

    pub fn defining_poly(&self) -> &Gf2Poly {
        &self.0.defpoly
    }

    /// `2^m` when it fits in a `u64`.
    pub fn order(&self) -> Option<u64> {
        (self.0.degree < 64).then(|| 1u64 << self.0.degree)
    }

    pub fn order_big(&self) -> BigUint {
        BigUint::one() << self.0.degree
    }

    pub fn contains(&self, a: &Elem) -> bool {
        a.bit_len() <= self.0.degree
    }

    /// Element with the given coordinate bits; errors if they overflow the degree.
    pub fn element(&self, bits: u64) -> Result<Elem> {
        let e = Elem::from_u64(bits);
        if self.contains(&e) {
            Ok(e)
        } else {
            Err(Error::Parse(format!(
                "0x{bits:x} is not an element of {self}"
            )))
        }
    }

    /// The class of `y`, i.e. the root of the defining polynomial.
    pub fn generator(&self) -> Elem {
        if self.0.degree == 1 {
            // y = -c0 = c0 in GF(2)
            return if self.0.defpoly.coeff(0) {
                Elem::ONE
            } else {
                Elem::ZERO
            };
        }
        Elem::from_u64(2)
    }

    /// All elements in coordinate order. Only for small fields.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        assert!(
            self.0.degree <= 32,
            "refusing to list a field of degree {}",
            self.0.degree
        );
        (0..1u64 << self.0.degree).map(Elem::from_u64)
    }

    #[inline]
    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let mut r = *a;
        r.xor_assign(b);
        r
    }

    #[inline]
    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match &self.0.tables {
            Some(t) => {
                let (x, y) = (a.0[0] as usize, b.0[0] as usize);
                if x == 0 || y == 0 {
                    Elem::ZERO
                } else {
                    Elem::from_u64(t.exp[(t.log[x] + t.log[y]) as usize] as u64)
                }
            }
            None => self.mul_shift(a, b),
        }
    }

    fn mul_shift(&self, a: &Elem, b: &Elem) -> Elem {
        let m = self.0.degree;
        let limbs = self.0.limbs;
        let mut acc = Elem::ZERO;
        for i in (0..b.bit_len().min(m)).rev() {
            acc.shl1(limbs);
            if acc.bit(m) {
                acc.xor_assign(&self.0.modulus);
            }
            if b.bit(i) {
                acc.xor_assign(a);
            }
        }
        acc
    }

    pub fn square(&self, a: &Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow_u64(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = *a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: &Elem, e: &BigUint) -> Elem {
        pow_with(a, e, |x, y| self.mul(x, y))
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if let Some(t) = &self.0.tables {
            let size = (1u32 << self.0.degree) - 1;
            let l = t.log[a.0[0] as usize];
            return Ok(Elem::from_u64(t.exp[((size - l) % size) as usize] as u64));
        }
        Ok(self.pow(a, &(self.order_big() - 2u32)))
    }

    /// Frobenius `a -> a^2`.
    pub fn frobenius(&self, a: &Elem) -> Elem {
        self.square(a)
    }

    /// `a -> a^q` on a field of order `q^2`.
    pub fn conjugate(&self, a: &Elem, q: u64) -> Result<Elem> {
        let half = self.conjugation_exponent(q)?;
        let mut r = *a;
        for _ in 0..half {
            r = self.square(&r);
        }
        Ok(r)
    }

    /// `log2 q` if this field has order `q^2`.
    pub fn conjugation_exponent(&self, q: u64) -> Result<u32> {
        let m = self.0.degree;
        if q.is_power_of_two() && m.is_multiple_of(2) && q.trailing_zeros() == m / 2 {
            Ok(m / 2)
        } else {
            Err(Error::NotQuadratic {
                q,
                field: self.to_string(),
            })
        }
    }

    /// `q` such that the field has order `q^2`, if the degree is even.
    pub fn quadratic_base(&self) -> Option<u64> {
        let m = self.0.degree;
        (m.is_multiple_of(2) && m / 2 < 64).then(|| 1u64 << (m / 2))
    }

    /// Evaluates a GF(2)-polynomial at an element of this field.
    pub fn eval_gf2(&self, p: &Gf2Poly, at: &Elem) -> Elem {
        let Some(d) = p.degree() else {
            return Elem::ZERO;
        };
        let mut acc = Elem::ZERO;
        for i in (0..=d).rev() {
            acc = self.mul(&acc, at);
            if p.coeff(i) {
                acc.xor_assign(&Elem::ONE);
            }
        }
        acc
    }

    /// Multiplicative order of a nonzero element, given an exponent it is known to divide.
    pub fn element_order_dividing(&self, a: &Elem, multiple: u64) -> u64 {
        let mut n = multiple;
        for p in prime_factors(multiple) {
            while n.is_multiple_of(p) && self.pow_u64(a, n / p) == Elem::ONE {
                n /= p;
            }
        }
        n
    }

    fn root_of_unity_by(&self, nbar: u64, mul: impl Fn(&Elem, &Elem) -> Elem) -> Result<Elem> {
        if nbar == 0 || pow_mod(2, self.0.degree as u64, nbar) != 1 % nbar {
            return Err(Error::NoRootOfUnity {
                nbar,
                field: self.to_string(),
            });
        }
        let cofactor = (self.order_big() - 1u32) / nbar;
        let primes = prime_factors(nbar);
        let bound = if self.0.degree < 64 {
            1u64 << self.0.degree
        } else {
            u64::MAX
        };
        for bits in 1..bound {
            let candidate = pow_with(&Elem::from_u64(bits), &cofactor, &mul);
            let exact = primes
                .iter()
                .all(|p| pow_with(&candidate, &BigUint::from(nbar / p), &mul) != Elem::ONE);
            if exact {
                return Ok(candidate);
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }
}

fn pow_with(a: &Elem, e: &BigUint, mul: impl Fn(&Elem, &Elem) -> Elem) -> Elem {
    let mut acc = Elem::ONE;
    for i in (0..e.bits()).rev() {
        acc = mul(&acc, &acc);
        if e.bit(i) {
            acc = mul(&acc, a);
        }
    }
    acc
}

/// An element of order exactly `nbar`.
///
/// Candidates `x = 1, 2, 3, ...` are taken in coordinate order and the first
/// `x^((2^m - 1)/nbar)` whose order is exactly `nbar` is returned. When
/// `nbar = 2^m - 1` this is the first generator of the multiplicative group.
pub fn primitive_root_of_unity(field: &Field, nbar: u64) -> Result<Elem> {
    field.root_of_unity_by(nbar, |a, b| field.mul(a, b))
}

/// A field element bundled with its field, for checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {}", self.value, self.field)
    }
}

/// Arithmetic operations accepted by [`FieldElement::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

impl FieldElement {
    pub fn new(field: &Field, value: Elem) -> Result<FieldElement> {
        if !field.contains(&value) {
            return Err(Error::Parse(format!(
                "{value:?} is not an element of {field}"
            )));
        }
        Ok(FieldElement {
            field: field.clone(),
            value,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            })
        }
    }

    fn wrap(&self, value: Elem) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    /// Binary ops use `other`; unary ops (`Inv`, `Pow`) ignore it.
    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        match op {
            ArithOp::Add => self.add(other),
            ArithOp::Mul => self.mul(other),
            ArithOp::Inv => self.inv(),
            ArithOp::Pow(e) => Ok(self.pow(e)),
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(&self.value, &other.value)))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(&self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow_u64(&self.value, e))
    }

    pub fn conjugate(&self, q: u64) -> Result<FieldElement> {
        Ok(self.wrap(self.field.conjugate(&self.value, q)?))
    }
}

/// A field embedding `sub -> sup` fixed by the image of `sub`'s generator.
#[derive(Clone)]
pub struct Embedding {
    sub: Field,
    sup: Field,
    image_of_generator: Elem,
    images: Vec<Elem>,
    preimages: HashMap<Elem, Elem>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Embedding")
            .field("sub", &self.sub)
            .field("sup", &self.sup)
            .field("image_of_generator", &self.image_of_generator)
            .finish()
    }
}

impl Embedding {
    /// Locates the first root of `sub`'s defining polynomial among
    /// `0, w^0, w^1, ...` with `w` of order `|sub*|` in `sup`.
    pub fn new(sub: &Field, sup: &Field) -> Result<Embedding> {
        let (r, big) = (sub.degree(), sup.degree());
        if big % r != 0 {
            return Err(Error::Embedding(format!(
                "{sub} is not a subfield of {sup}"
            )));
        }
        if r > MAX_EMBED_DEGREE {
            return Err(Error::Embedding(format!(
                "subfield degree {r} exceeds the tabulated limit {MAX_EMBED_DEGREE}"
            )));
        }
        if sub == sup {
            return Ok(Embedding::identity(sub));
        }
        let size = (1u64 << r) - 1;
        let w = primitive_root_of_unity(sup, size)?;
        let defpoly = sub.defining_poly();
        let mut candidate = Elem::ZERO;
        let mut power = Elem::ONE;
        let mut root = None;
        for i in 0..=size {
            if sup.eval_gf2(defpoly, &candidate).is_zero() {
                root = Some(candidate);
                break;
            }
            if i < size {
                candidate = power;
                power = sup.mul(&power, &w);
            }
        }
        let root = root.ok_or_else(|| {
            Error::Embedding(format!("no root of 0x{} in {sup}", defpoly.to_hex()))
        })?;
        Ok(Embedding::from_root(sub, sup, root))
    }

    pub fn identity(field: &Field) -> Embedding {
        assert!(field.degree() <= MAX_EMBED_DEGREE);
        Embedding::from_root(field, field, field.generator())
    }

    fn from_root(sub: &Field, sup: &Field, root: Elem) -> Embedding {
        let r = sub.degree();
        let mut basis = Vec::with_capacity(r as usize);
        let mut p = Elem::ONE;
        for _ in 0..r {
            basis.push(p);
            p = sup.mul(&p, &root);
        }
        let count = 1usize << r;
        let mut images = vec![Elem::ZERO; count];
        for a in 1..count {
            let low = a.trailing_zeros() as usize;
            let rest = a & (a - 1);
            images[a] = sup.add(&images[rest], &basis[low]);
        }
        let preimages = images
            .iter()
            .enumerate()
            .map(|(a, img)| (*img, Elem::from_u64(a as u64)))
            .collect();
        Embedding {
            sub: sub.clone(),
            sup: sup.clone(),
            image_of_generator: root,
            images,
            preimages,
        }
    }

    pub fn sub(&self) -> &Field {
        &self.sub
    }

    pub fn sup(&self) -> &Field {
        &self.sup
    }

    pub fn image_of_generator(&self) -> Elem {
        self.image_of_generator
    }

    pub fn embed(&self, a: &Elem) -> Elem {
        self.images[a.low_u64() as usize]
    }

    /// The preimage of `b`, if `b` lies in the embedded subfield.
    pub fn pull_back(&self, b: &Elem) -> Option<Elem> {
        self.preimages.get(b).copied()
    }
}

/// The splitting field GF(q^t) of `x^nbar - 1` over `base`, with
/// `t = ord_nbar(q)`, together with the embedding of `base`.
pub fn splitting_field_for(base: &Field, nbar: u64) -> Result<(Field, Embedding, u32)> {
    if nbar == 0 || nbar.is_multiple_of(2) {
        return Err(Error::InvalidModulus(nbar));
    }
    let q = base.order().ok_or(Error::UnsupportedDegree {
        degree: base.degree(),
        max: 63,
    })?;
    let t = multiplicative_order(q % nbar, nbar) as u32;
    if t == 1 {
        return Ok((base.clone(), Embedding::identity(base), 1));
    }
    let degree = base.degree().saturating_mul(t);
    if degree > MAX_DEGREE {
        return Err(Error::UnsupportedDegree {
            degree,
            max: MAX_DEGREE,
        });
    }
    let sup = build_field(degree, None)?;
    let emb = Embedding::new(base, &sup)?;
    Ok((sup, emb, t))
}
