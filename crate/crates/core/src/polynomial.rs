//! Dense univariate polynomials over GF(2^m), reciprocal and
//! conjugate-reciprocal maps, minimal polynomials from cyclotomic cosets and
//! the paired factorization of `x^nbar - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cosets::{cyclotomic_cosets, CyclotomicCoset};
use crate::error::{Error, Result};
use crate::finite_field::{primitive_root_of_unity, splitting_field_for, Elem, Embedding, Field};
use crate::modular::prime_factors;

/// Which duality a construction refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Euclidean,
    Hermitian,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Euclidean => "euclidean",
            Kind::Hermitian => "hermitian",
        }
    }

    /// The pairing map on factors: `f*` or `f†`.
    pub fn pair(&self, f: &Poly) -> Result<Poly> {
        match self {
            Kind::Euclidean => f.reciprocal(),
            Kind::Hermitian => f.conjugate_reciprocal(hermitian_q(f.field())?),
        }
    }

    /// The coset multiplier matching [`Kind::pair`]: `-1` or `-q`.
    pub fn multiplier(&self, field: &Field) -> Result<i64> {
        match self {
            Kind::Euclidean => Ok(-1),
            Kind::Hermitian => Ok(-(hermitian_q(field)? as i64)),
        }
    }

    /// The involution applied to the second argument of the inner product.
    pub fn bar(&self, field: &Field, a: &Elem) -> Result<Elem> {
        match self {
            Kind::Euclidean => Ok(*a),
            Kind::Hermitian => field.conjugate(a, hermitian_q(field)?),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" | "e" => Ok(Kind::Euclidean),
            "hermitian" | "h" => Ok(Kind::Hermitian),
            _ => Err(Error::Parse(format!("unknown kind `{s}`"))),
        }
    }
}

/// `q` with `|field| = q^2`, as fixed by the field's degree `2l`.
pub fn hermitian_q(field: &Field) -> Result<u64> {
    field.quadratic_base().ok_or(Error::NotQuadratic {
        q: 0,
        field: field.to_string(),
    })
}

/// A polynomial with coefficients in a [`Field`], ascending, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    /// Builds from ascending coefficients, checking each lies in `field`.
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Result<Poly> {
        if let Some(bad) = coeffs.iter().find(|c| !field.contains(c)) {
            return Err(Error::Parse(format!(
                "{bad:?} is not an element of {field}"
            )));
        }
        Ok(Poly::from_raw(field, coeffs))
    }

    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(Elem::is_zero) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_u64s(field: &Field, coeffs: &[u64]) -> Result<Poly> {
        Poly::new(field, coeffs.iter().map(|&c| Elem::from_u64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: vec![Elem::ONE],
        }
    }

    pub fn monomial(field: &Field, degree: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; degree + 1];
        coeffs[degree] = Elem::ONE;
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// `x^n - 1`, which is `x^n + 1` in characteristic 2.
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Poly {
        let mut p = Poly::monomial(field, n);
        p.coeffs[0] = field.add(&p.coeffs[0], &Elem::ONE);
        Poly::from_raw(field, p.coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Elem::ONE
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            })
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.add_raw(other))
    }

    fn add_raw(&self, other: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = self.field.add(c, d);
        }
        Poly::from_raw(&self.field, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.mul_raw(other))
    }

    pub(crate) fn mul_raw(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        if let Some((exp, log)) = f.tables() {
            let rhs: Vec<(usize, u32)> = other
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, log[c.low_u64() as usize]))
                .collect();
            let mut acc = vec![0u64; out.len()];
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let la = log[a.low_u64() as usize];
                for &(j, lb) in &rhs {
                    acc[i + j] ^= exp[(la + lb) as usize] as u64;
                }
            }
            for (o, a) in out.iter_mut().zip(acc) {
                *o = Elem::from_u64(a);
            }
        } else {
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.coeffs.iter().enumerate() {
                    let p = f.mul(a, b);
                    out[i + j] = f.add(&out[i + j], &p);
                }
            }
        }
        Poly::from_raw(f, out)
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::from_raw(&self.field, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_raw(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_raw(&base);
            }
        }
        acc
    }

    /// Quotient and remainder, `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv(&divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let factor = f.mul(&c, &lead_inv);
            quot[i] = factor;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.add(&rem[i + j], &f.mul(&factor, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// `self / divisor`, failing unless the division is exact.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor {
                n: self.degree().unwrap_or(0),
            })
        }
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.divrem(self)?.1.is_zero())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(&self.leading())
            .expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn eval(&self, at: &Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, c| f.add(&f.mul(&acc, at), c))
    }

    /// Coefficient-wise `a -> a^q`.
    pub fn conjugate(&self, q: u64) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| self.field.conjugate(c, q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_raw(&self.field, coeffs))
    }

    /// `f* = f(0)^-1 x^deg f f(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = self.field.inv(&c0)?;
        let coeffs = self
            .coeffs
            .iter()
            .rev()
            .map(|c| self.field.mul(c, &inv))
            .collect();
        Ok(Poly::from_raw(&self.field, coeffs))
    }

    /// `f† = conj(f*)` over a field of order `q^2`.
    pub fn conjugate_reciprocal(&self, q: u64) -> Result<Poly> {
        self.field.conjugation_exponent(q)?;
        self.reciprocal()?.conjugate(q)
    }

    /// Canonical list form: ascending hex coefficients, e.g. `[1,1,0,1]`.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(Elem::to_hex).collect();
        format!("[{}]", parts.join(","))
    }

    /// Coordinates as integers, for JSON records.
    pub fn to_u64s(&self) -> Vec<u64> {
        self.coeffs
            .iter()
            .map(|c| c.to_u64().expect("coefficient fits in 64 bits"))
            .collect()
    }

    /// Accepts the list form (`[2,1]`) or a sum of terms (`x^3+x+1`, `2*x+1`,
    /// coefficients in hex).
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let body = body.trim();
            if body.is_empty() {
                return Ok(Poly::zero(field));
            }
            let coeffs = body
                .split(',')
                .map(Elem::from_hex)
                .collect::<Result<Vec<_>>>()?;
            return Poly::new(field, coeffs);
        }
        let mut coeffs: Vec<Elem> = Vec::new();
        for term in s.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let (coef, degree) = match term.find('x') {
                None => (Elem::from_hex(&term)?, 0usize),
                Some(pos) => {
                    let head = term[..pos].trim_end_matches('*');
                    let coef = if head.is_empty() {
                        Elem::ONE
                    } else {
                        Elem::from_hex(head)?
                    };
                    let tail = &term[pos + 1..];
                    let degree = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?
                    };
                    (coef, degree)
                }
            };
            if !field.contains(&coef) {
                return Err(Error::Parse(format!(
                    "{coef:?} is not an element of {field}"
                )));
            }
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, Elem::ZERO);
            }
            coeffs[degree] = field.add(&coeffs[degree], &coef);
        }
        Ok(Poly::from_raw(field, coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let coef = (*c != Elem::ONE).then(|| c.to_hex());
            match (i, coef) {
                (0, None) => f.write_str("1")?,
                (0, Some(h)) => f.write_str(&h)?,
                (1, None) => f.write_str("x")?,
                (1, Some(h)) => write!(f, "{h}*x")?,
                (_, None) => write!(f, "x^{i}")?,
                (_, Some(h)) => write!(f, "{h}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_list_string())
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by coefficients from the top down. Polynomials
/// over different fields compare by coefficients only.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

/// Irreducibility over GF(q): `f | x^(q^d) - x` and `gcd(f, x^(q^(d/p)) - x) = 1`
/// for each prime `p | d`.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let field = f.field();
    let f = f.monic();
    let x = Poly::monomial(field, 1);
    let r = field.degree();
    // frob[i] = x^(q^i) mod f
    let mut frob = vec![x.rem(&f).expect("nonzero")];
    for _ in 0..d {
        let mut h = frob.last().unwrap().clone();
        for _ in 0..r {
            h = h.mul_raw(&h).rem(&f).expect("nonzero");
        }
        frob.push(h);
    }
    if !frob[d].add_raw(&x).rem(&f).expect("nonzero").is_zero() {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|p| {
        let h = frob[d / p as usize].add_raw(&x);
        f.gcd(&h).expect("same field").is_one()
    })
}

/// `prod_{i in C} (x - alpha^i)`, computed in `emb.sup()` and pulled back to `base`.
pub fn minimal_polynomial(
    coset: &CyclotomicCoset,
    alpha: &Elem,
    base: &Field,
    emb: &Embedding,
) -> Result<Poly> {
    if emb.sub() != base {
        return Err(Error::Embedding(format!(
            "embedding source {} differs from base {base}",
            emb.sub()
        )));
    }
    let sup = emb.sup();
    let roots: Vec<Elem> = coset
        .members()
        .iter()
        .map(|&i| sup.pow_u64(alpha, i))
        .collect();
    minimal_from_roots(coset.rep(), &roots, base, emb)
}

fn minimal_from_roots(rep: u64, roots: &[Elem], base: &Field, emb: &Embedding) -> Result<Poly> {
    let sup = emb.sup();
    // Running product, ascending coefficients in sup.
    let mut prod = vec![Elem::ONE];
    for root in roots {
        let mut next = vec![Elem::ZERO; prod.len() + 1];
        for (i, c) in prod.iter().enumerate() {
            next[i + 1] = sup.add(&next[i + 1], c);
            next[i] = sup.add(&next[i], &sup.mul(c, root));
        }
        prod = next;
    }
    let coeffs = prod
        .iter()
        .map(|c| emb.pull_back(c).ok_or(Error::OutsideSubfield { rep }))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_raw(base, coeffs))
}

/// A coset together with its minimal polynomial `f_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetFactor {
    pub coset: CyclotomicCoset,
    pub poly: Poly,
}

/// The irreducible factors of `x^nbar - 1` over `base`, one per q-cyclotomic
/// coset, in coset order. Which factor lands on which coset depends on the
/// chosen root of unity; the set of factors does not.
pub fn cyclotomic_factors(nbar: u64, base: &Field) -> Result<Vec<CosetFactor>> {
    let q = base.order().ok_or(Error::UnsupportedDegree {
        degree: base.degree(),
        max: 63,
    })?;
    let partition = cyclotomic_cosets(nbar, q)?;
    let (sup, emb, _) = splitting_field_for(base, nbar)?;
    let alpha = primitive_root_of_unity(&sup, nbar)?;
    let mut powers = Vec::with_capacity(nbar as usize);
    let mut p = Elem::ONE;
    for _ in 0..nbar {
        powers.push(p);
        p = sup.mul(&p, &alpha);
    }
    let factors = partition
        .cosets()
        .par_iter()
        .map(|c| {
            let roots: Vec<Elem> = c.members().iter().map(|&i| powers[i as usize]).collect();
            let poly = minimal_from_roots(c.rep(), &roots, base, &emb)?;
            debug_assert!(
                is_irreducible(&poly),
                "minimal polynomial of C_{} is reducible",
                c.rep()
            );
            Ok(CosetFactor {
                coset: c.clone(),
                poly,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(factors)
}

/// Two factors exchanged by the pairing map; `factor` carries the smaller coset representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwappedPair {
    pub coset: CyclotomicCoset,
    pub factor: Poly,
    pub partner_coset: CyclotomicCoset,
    pub partner: Poly,
}

/// `x^nbar - 1 = prod f_i * prod h_j h_j'` with `f_i` fixed by the pairing
/// map and `h_j' = h_j*` (Euclidean) or `h_j†` (Hermitian).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationPattern {
    pub nbar: u64,
    pub field: Field,
    pub kind: Kind,
    pub self_paired: Vec<CosetFactor>,
    pub swapped_pairs: Vec<SwappedPair>,
}

impl FactorizationPattern {
    /// Number of self-paired factors.
    pub fn s(&self) -> usize {
        self.self_paired.len()
    }

    /// Number of swapped pairs.
    pub fn t(&self) -> usize {
        self.swapped_pairs.len()
    }

    /// Every factor, self-paired first, then each pair in order.
    pub fn factors(&self) -> impl Iterator<Item = &Poly> {
        self.self_paired.iter().map(|f| &f.poly).chain(
            self.swapped_pairs
                .iter()
                .flat_map(|p| [&p.factor, &p.partner]),
        )
    }

    pub fn product(&self) -> Poly {
        self.factors()
            .fold(Poly::one(&self.field), |acc, f| acc.mul_raw(f))
    }
}

/// Factors `x^nbar - 1` over `base` and classifies each factor as fixed by
/// the pairing map or as half of a swapped pair.
pub fn factor_cyclotomic(nbar: u64, base: &Field, kind: Kind) -> Result<FactorizationPattern> {
    if kind == Kind::Hermitian {
        hermitian_q(base)?;
    }
    let factors = cyclotomic_factors(nbar, base)?;
    let mut self_paired = Vec::new();
    let mut swapped_pairs = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let image = kind.pair(&f.poly)?;
        let j = factors
            .iter()
            .position(|g| g.poly == image)
            .expect("pairing map permutes the irreducible factors of x^nbar - 1");
        match i.cmp(&j) {
            Ordering::Equal => self_paired.push(f.clone()),
            Ordering::Less => swapped_pairs.push(SwappedPair {
                coset: f.coset.clone(),
                factor: f.poly.clone(),
                partner_coset: factors[j].coset.clone(),
                partner: factors[j].poly.clone(),
            }),
            Ordering::Greater => {}
        }
    }
    let pattern = FactorizationPattern {
        nbar,
        field: base.clone(),
        kind,
        self_paired,
        swapped_pairs,
    };
    assert_eq!(
        pattern.product(),
        Poly::x_pow_minus_one(base, nbar as usize),
        "factors of x^{nbar} - 1 do not multiply back"
    );
    Ok(pattern)
}
