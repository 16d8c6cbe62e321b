//! Cyclic codes given by generator polynomials, their Euclidean and Hermitian
//! duals, the self-dual enumeration stream and minimum distances.

mod distance;
mod enumerate;

pub use distance::{best_min_distance, minimum_distance, BestDistance, Distance};
pub use enumerate::{enumerate_self_dual, SelfDualEnumeration};

use crate::error::{Error, Result};
use crate::finite_field::{Elem, Field};
use crate::polynomial::{Kind, Poly};

/// A cyclic code of length `n`: the ideal generated by a monic divisor of `x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    generator: Poly,
}

/// Builds the code generated by `g`; `g` is made monic first.
pub fn code_from_generator(g: &Poly, n: usize, field: &Field) -> Result<CyclicCode> {
    if g.field() != field {
        return Err(Error::FieldMismatch {
            left: g.field().to_string(),
            right: field.to_string(),
        });
    }
    if g.is_zero() || !g.divides(&Poly::x_pow_minus_one(field, n))? {
        return Err(Error::NotADivisor { n });
    }
    Ok(CyclicCode {
        n,
        generator: g.monic(),
    })
}

impl CyclicCode {
    pub fn new(g: &Poly, n: usize) -> Result<CyclicCode> {
        code_from_generator(g, n, g.field())
    }

    pub(crate) fn from_trusted(generator: Poly, n: usize) -> CyclicCode {
        CyclicCode { n, generator }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `n - deg g`.
    pub fn k(&self) -> usize {
        self.n - self.generator.degree().expect("nonzero generator")
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    /// `(x^n - 1) / g`.
    pub fn parity_check_poly(&self) -> Poly {
        Poly::x_pow_minus_one(self.field(), self.n)
            .exact_div(&self.generator)
            .expect("generator divides x^n - 1")
    }

    /// Rows `x^i g(x)` for `i = 0 .. k-1`, as length-`n` vectors.
    pub fn generator_matrix(&self) -> Vec<Vec<Elem>> {
        let g = self.generator.coeffs();
        (0..self.k())
            .map(|i| {
                let mut row = vec![Elem::ZERO; self.n];
                row[i..i + g.len()].copy_from_slice(g);
                row
            })
            .collect()
    }

    /// Polynomial criterion: `deg g = n/2` and `g` generates its own dual.
    pub fn is_self_dual(&self, kind: Kind) -> Result<bool> {
        if 2 * self.generator.degree().unwrap_or(0) != self.n {
            return Ok(false);
        }
        Ok(dual_generator(&self.generator, self.n, kind)? == self.generator)
    }
}

/// Generator of the dual code: `p*` (Euclidean) or `p†` (Hermitian) with
/// `p = (x^n - 1)/g` the parity-check polynomial.
pub fn dual_generator(g: &Poly, n: usize, kind: Kind) -> Result<Poly> {
    let field = g.field();
    if g.is_zero() {
        return Err(Error::NotADivisor { n });
    }
    let p = Poly::x_pow_minus_one(field, n)
        .exact_div(g)
        .map_err(|_| Error::NotADivisor { n })?;
    kind.pair(&p)
}

/// `sum x_i * bar(y_i)` with `bar` the identity or `a -> a^q`.
pub fn inner_product(field: &Field, x: &[Elem], y: &[Elem], kind: Kind) -> Result<Elem> {
    let mut acc = Elem::ZERO;
    for (a, b) in x.iter().zip(y) {
        acc = field.add(&acc, &field.mul(a, &kind.bar(field, b)?));
    }
    Ok(acc)
}

/// Matrix criterion: every pair of generator-matrix rows (including each row
/// with itself) is orthogonal under the given form.
pub fn rows_self_orthogonal(code: &CyclicCode, kind: Kind) -> Result<bool> {
    let field = code.field();
    let rows = code.generator_matrix();
    let barred = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|a| kind.bar(field, a))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    for x in &rows {
        for y in &barred {
            let mut acc = Elem::ZERO;
            for (a, b) in x.iter().zip(y) {
                acc = field.add(&acc, &field.mul(a, b));
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Self-duality checked on the generator matrix only: dimension `n/2` and
/// all rows mutually orthogonal.
pub fn is_self_dual_by_matrix(code: &CyclicCode, kind: Kind) -> Result<bool> {
    Ok(2 * code.k() == code.n() && rows_self_orthogonal(code, kind)?)
}
