use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid defining polynomial: {0}")]
    InvalidDefiningPolynomial(String),

    #[error("field degree {degree} is outside the supported range 1..={max}")]
    UnsupportedDegree { degree: u32, max: u32 },

    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("conjugation by q={q} needs a field of order q^2, field is {field}")]
    NotQuadratic { q: u64, field: String },

    #[error("{nbar} does not divide |{field}*|; extend the field (see splitting_field_for)")]
    NoRootOfUnity { nbar: u64, field: String },

    #[error("modulus must be odd and positive, got {0}")]
    InvalidModulus(u64),

    #[error("gcd({a}, {modulus}) != 1")]
    NotCoprime { a: i64, modulus: u64 },

    #[error("multiplier {multiplier} does not act as an involution on the {q}-cyclotomic cosets mod {modulus}")]
    NotInvolution {
        multiplier: i64,
        q: u64,
        modulus: u64,
    },

    #[error("polynomial has zero constant term; reciprocal is undefined")]
    ZeroConstantTerm,

    #[error(
        "coefficient of the minimal polynomial of coset {rep} lies outside the embedded base field"
    )]
    OutsideSubfield { rep: u64 },

    #[error("generator does not divide x^{n} - 1")]
    NotADivisor { n: usize },

    #[error("length {0} is odd; self-dual cyclic codes need q a power of 2 and n even")]
    OddLength(usize),

    #[error("{what} ({count}) exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        count: String,
        cap: u64,
    },

    #[error("{0}")]
    Embedding(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
