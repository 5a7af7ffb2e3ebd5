use core::fmt;

/// Reasons a candidate parameter `a` cannot be used for the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintViolation {
    /// `a` lies in the subfield `F_q` (this includes `a = 0`).
    SubfieldElement,
    /// The coefficient of `g` vanishes.
    ConstraintEqZero,
    /// `-1` is a root of `f_a`.
    MinusOneIsRoot,
}

impl ConstraintViolation {
    pub fn code(self) -> &'static str {
        match self {
            ConstraintViolation::SubfieldElement => "SubfieldElement",
            ConstraintViolation::ConstraintEqZero => "ConstraintEqZero",
            ConstraintViolation::MinusOneIsRoot => "MinusOneIsRoot",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    EvenCharacteristic,
    BadTower {
        n: usize,
        q_sub: u64,
    },
    NoIrreducible {
        p: u64,
        n: usize,
    },
    FieldTooLarge,
    DivisionByZero,
    NoTower,
    OutOfRange(u64),
    CtxMismatch,
    ZeroPolynomial,
    BadParams(&'static str),
    ZeroParameter,
    SubfieldParameter,
    NoValidParameter,
    InvalidParameter(ConstraintViolation),
    BadPartPair,
    SamePart,
    BadOrder(u64),
    InconsistentCounts {
        bruteforce: u64,
        from_roots: u64,
    },
    TooLarge,
    NotPlanar,
    BadCharacteristic(u64),
    /// An internal identity that must hold by construction did not.
    IdentityFailed(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::EvenCharacteristic => f.write_str("characteristic 2 is not supported"),
            Error::BadTower { n, q_sub } => {
                write!(f, "q = {q_sub} does not give a cubic tower of degree {n}")
            }
            Error::NoIrreducible { p, n } => {
                write!(f, "no monic irreducible of degree {n} over F_{p} found")
            }
            Error::FieldTooLarge => f.write_str("field order exceeds the supported range"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NoTower => f.write_str("field context has no F_q subfield tower"),
            Error::OutOfRange(i) => write!(f, "encoding {i} is out of range"),
            Error::CtxMismatch => f.write_str("operands belong to different fields"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::BadParams(why) => write!(f, "bad parameters: {why}"),
            Error::ZeroParameter => f.write_str("parameter a must be nonzero"),
            Error::SubfieldParameter => f.write_str("parameter a must lie outside F_q"),
            Error::NoValidParameter => f.write_str("no valid parameter a exists"),
            Error::InvalidParameter(v) => write!(f, "invalid parameter a: {}", v.code()),
            Error::BadPartPair => f.write_str("parts are not adjacent in the construction"),
            Error::SamePart => f.write_str("vertices lie in the same part"),
            Error::BadOrder(q) => write!(f, "{q} is not a supported prime power order"),
            Error::InconsistentCounts {
                bruteforce,
                from_roots,
            } => write!(
                f,
                "pair counts disagree: brute force {bruteforce}, root structure {from_roots}"
            ),
            Error::TooLarge => f.write_str("instance too large for this method"),
            Error::NotPlanar => f.write_str("monomial is not planar over this field"),
            Error::BadCharacteristic(p) => write!(f, "characteristic {p} is not supported here"),
            Error::IdentityFailed(what) => write!(f, "internal identity failed: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
