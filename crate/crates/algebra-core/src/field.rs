//! Exact coefficient fields: the rationals and prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::AlgebraError;

/// Scalars are stored as rationals. Over a prime field they are kept as
/// canonical integers in `0..p`.
pub type Coeff = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, AlgebraError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Coeff {
        Coeff::zero()
    }

    pub fn one(&self) -> Coeff {
        Coeff::one()
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.from_int(&BigInt::from(v))
    }

    pub fn from_int(&self, v: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::from_integer(v.clone()),
            Field::Prime(p) => Coeff::from_integer(v.mod_floor(&BigInt::from(*p))),
        }
    }

    /// Maps a rational number into the field. Fails over 𝔽_p when p divides
    /// the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff, AlgebraError> {
        match self {
            Field::Rational => Ok(q.clone()),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let den = q.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(AlgebraError::DenominatorDivisibleByP(*p));
                }
                let inv = den.modpow(&(&pb - 2), &pb);
                Ok(Coeff::from_integer((q.numer() * inv).mod_floor(&pb)))
            }
        }
    }

    fn canon(&self, v: Coeff) -> Coeff {
        match self {
            Field::Rational => v,
            Field::Prime(p) => {
                debug_assert!(v.is_integer());
                Coeff::from_integer(v.to_integer().mod_floor(&BigInt::from(*p)))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.canon(a + b)
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.canon(a - b)
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.canon(a * b)
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.canon(-a)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rational => a.recip(),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                Coeff::from_integer(a.to_integer().modpow(&(&pb - 2), &pb))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        a.is_one()
    }

    /// Renders a coefficient. Over 𝔽_p the balanced representative is
    /// printed so that `p-1` appears as `-1`.
    pub fn render(&self, a: &Coeff) -> String {
        match self {
            Field::Rational => a.to_string(),
            Field::Prime(p) => {
                let v = a.to_integer();
                let pb = BigInt::from(*p);
                if &v * 2 > pb {
                    (v - pb).to_string()
                } else {
                    v.to_string()
                }
            }
        }
    }

    pub fn is_negative_repr(&self, a: &Coeff) -> bool {
        match self {
            Field::Rational => a.is_negative(),
            Field::Prime(p) => a.to_integer() * 2 > BigInt::from(*p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}
