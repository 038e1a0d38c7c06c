use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Base field of every map: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    modulus: Option<u64>,
}

impl Field {
    pub const RATIONALS: Field = Field { modulus: None };

    /// Prime field of order `p`. The modulus is checked by trial division and
    /// must fit in 32 bits.
    pub fn prime(p: u64) -> Result<Field> {
        if p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field { modulus: Some(p) })
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_rational(&self) -> bool {
        self.modulus.is_none()
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.modulus {
            None => Scalar { field: *self, value: Value::Q(BigRational::from_integer(v.into())) },
            Some(p) => Scalar { field: *self, value: Value::P(reduce_i64(v, p)) },
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: BigInt, den: BigInt) -> Result<Scalar> {
        match self.modulus {
            None => {
                if den.is_zero() {
                    return Err(Error::Parse(format!("{num}/{den}")));
                }
                Ok(Scalar { field: *self, value: Value::Q(BigRational::new(num, den)) })
            }
            Some(p) => {
                let n = reduce_big(&num, p);
                let d = reduce_big(&den, p);
                if d == 0 {
                    return Err(Error::Parse(format!("{num}/{den} has no value mod {p}")));
                }
                Ok(Scalar { field: *self, value: Value::P(mul_mod(n, inv_mod(d, p), p)) })
            }
        }
    }

    /// Parses `"n"` or `"n/d"` with optional sign.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::Parse(text.to_string());
        let t = text.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        let num = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        self.from_ratio(num, den)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => f.write_str("Q"),
            Some(p) => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn reduce_i64(v: i64, p: u64) -> u64 {
    (i128::from(v).rem_euclid(i128::from(p))) as u64
}

fn reduce_big(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap_or(0)
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Value {
    Q(BigRational),
    P(u64),
}

/// A field element tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub(crate) field: Field,
    pub(crate) value: Value,
}

impl Scalar {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Q(q) => q.is_zero(),
            Value::P(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Q(q) => q.is_one(),
            Value::P(v) => *v == 1,
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Q(q) => Some(q),
            Value::P(_) => None,
        }
    }

    /// The canonical residue in `[0, p)`, if this is a prime-field scalar.
    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Q(_) => None,
            Value::P(v) => Some(*v),
        }
    }

    fn same(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Q(a), Value::Q(b)) => Value::Q(a + b),
            (Value::P(a), Value::P(b)) => Value::P((a + b) % self.field.modulus.unwrap_or(1)),
            _ => return Err(Error::FieldMismatch),
        };
        Ok(Scalar { field: self.field, value })
    }

    pub fn neg(&self) -> Scalar {
        let value = match &self.value {
            Value::Q(a) => Value::Q(-a),
            Value::P(a) => {
                let p = self.field.modulus.unwrap_or(1);
                Value::P((p - a) % p)
            }
        };
        Scalar { field: self.field, value }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Q(a), Value::Q(b)) => Value::Q(a * b),
            (Value::P(a), Value::P(b)) => Value::P(mul_mod(*a, *b, self.field.modulus.unwrap_or(1))),
            _ => return Err(Error::FieldMismatch),
        };
        Ok(Scalar { field: self.field, value })
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let value = match &self.value {
            Value::Q(a) => Value::Q(a.recip()),
            Value::P(a) => Value::P(inv_mod(*a, self.field.modulus.unwrap_or(1))),
        };
        Some(Scalar { field: self.field, value })
    }

    /// Canonical text form: `n`, `n/d` in lowest terms, or the residue.
    pub fn to_canonical(&self) -> String {
        match &self.value {
            Value::Q(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Value::P(v) => v.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}
