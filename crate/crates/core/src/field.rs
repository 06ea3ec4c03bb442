//! Exact coefficient fields: prime fields `GF(p)` with `p < 2^31` and the
//! rationals with arbitrary-precision numerators and denominators.
//!
//! The computational engine is generic over [`Field`], which keeps field
//! elements small (`u32` for prime fields) in the hot Gröbner loops. The
//! dynamically typed [`FieldSpec`] / [`FieldElement`] pair is the value-level
//! interface used by input files and by callers that only learn the field at
//! runtime.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field whose elements are manipulated through a context value.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// `num / den`, failing when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    /// A uniformly random element (for `Q`, a small integer).
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn to_dynamic(&self, a: &Self::Elem) -> FieldElement;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a - c * b`, the inner step of every reduction.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }
}

/// The prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const MAX_MODULUS: u32 = 1 << 31;

    pub fn new(p: u32) -> Result<Self> {
        if p >= Self::MAX_MODULUS {
            return Err(Error::InvalidField(format!("GF({p}): modulus must be below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("GF({p}): {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    fn reduce_big(&self, n: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u32().expect("residue fits in u32")
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.reduce_i64(t0))
    }

    #[inline]
    fn sub_mul(&self, a: &u32, c: &u32, b: &u32) -> u32 {
        let p = self.p as u64;
        let prod = (*c as u64 * *b as u64) % p;
        ((*a as u64 + p - prod) % p) as u32
    }

    fn from_i64(&self, n: i64) -> u32 {
        self.reduce_i64(n)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u32> {
        let d = self.reduce_big(den);
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.reduce_big(num);
        Ok(self.mul(&n, &self.inv(&d)?))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }

    fn format(&self, a: &u32) -> String {
        // balanced representative reads better in printed polynomials
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }

    fn to_dynamic(&self, a: &u32) -> FieldElement {
        FieldElement::Prime { value: *a, p: self.p }
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-9..=9))
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn to_dynamic(&self, a: &BigRational) -> FieldElement {
        FieldElement::Rational(a.clone())
    }
}

/// Runtime description of a coefficient field, as written in input files
/// (`"QQ"` or `"GF(p)"`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    PrimeField(u32),
    Rationals,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        PrimeField::new(p).map(|f| FieldSpec::PrimeField(f.modulus()))
    }

    pub fn element(&self, num: i64, den: i64) -> Result<FieldElement> {
        let (n, d) = (BigInt::from(num), BigInt::from(den));
        match *self {
            FieldSpec::PrimeField(p) => {
                let f = PrimeField::new(p)?;
                Ok(f.to_dynamic(&f.from_ratio(&n, &d)?))
            }
            FieldSpec::Rationals => Ok(FieldElement::Rational(Rationals.from_ratio(&n, &d)?)),
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "QQ"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "QQ" || t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidField(format!("`{t}`: expected \"QQ\" or \"GF(p)\"")))?;
        let p: u32 = inner
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(format!("`{t}`: modulus is not a decimal integer below 2^32")))?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

/// A field element carrying its own field, for value-level arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Prime { value: u32, p: u32 },
    Rational(BigRational),
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Prime { p, .. } => FieldSpec::PrimeField(*p),
            FieldElement::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 0,
            FieldElement::Rational(q) => q.is_zero(),
        }
    }

    fn binary(
        &self,
        other: &Self,
        fp: impl Fn(&PrimeField, &u32, &u32) -> u32,
        fq: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<Self> {
        match (self, other) {
            (FieldElement::Prime { value: a, p }, FieldElement::Prime { value: b, p: q }) if p == q => {
                let f = PrimeField { p: *p };
                Ok(FieldElement::Prime { value: fp(&f, a, b), p: *p })
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => Ok(FieldElement::Rational(fq(a, b))),
            _ => Err(Error::FieldMismatch(format!("{} vs {}", self.field(), other.field()))),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.binary(other, |f, a, b| f.add(a, b), |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.binary(other, |f, a, b| f.sub(a, b), |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.binary(other, |f, a, b| f.mul(a, b), |a, b| a * b)
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Prime { value, p } => FieldElement::Prime {
                value: PrimeField { p: *p }.neg(value),
                p: *p,
            },
            FieldElement::Rational(q) => FieldElement::Rational(-q),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            FieldElement::Prime { value, p } => Ok(FieldElement::Prime {
                value: PrimeField { p: *p }.inv(value)?,
                p: *p,
            }),
            FieldElement::Rational(q) => Ok(FieldElement::Rational(Rationals.inv(q)?)),
        }
    }

    /// Equality that reports a mismatch instead of silently returning false.
    pub fn field_eq(&self, other: &Self) -> Result<bool> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field(), other.field())));
        }
        Ok(self == other)
    }
}

impl Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
            FieldElement::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            FieldElement::Rational(q) => {
                let sign = if q.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", q.numer().abs(), q.denom())
            }
        }
    }
}
