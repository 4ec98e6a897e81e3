//! Exact scalars: arbitrary-precision rationals and prime-field residues.
//!
//! Both live in one tagged [`FieldElement`] so that the field can be chosen
//! at run time (from a JSON file or the command line). Arithmetic between
//! elements of different fields is a programming error and panics;
//! polynomial-level code checks [`Field`] compatibility up front and
//! reports [`crate::poly::AlgebraError::FieldMismatch`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse {0:?} as a field element")]
    Parse(String),
    #[error("cannot parse {0:?} as a field (expected \"Q\" or \"Fp:<prime>\")")]
    ParseField(String),
}

/// The coefficient field: `Q` or `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElement::Prime {
                value: (v as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_u64(self, v: u64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElement::Prime {
                value: v % p,
                modulus: p,
            },
        }
    }

    /// Map a rational into this field. Fails for `F_p` when `p` divides the
    /// denominator.
    pub fn from_rational(self, q: &BigRational) -> Option<FieldElement> {
        match self {
            Field::Rational => Some(FieldElement::Rational(q.clone())),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let num = q.numer().mod_floor(&pm).to_u64().unwrap();
                let den = q.denom().mod_floor(&pm).to_u64().unwrap();
                if den == 0 {
                    return None;
                }
                Some(FieldElement::Prime {
                    value: mul_mod(num, pow_mod(den, p - 2, p), p),
                    modulus: p,
                })
            }
        }
    }

    /// Parse `"3"`, `"-3"`, `"3/4"` in this field.
    pub fn parse_element(self, s: &str) -> Result<FieldElement, FieldError> {
        let err = || FieldError::Parse(s.to_string());
        let s = s.trim();
        let q = if let Some((n, d)) = s.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            BigRational::new(n, d)
        } else {
            BigRational::from_integer(BigInt::from_str(s).map_err(|_| err())?)
        };
        self.from_rational(&q).ok_or_else(err)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{}", p),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    /// Accepts `Q`, `Fp:<p>`, `Fp<p>` or a bare prime.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("Fp"))
            .or_else(|| t.strip_prefix("F"))
            .unwrap_or(t);
        let p: u64 = digits
            .parse()
            .map_err(|_| FieldError::ParseField(s.to_string()))?;
        Field::prime(p)
    }
}

/// JSON form: `"Q"` or `{"Fp": p}`.
impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Field::Rational => serializer.serialize_str("Q"),
            Field::Prime(p) => {
                use serde::ser::SerializeMap;
                let mut m = serializer.serialize_map(Some(1))?;
                m.serialize_entry("Fp", p)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Name(String),
            Prime {
                #[serde(rename = "Fp")]
                fp: u64,
            },
        }
        match Raw::deserialize(deserializer)? {
            Raw::Name(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Prime { fp } => Field::prime(fp).map_err(serde::de::Error::custom),
        }
    }
}

/// An exact scalar. Canonical forms make structural equality value
/// equality: rationals are reduced with positive denominator, residues lie
/// in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    pub fn zero_like(&self) -> FieldElement {
        self.field().zero()
    }

    pub fn one_like(&self) -> FieldElement {
        self.field().one()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reduce a rational modulo `p`; `None` if `p` divides the denominator.
    /// Prime-field elements are returned unchanged when the modulus
    /// matches.
    pub fn reduce_mod(&self, p: u64) -> Option<FieldElement> {
        match self {
            FieldElement::Rational(q) => Field::Prime(p).from_rational(q),
            FieldElement::Prime { modulus, .. } if *modulus == p => Some(self.clone()),
            FieldElement::Prime { .. } => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Prime { .. } => None,
        }
    }

    fn check(&self, other: &FieldElement) {
        if let (FieldElement::Prime { modulus: a, .. }, FieldElement::Prime { modulus: b, .. }) =
            (self, other)
        {
            assert_eq!(a, b, "arithmetic between F_{} and F_{}", a, b);
        }
    }
}

macro_rules! mismatch {
    ($a:expr, $b:expr) => {
        panic!("arithmetic between {} and {}", $a.field(), $b.field())
    };
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        self.check(rhs);
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Prime { value: a, modulus }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime {
                    value: add_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => mismatch!(self, rhs),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        self.check(rhs);
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            (FieldElement::Prime { value: a, modulus }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime {
                    value: add_mod(*a, *modulus - *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => mismatch!(self, rhs),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        self.check(rhs);
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Prime { value: a, modulus }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => mismatch!(self, rhs),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

/// Rationals by value, residues by representative. Only meaningful within
/// one field; used for deterministic ordering of slice keys.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a.cmp(b),
            (
                FieldElement::Prime {
                    value: a,
                    modulus: p,
                },
                FieldElement::Prime {
                    value: b,
                    modulus: q,
                },
            ) => (p, a).cmp(&(q, b)),
            (FieldElement::Rational(_), _) => Ordering::Less,
            (_, FieldElement::Rational(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{}", value),
        }
    }
}

/// JSON scalar: an integer when it fits in `i64`, otherwise the string
/// `"num/den"` (or `"num"`).
impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            FieldElement::Prime { value, .. } => serializer.serialize_u64(*value),
            FieldElement::Rational(q) => {
                if q.denom().is_one() {
                    if let Some(v) = q.numer().to_i64() {
                        return serializer.serialize_i64(v);
                    }
                }
                serializer.serialize_str(&self.to_string())
            }
        }
    }
}

/// A scalar as it appears in JSON before its field is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawScalar {
    Int(i64),
    Text(String),
}

impl RawScalar {
    pub fn resolve(&self, field: Field) -> Result<FieldElement, FieldError> {
        match self {
            RawScalar::Int(v) => Ok(field.from_i64(*v)),
            RawScalar::Text(s) => field.parse_element(s),
        }
    }
}

impl From<&FieldElement> for RawScalar {
    fn from(x: &FieldElement) -> Self {
        match x {
            FieldElement::Prime { value, .. } => RawScalar::Int(*value as i64),
            FieldElement::Rational(q) if q.denom().is_one() && q.numer().to_i64().is_some() => {
                RawScalar::Int(q.numer().to_i64().unwrap())
            }
            FieldElement::Rational(_) => RawScalar::Text(x.to_string()),
        }
    }
}

/// The operations the linear-algebra routines need from a scalar type.
///
/// Implemented by [`FieldElement`] and by the quadratic extension
/// [`crate::pointset::Fp2`].
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// The image of the integer `v` in the same field as `self`.
    fn u64_like(&self, v: u64) -> Self;
}

impl Scalar for FieldElement {
    fn zero_like(&self) -> Self {
        FieldElement::zero_like(self)
    }
    fn one_like(&self) -> Self {
        FieldElement::one_like(self)
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        FieldElement::inv(self)
    }
    fn u64_like(&self, v: u64) -> Self {
        self.field().from_u64(v)
    }
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Sign helper for display of polynomials.
pub(crate) fn is_negative(x: &FieldElement) -> bool {
    match x {
        FieldElement::Rational(q) => q.is_negative(),
        FieldElement::Prime { .. } => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(q(2, 4), q(-1, -2));
        assert_eq!((&q(1, 3) + &q(1, 6)).to_string(), "1/2");
        assert_eq!(q(3, 4).inv().unwrap(), q(4, 3));
        assert!(q(0, 1).inv().is_none());
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::prime(101).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, f.from_u64(100));
        assert_eq!(&a * &a, f.one());
        let inv = f.from_i64(7).inv().unwrap();
        assert_eq!(&inv * &f.from_i64(7), f.one());
        assert_eq!(f.parse_element("1/2").unwrap(), f.from_i64(51));
        assert!(f.parse_element("1/101").is_err());
        // characteristic two
        let f2 = Field::prime(2).unwrap();
        assert!((&f2.from_i64(1) + &f2.from_i64(1)).is_zero());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("Fp:101".parse::<Field>().unwrap(), Field::Prime(101));
        assert_eq!("32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert!("Fp:100".parse::<Field>().is_err());
        assert_eq!(
            serde_json::to_string(&Field::Prime(7)).unwrap(),
            r#"{"Fp":7}"#
        );
        assert_eq!(
            serde_json::from_str::<Field>(r#""Q""#).unwrap(),
            Field::Rational
        );
        assert_eq!(
            serde_json::from_str::<Field>(r#"{"Fp":7}"#).unwrap(),
            Field::Prime(7)
        );
        assert!(serde_json::from_str::<Field>(r#"{"Fp":8}"#).is_err());
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(32003));
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751));
    }

    #[test]
    fn reduction_mod_p() {
        assert_eq!(
            q(1, 2).reduce_mod(101),
            Some(Field::Prime(101).from_i64(51))
        );
        assert_eq!(q(1, 101).reduce_mod(101), None);
        assert_eq!(q(-3, 1).reduce_mod(7), Some(Field::Prime(7).from_i64(4)));
    }

    #[test]
    fn json_scalars() {
        assert_eq!(serde_json::to_string(&q(3, 1)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&q(-3, 4)).unwrap(), "\"-3/4\"");
        let raw: RawScalar = serde_json::from_str("\"5/2\"").unwrap();
        assert_eq!(raw.resolve(Field::Rational).unwrap(), q(5, 2));
    }
}
