//! Multivariate polynomials under the lexicographic order `x_1 ≻ … ≻ x_n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{is_negative, Field, FieldElement, FieldError, RawScalar};
use crate::staircase::{Exponent, StaircaseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("basis entry for corner {corner} is invalid: {reason}")]
    InvalidBasis { corner: Exponent, reason: String },
    #[error("exponent {0} lies in the standard set")]
    InStandardSet(Exponent),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
}

/// A polynomial with exact coefficients. Zero coefficients are never
/// stored; terms are keyed by exponent in increasing lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexPolynomial {
    dim: usize,
    field: Field,
    terms: BTreeMap<Exponent, FieldElement>,
}

impl LexPolynomial {
    pub fn zero(dim: usize, field: Field) -> Self {
        LexPolynomial {
            dim,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: FieldElement) -> Self {
        Self::term(Exponent::zero(dim), c)
    }

    pub fn one(dim: usize, field: Field) -> Self {
        Self::constant(dim, field.one())
    }

    pub fn monomial(exp: Exponent, field: Field) -> Self {
        Self::term(exp, field.one())
    }

    pub fn term(exp: Exponent, c: FieldElement) -> Self {
        let mut p = Self::zero(exp.dim(), c.field());
        p.add_term(exp, c);
        p
    }

    /// `x_i` (zero-based `i`).
    pub fn variable(dim: usize, i: usize, field: Field) -> Self {
        Self::monomial(Exponent::unit(dim, i), field)
    }

    /// Build from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        dim: usize,
        field: Field,
        terms: impl IntoIterator<Item = (Exponent, FieldElement)>,
    ) -> Result<Self, AlgebraError> {
        let mut p = Self::zero(dim, field);
        for (e, c) in terms {
            if e.dim() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    found: e.dim(),
                });
            }
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch(field, c.field()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &FieldElement)> + '_ {
        self.terms.iter().rev()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Exponent> + '_ {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, e: &Exponent) -> FieldElement {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn leading_exponent(&self) -> Result<&Exponent, AlgebraError> {
        self.leading_term()
            .map(|(e, _)| e)
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_term().is_some_and(|(_, c)| c.is_one())
    }

    /// Exponents other than the leading one.
    pub fn tail_exponents(&self) -> impl Iterator<Item = &Exponent> + '_ {
        self.terms.keys().rev().skip(1)
    }

    /// `self += c·x^e`.
    pub fn add_term(&mut self, e: Exponent, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Exponent, FieldElement)> {
        self.terms.pop_last()
    }

    fn compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field, other.field));
        }
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.compatible(other)?;
        let mut out = Self::zero(self.dim, self.field);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.add(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn try_scale(&self, c: &FieldElement) -> Result<Self, AlgebraError> {
        if c.field() != self.field {
            return Err(AlgebraError::FieldMismatch(self.field, c.field()));
        }
        Ok(self.scale(c))
    }

    pub(crate) fn scale(&self, c: &FieldElement) -> Self {
        let mut out = Self::zero(self.dim, self.field);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.terms.insert(e.clone(), a * c);
        }
        out
    }

    /// `self -= c·x^shift·other` for compatible operands.
    pub(crate) fn sub_scaled_shifted(&mut self, c: &FieldElement, shift: &Exponent, other: &Self) {
        for (e, a) in &other.terms {
            self.add_term(e.add(shift), -&(c * a));
        }
    }

    /// `x^shift · self`.
    pub fn shift(&self, shift: &Exponent) -> Self {
        LexPolynomial {
            dim: self.dim,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(shift), c.clone()))
                .collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn make_monic(&self) -> Result<Self, AlgebraError> {
        let (_, lc) = self.leading_term().ok_or(AlgebraError::ZeroPolynomial)?;
        Ok(self.scale(&lc.inv().expect("nonzero leading coefficient")))
    }

    /// Evaluate at a point.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement, AlgebraError> {
        if point.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: point.len(),
            });
        }
        if let Some(x) = point.iter().find(|x| x.field() != self.field) {
            return Err(AlgebraError::FieldMismatch(self.field, x.field()));
        }
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                t = &t * &x.pow(k);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitute `x_n = λ`, giving a polynomial in `x_1, …, x_{n-1}`.
    pub fn substitute_last(&self, lambda: &FieldElement) -> Result<Self, AlgebraError> {
        if self.dim == 0 {
            return Err(AlgebraError::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if lambda.field() != self.field {
            return Err(AlgebraError::FieldMismatch(self.field, lambda.field()));
        }
        let mut out = Self::zero(self.dim - 1, self.field);
        for (e, c) in &self.terms {
            out.add_term(e.head(), c * &lambda.pow(e.last()));
        }
        Ok(out)
    }

    /// View a polynomial in `x_1, …, x_{n-1}` inside `k[x_1, …, x_n]`.
    pub fn lift(&self) -> Self {
        LexPolynomial {
            dim: self.dim + 1,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.extend(0), c.clone()))
                .collect(),
        }
    }

    /// Reduce rational coefficients modulo `p`. `None` when `p` divides a
    /// denominator or the polynomial is not over `Q`.
    pub fn reduce_mod(&self, p: u64) -> Option<Self> {
        let field = Field::Prime(p);
        let mut out = Self::zero(self.dim, field);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.reduce_mod(p)?);
        }
        Some(out)
    }
}

impl fmt::Display for LexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    exp: Vec<u32>,
    coef: RawScalar,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawPolynomial {
    dim: usize,
    field: Field,
    terms: Vec<RawTerm>,
}

impl From<&LexPolynomial> for RawPolynomial {
    fn from(p: &LexPolynomial) -> Self {
        RawPolynomial {
            dim: p.dim,
            field: p.field,
            terms: p
                .terms()
                .map(|(e, c)| RawTerm {
                    exp: e.to_vec(),
                    coef: c.into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<RawPolynomial> for LexPolynomial {
    type Error = AlgebraError;

    fn try_from(raw: RawPolynomial) -> Result<Self, Self::Error> {
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Ok((Exponent::new(t.exp), t.coef.resolve(raw.field)?)))
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        LexPolynomial::from_terms(raw.dim, raw.field, terms)
    }
}

/// `{"dim": n, "field": …, "terms": [{"exp": […], "coef": …}, …]}`, terms
/// in decreasing lex order.
impl Serialize for LexPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawPolynomial::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LexPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawPolynomial::deserialize(deserializer)?;
        LexPolynomial::try_from(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, dim: usize, f: Field) -> LexPolynomial {
        LexPolynomial::variable(dim, i, f)
    }

    #[test]
    fn difference_of_squares() {
        let q = Field::Rational;
        let one = LexPolynomial::one(2, q);
        let a = x(0, 2, q).try_add(&one).unwrap();
        let b = x(0, 2, q).try_sub(&one).unwrap();
        let p = a.try_mul(&b).unwrap();
        assert_eq!(p.to_string(), "x1^2 - 1");
        assert_eq!(p.leading_exponent().unwrap(), &Exponent::from([2, 0]));
    }

    #[test]
    fn adding_zero() {
        let q = Field::Rational;
        let p = x(1, 2, q).try_add(&LexPolynomial::one(2, q)).unwrap();
        assert_eq!(p.try_add(&LexPolynomial::zero(2, q)).unwrap(), p);
    }

    #[test]
    fn characteristic_two_vanishing() {
        let f2 = Field::prime(2).unwrap();
        let p = x(1, 2, f2).try_scale(&f2.from_i64(2)).unwrap();
        assert!(p.is_zero());
        assert!(p.leading_exponent().is_err());
    }

    #[test]
    fn mismatches_are_reported() {
        let a = x(0, 2, Field::Rational);
        let b = x(0, 2, Field::Prime(7));
        assert!(matches!(
            a.try_add(&b),
            Err(AlgebraError::FieldMismatch(..))
        ));
        let c = x(0, 3, Field::Rational);
        assert!(matches!(
            a.try_mul(&c),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lex_order_of_terms() {
        let q = Field::Rational;
        // x2^5 ≺ x1 under lex
        let p = x(1, 2, q)
            .shift(&Exponent::from([0, 4]))
            .try_add(&x(0, 2, q))
            .unwrap();
        assert_eq!(p.leading_exponent().unwrap(), &Exponent::from([1, 0]));
        assert_eq!(p.to_string(), "x1 + x2^5");
    }

    #[test]
    fn substitution_and_evaluation() {
        let q = Field::Rational;
        // x1*x2^2 + 3
        let p = LexPolynomial::from_terms(
            2,
            q,
            vec![
                (Exponent::from([1, 2]), q.one()),
                (Exponent::from([0, 0]), q.from_i64(3)),
            ],
        )
        .unwrap();
        let s = p.substitute_last(&q.from_i64(2)).unwrap();
        assert_eq!(s.to_string(), "4*x1 + 3");
        assert_eq!(
            p.evaluate(&[q.from_i64(5), q.from_i64(2)]).unwrap(),
            q.from_i64(23)
        );
        assert_eq!(s.lift().dim(), 2);
    }

    #[test]
    fn json_round_trip() {
        let q = Field::Rational;
        let p = LexPolynomial::from_terms(
            2,
            q,
            vec![
                (Exponent::from([1, 0]), q.parse_element("-1/2").unwrap()),
                (Exponent::from([0, 0]), q.from_i64(3)),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"dim":2,"field":"Q","terms":[{"exp":[1,0],"coef":"-1/2"},{"exp":[0,0],"coef":3}]}"#
        );
        let back: LexPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
