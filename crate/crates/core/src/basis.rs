//! Reduced lexicographic Gröbner bases with a prescribed standard set.
//!
//! A [`ReducedGB`] over `Δ` holds, for every corner `α` of `Δ`, the monic
//! polynomial `f_α = x^α + Σ_{β ∈ Δ, β ≺ α} d_{α,β} x^β`. The quotient by
//! the ideal it spans is free on the monomials of `Δ`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::poly::{AlgebraError, LexPolynomial, RawPolynomial};
use crate::staircase::{Exponent, StandardSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGB {
    delta: StandardSet,
    field: Field,
    entries: BTreeMap<Exponent, LexPolynomial>,
}

impl ReducedGB {
    /// Validate the shape: one entry per corner, monic with that corner as
    /// leading exponent and every other exponent in `Δ`.
    pub fn new(
        delta: StandardSet,
        field: Field,
        entries: BTreeMap<Exponent, LexPolynomial>,
    ) -> Result<Self, AlgebraError> {
        let corners = delta.corners();
        for c in &corners {
            if !entries.contains_key(c) {
                return Err(AlgebraError::InvalidBasis {
                    corner: c.clone(),
                    reason: "missing entry".into(),
                });
            }
        }
        for (alpha, f) in &entries {
            let bad = |reason: String| AlgebraError::InvalidBasis {
                corner: alpha.clone(),
                reason,
            };
            if corners.binary_search(alpha).is_err() {
                return Err(bad("not a corner of the standard set".into()));
            }
            if f.field() != field {
                return Err(AlgebraError::FieldMismatch(field, f.field()));
            }
            if f.dim() != delta.dim() {
                return Err(AlgebraError::DimensionMismatch {
                    expected: delta.dim(),
                    found: f.dim(),
                });
            }
            if f.leading_exponent()? != alpha {
                return Err(bad(format!(
                    "leading exponent is {}",
                    f.leading_exponent()?
                )));
            }
            if !f.is_monic() {
                return Err(bad("not monic".into()));
            }
            if let Some(e) = f.tail_exponents().find(|e| !delta.contains(e)) {
                return Err(bad(format!(
                    "non-leading exponent {} outside the standard set",
                    e
                )));
            }
        }
        Ok(ReducedGB {
            delta,
            field,
            entries,
        })
    }

    /// The monomial ideal `⟨x^α : α ∈ C(Δ)⟩`.
    pub fn monomial(delta: StandardSet, field: Field) -> Self {
        let entries = delta
            .corners()
            .into_iter()
            .map(|c| (c.clone(), LexPolynomial::monomial(c, field)))
            .collect();
        ReducedGB {
            delta,
            field,
            entries,
        }
    }

    pub fn delta(&self) -> &StandardSet {
        &self.delta
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.delta.dim()
    }

    /// Entries keyed by corner, in increasing lex order.
    pub fn entries(&self) -> &BTreeMap<Exponent, LexPolynomial> {
        &self.entries
    }

    pub fn get(&self, corner: &Exponent) -> Option<&LexPolynomial> {
        self.entries.get(corner)
    }

    fn corner_dividing(&self, e: &Exponent) -> &Exponent {
        self.entries
            .keys()
            .find(|c| c.divides(e))
            .expect("every exponent outside a standard set is a multiple of a corner")
    }

    /// The unique representative of `p` modulo the ideal whose support lies
    /// in `Δ`. Always cancels the lex-greatest reducible term first.
    pub fn normal_form(&self, p: &LexPolynomial) -> Result<LexPolynomial, AlgebraError> {
        if p.field() != self.field {
            return Err(AlgebraError::FieldMismatch(self.field, p.field()));
        }
        if p.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: p.dim(),
            });
        }
        let mut work = p.clone();
        let mut out = LexPolynomial::zero(self.dim(), self.field);
        while let Some((e, c)) = work.pop_leading() {
            if self.delta.contains(&e) {
                out.add_term(e, c);
                continue;
            }
            let corner = self.corner_dividing(&e);
            let f = &self.entries[corner];
            let shift = e.sub(corner);
            // the leading term cancels against (e, c), which is already popped
            for (t, a) in f.tail_exponents().map(|t| (t, f.coefficient(t))) {
                work.add_term(t.add(&shift), -&(&c * &a));
            }
        }
        Ok(out)
    }

    /// The unique monic element of the ideal with leading exponent `α` and
    /// all other exponents in `Δ`: `x^α - NF(x^α)`.
    pub fn extend(&self, alpha: &Exponent) -> Result<LexPolynomial, AlgebraError> {
        if self.delta.contains(alpha) {
            return Err(AlgebraError::InStandardSet(alpha.clone()));
        }
        if let Some(f) = self.entries.get(alpha) {
            return Ok(f.clone());
        }
        let x = LexPolynomial::monomial(alpha.clone(), self.field);
        x.try_sub(&self.normal_form(&x)?)
    }

    /// Does `p` lie in the ideal?
    pub fn contains(&self, p: &LexPolynomial) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Reduce a basis over `Q` modulo `p`. `None` when `p` divides a
    /// denominator.
    pub fn reduce_mod(&self, p: u64) -> Option<ReducedGB> {
        let field = Field::prime(p).ok()?;
        let entries = self
            .entries
            .iter()
            .map(|(k, f)| Some((k.clone(), f.reduce_mod(p)?)))
            .collect::<Option<BTreeMap<_, _>>>()?;
        ReducedGB::new(self.delta.clone(), field, entries).ok()
    }
}

/// Memoized [`ReducedGB::extend`]. One per worker; not shared.
#[derive(Debug)]
pub struct Extender<'a> {
    basis: &'a ReducedGB,
    cache: HashMap<Exponent, LexPolynomial>,
}

impl<'a> Extender<'a> {
    pub fn new(basis: &'a ReducedGB) -> Self {
        Extender {
            basis,
            cache: HashMap::new(),
        }
    }

    pub fn basis(&self) -> &'a ReducedGB {
        self.basis
    }

    pub fn extend(&mut self, alpha: &Exponent) -> Result<&LexPolynomial, AlgebraError> {
        if !self.cache.contains_key(alpha) {
            let f = self.basis.extend(alpha)?;
            self.cache.insert(alpha.clone(), f);
        }
        Ok(&self.cache[alpha])
    }
}

#[derive(Serialize, Deserialize)]
struct RawBasis {
    delta: StandardSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<Field>,
    entries: BTreeMap<String, RawPolynomial>,
}

/// `{"delta": …, "field": …, "entries": {"a,b,c": polynomial, …}}`; the
/// field may be omitted when there is at least one entry.
impl Serialize for ReducedGB {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawBasis {
            delta: self.delta.clone(),
            field: Some(self.field),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.key(), RawPolynomial::from(v)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ReducedGB {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawBasis::deserialize(deserializer)?;
        let mut entries = BTreeMap::new();
        for (k, v) in raw.entries {
            let key = Exponent::from_key(&k)
                .ok_or_else(|| D::Error::custom(format!("bad corner key {:?}", k)))?;
            let poly = LexPolynomial::try_from(v).map_err(D::Error::custom)?;
            entries.insert(key, poly);
        }
        let field = raw
            .field
            .or_else(|| entries.values().next().map(|p: &LexPolynomial| p.field()))
            .unwrap_or(Field::Rational);
        ReducedGB::new(raw.delta, field, entries).map_err(D::Error::custom)
    }
}
