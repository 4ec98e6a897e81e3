//! Reduced lex Gröbner bases of `∩_i (⟨J_i⟩ + ⟨x_n - λ_i⟩)` by
//! interpolation and reduction.
//!
//! Each summand `i` is a reduced basis `G_i` in `x_1, …, x_{n-1}` with
//! standard set `Δ_i`, placed on the hyperplane `x_n = λ_i`. The standard
//! set of the intersection is the Connect Four sum `Δ = Σ_i Δ_i`.
//!
//! For `α ∉ Δ` write `ᾱ = q^n(α)`, `S(α) = {i : ᾱ ∈ Δ_i}` and `T(α)` for
//! the rest. With the Lagrange polynomials `χ(T, i)` in `x_n`,
//!
//! ```text
//! θ_α = x̄^ᾱ + Σ_{i ∈ T} χ(T, i) · (f_{i,ᾱ} - x̄^ᾱ)
//! φ_α = θ_α · Π_{i ∈ S} (x_n - λ_i)
//! ```
//!
//! where `f_{i,ᾱ}` is the monic element of `J_i` with leading exponent `ᾱ`
//! and tail in `Δ_i`. At `x_n = λ_i`, `θ_α` specializes to `f_{i,ᾱ}` for
//! `i ∈ T` and `φ_α` vanishes for `i ∈ S`, so `φ_α` lies in every summand.
//! Its leading exponent is `(ᾱ, #S)`, the bottom of the column above `ᾱ`
//! outside `Δ`.
//!
//! The reduction then produces, for each needed `α ∉ Δ`, the monic `f_α`
//! with tail in `Δ`: from `φ_α` at a corner, from `x_i f_{α - e_i}`
//! elsewhere, subtracting `c_γ f_γ` for every tail exponent `γ ∉ Δ`. All
//! such `γ` are lex-smaller than `α`, which makes the memoized recursion
//! well founded; the order is checked on every demand.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::{Extender, ReducedGB};
use crate::field::{Field, FieldElement, RawScalar};
use crate::poly::{AlgebraError, LexPolynomial};
use crate::staircase::{Exponent, StaircaseError, StandardSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Connect4Error {
    #[error("evaluation value {0} is used twice")]
    DuplicateEvaluationPoints(String),
    #[error("an instance needs at least one summand")]
    EmptyInstance,
    #[error("summand {0} has an empty standard set")]
    EmptyStaircase(usize),
    #[error("summand {index}: {reason}")]
    InvalidSummand { index: usize, reason: String },
    #[error("index {0} is not in the interpolation set")]
    NotInInterpolationSet(usize),
    #[error("exponent {0} lies in the standard set")]
    InStandardSet(Exponent),
    #[error("reduction of {alpha} demanded {demanded}, which is not lex-smaller")]
    InternalReductionFailure { alpha: Exponent, demanded: Exponent },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub basis: ReducedGB,
    pub lambda: FieldElement,
}

impl Summand {
    pub fn delta(&self) -> &StandardSet {
        self.basis.delta()
    }
}

/// A validated list of summands in canonical order: sorted by
/// `(Δ_i, λ_i)`, so the input order never affects the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicedInstance {
    dim: usize,
    field: Field,
    summands: Vec<Summand>,
    delta: StandardSet,
}

impl SlicedInstance {
    pub fn new(field: Field, mut summands: Vec<Summand>) -> Result<Self, Connect4Error> {
        let first = summands.first().ok_or(Connect4Error::EmptyInstance)?;
        let sub_dim = first.basis.dim();
        for (index, s) in summands.iter().enumerate() {
            if s.basis.dim() != sub_dim {
                return Err(Connect4Error::InvalidSummand {
                    index,
                    reason: format!("dimension {} differs from {}", s.basis.dim(), sub_dim),
                });
            }
            if s.basis.field() != field || s.lambda.field() != field {
                return Err(Connect4Error::InvalidSummand {
                    index,
                    reason: format!("not over {}", field),
                });
            }
            if s.delta().is_empty() {
                return Err(Connect4Error::EmptyStaircase(index));
            }
        }
        summands.sort_by(|a, b| (a.delta(), &a.lambda).cmp(&(b.delta(), &b.lambda)));
        if let Some(l) = duplicate(summands.iter().map(|s| &s.lambda)) {
            return Err(Connect4Error::DuplicateEvaluationPoints(l.to_string()));
        }
        let delta = StandardSet::sum_of_embedded(sub_dim + 1, summands.iter().map(|s| s.delta()))?;
        Ok(SlicedInstance {
            dim: sub_dim + 1,
            field,
            summands,
            delta,
        })
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn lambdas(&self) -> Vec<FieldElement> {
        self.summands.iter().map(|s| s.lambda.clone()).collect()
    }

    /// `Δ = Σ_i Δ_i`.
    pub fn delta(&self) -> &StandardSet {
        &self.delta
    }

    pub fn partition(&self, alpha: &Exponent) -> AlphaPartition {
        let head = alpha.head();
        let (s, t) =
            (0..self.summands.len()).partition(|&i| self.summands[i].delta().contains(&head));
        AlphaPartition { s, t }
    }
}

fn duplicate<'a>(it: impl Iterator<Item = &'a FieldElement>) -> Option<&'a FieldElement> {
    let mut seen = std::collections::HashSet::new();
    it.into_iter().find(|x| !seen.insert(*x))
}

/// `S(α)` and `T(α)` as summand indices into the canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaPartition {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawSummand {
    delta: StandardSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<ReducedGB>,
    lambda: RawScalar,
}

#[derive(Serialize, Deserialize)]
struct RawInstance {
    field: Field,
    summands: Vec<RawSummand>,
}

/// `{"field": …, "summands": [{"delta", "basis", "lambda"}, …]}`. A summand
/// without `"basis"` stands for the monomial ideal of its `"delta"`.
impl Serialize for SlicedInstance {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawInstance {
            field: self.field,
            summands: self
                .summands
                .iter()
                .map(|s| RawSummand {
                    delta: s.delta().clone(),
                    basis: Some(s.basis.clone()),
                    lambda: (&s.lambda).into(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SlicedInstance {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawInstance::deserialize(deserializer)?;
        let mut summands = Vec::with_capacity(raw.summands.len());
        for (index, s) in raw.summands.into_iter().enumerate() {
            let basis = s
                .basis
                .unwrap_or_else(|| ReducedGB::monomial(s.delta.clone(), raw.field));
            if basis.delta() != &s.delta {
                return Err(D::Error::custom(Connect4Error::InvalidSummand {
                    index,
                    reason: "basis staircase differs from \"delta\"".into(),
                }));
            }
            let lambda = s.lambda.resolve(raw.field).map_err(D::Error::custom)?;
            summands.push(Summand { basis, lambda });
        }
        SlicedInstance::new(raw.field, summands).map_err(D::Error::custom)
    }
}

/// `χ(T, i) = Π_{j ∈ T \ {i}} (x_n - λ_j) / (λ_i - λ_j)` in `dim` variables.
pub fn characteristic_poly(
    dim: usize,
    t: &[usize],
    i: usize,
    lambdas: &[FieldElement],
) -> Result<LexPolynomial, Connect4Error> {
    if !t.contains(&i) {
        return Err(Connect4Error::NotInInterpolationSet(i));
    }
    let field = lambdas[i].field();
    let xn = LexPolynomial::variable(dim, dim - 1, field);
    let mut out = LexPolynomial::one(dim, field);
    for &j in t.iter().filter(|&&j| j != i) {
        let inv = (&lambdas[i] - &lambdas[j])
            .inv()
            .ok_or_else(|| Connect4Error::DuplicateEvaluationPoints(lambdas[i].to_string()))?;
        let factor = xn
            .try_sub(&LexPolynomial::constant(dim, lambdas[j].clone()))?
            .try_scale(&inv)?;
        out = out.try_mul(&factor)?;
    }
    Ok(out)
}

/// `φ_α` for `α ∉ Δ`, times `x_n^{α_n - #S(α)}` so that its leading
/// exponent is `α` itself.
pub fn build_phi(inst: &SlicedInstance, alpha: &Exponent) -> Result<LexPolynomial, Connect4Error> {
    let mut ext: Vec<Extender<'_>> = inst
        .summands
        .iter()
        .map(|s| Extender::new(&s.basis))
        .collect();
    phi_with(inst, alpha, &mut ext)
}

fn phi_with(
    inst: &SlicedInstance,
    alpha: &Exponent,
    ext: &mut [Extender<'_>],
) -> Result<LexPolynomial, Connect4Error> {
    if alpha.dim() != inst.dim {
        return Err(AlgebraError::DimensionMismatch {
            expected: inst.dim,
            found: alpha.dim(),
        }
        .into());
    }
    if inst.delta.contains(alpha) {
        return Err(Connect4Error::InStandardSet(alpha.clone()));
    }
    let n = inst.dim;
    let field = inst.field;
    let head = alpha.head();
    let part = inst.partition(alpha);
    let lambdas = inst.lambdas();
    let xbar = LexPolynomial::monomial(head.extend(0), field);
    let mut theta = xbar.clone();
    for &i in &part.t {
        let fi = ext[i].extend(&head)?.lift();
        let chi = characteristic_poly(n, &part.t, i, &lambdas)?;
        theta = theta.try_add(&chi.try_mul(&fi.try_sub(&xbar)?)?)?;
    }
    let xn = LexPolynomial::variable(n, n - 1, field);
    let mut phi = theta;
    for &i in &part.s {
        phi = phi.try_mul(&xn.try_sub(&LexPolynomial::constant(n, lambdas[i].clone()))?)?;
    }
    let mut lift = vec![0; n];
    lift[n - 1] = alpha.last() - part.s.len() as u32;
    Ok(phi.shift(&Exponent::new(lift)))
}

/// Which predecessor a non-corner `α` is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChoiceRule {
    /// The smallest `i` with `α - e_i ∉ Δ`.
    #[default]
    Smallest,
    /// The largest such `i`.
    Largest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReduceOptions {
    pub choice: ChoiceRule,
    pub trace: bool,
}

/// How the starting polynomial of a step was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepSource {
    /// `φ_α`, with the interpolation sets used.
    Phi { s: Vec<usize>, t: Vec<usize> },
    /// `x_var · f_from`; `var` counts from 1.
    Shift { var: usize, from: Exponent },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subtraction {
    pub gamma: Exponent,
    pub coef: RawScalar,
}

/// One computed `f_α`, in completion order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub alpha: Exponent,
    pub source: StepSource,
    pub subtracted: Vec<Subtraction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectFourResult {
    pub delta: StandardSet,
    pub psi: ReducedGB,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStep>>,
}

struct Reducer<'a> {
    inst: &'a SlicedInstance,
    ext: Vec<Extender<'a>>,
    memo: HashMap<Exponent, LexPolynomial>,
    choice: ChoiceRule,
    trace: Option<Vec<TraceStep>>,
}

impl<'a> Reducer<'a> {
    fn f(&mut self, alpha: &Exponent) -> Result<LexPolynomial, Connect4Error> {
        if let Some(p) = self.memo.get(alpha) {
            return Ok(p.clone());
        }
        let delta = &self.inst.delta;
        let n = self.inst.dim;
        let preds: Vec<usize> = (0..n)
            .filter(|&i| alpha.predecessor(i).is_some_and(|p| !delta.contains(&p)))
            .collect();
        let pick = match self.choice {
            ChoiceRule::Smallest => preds.first(),
            ChoiceRule::Largest => preds.last(),
        };
        let (mut p, source) = match pick {
            None => {
                let part = self.inst.partition(alpha);
                let phi = phi_with(self.inst, alpha, &mut self.ext)?;
                (
                    phi,
                    StepSource::Phi {
                        s: part.s,
                        t: part.t,
                    },
                )
            }
            Some(&i) => {
                let from = alpha.predecessor(i).expect("checked above");
                self.demand(alpha, &from)?;
                let base = self.f(&from)?;
                (
                    base.shift(&Exponent::unit(n, i)),
                    StepSource::Shift { var: i + 1, from },
                )
            }
        };
        let mut subtracted = Vec::new();
        loop {
            let next = p
                .terms()
                .skip(1)
                .find(|(e, _)| !delta.contains(e))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((gamma, c)) = next else { break };
            self.demand(alpha, &gamma)?;
            let fg = self.f(&gamma)?;
            p.sub_scaled_shifted(&c, &Exponent::zero(n), &fg);
            if self.trace.is_some() {
                subtracted.push(Subtraction {
                    gamma,
                    coef: (&c).into(),
                });
            }
        }
        if let Some(t) = self.trace.as_mut() {
            t.push(TraceStep {
                alpha: alpha.clone(),
                source,
                subtracted,
            });
        }
        self.memo.insert(alpha.clone(), p.clone());
        Ok(p)
    }

    fn demand(&self, alpha: &Exponent, gamma: &Exponent) -> Result<(), Connect4Error> {
        if gamma < alpha {
            Ok(())
        } else {
            Err(Connect4Error::InternalReductionFailure {
                alpha: alpha.clone(),
                demanded: gamma.clone(),
            })
        }
    }
}

/// The reduced lex Gröbner basis `ψ` of the intersection, indexed by the
/// corners of `Δ`, which are processed in increasing lex order.
pub fn reduce_to_psi(
    inst: &SlicedInstance,
    options: ReduceOptions,
) -> Result<ConnectFourResult, Connect4Error> {
    let mut r = Reducer {
        inst,
        ext: inst
            .summands
            .iter()
            .map(|s| Extender::new(&s.basis))
            .collect(),
        memo: HashMap::new(),
        choice: options.choice,
        trace: options.trace.then(Vec::new),
    };
    let mut entries = BTreeMap::new();
    for corner in inst.delta.corners() {
        let f = r.f(&corner)?;
        entries.insert(corner, f);
    }
    let psi = ReducedGB::new(inst.delta.clone(), inst.field, entries)?;
    Ok(ConnectFourResult {
        delta: inst.delta.clone(),
        psi,
        trace: r.trace,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipCheck {
    pub corner: Exponent,
    pub summand: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub checks: Vec<MembershipCheck>,
}

impl MembershipReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Does every `ψ_α` vanish modulo every `G_i` after `x_n ↦ λ_i`?
pub fn membership_check(inst: &SlicedInstance, result: &ConnectFourResult) -> MembershipReport {
    let mut checks = Vec::new();
    for (corner, f) in result.psi.entries() {
        for (i, s) in inst.summands.iter().enumerate() {
            let pass = f
                .substitute_last(&s.lambda)
                .and_then(|g| s.basis.contains(&g))
                .unwrap_or(false);
            checks.push(MembershipCheck {
                corner: corner.clone(),
                summand: i,
                pass,
            });
        }
    }
    MembershipReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::{intersect_ideals_gb, vanishing_ideal_gb, PointSet};

    fn q() -> Field {
        Field::Rational
    }

    fn set(dim: usize, elems: &[&[u32]]) -> StandardSet {
        StandardSet::new(dim, elems.iter().map(|e| Exponent::new(e.to_vec()))).unwrap()
    }

    fn monomial_instance(parts: &[(StandardSet, i64)]) -> SlicedInstance {
        SlicedInstance::new(
            q(),
            parts
                .iter()
                .map(|(d, l)| Summand {
                    basis: ReducedGB::monomial(d.clone(), q()),
                    lambda: q().from_i64(*l),
                })
                .collect(),
        )
        .unwrap()
    }

    fn oracle(inst: &SlicedInstance) -> ReducedGB {
        let pairs: Vec<(&ReducedGB, FieldElement)> = inst
            .summands()
            .iter()
            .map(|s| (&s.basis, s.lambda.clone()))
            .collect();
        intersect_ideals_gb(&pairs).unwrap()
    }

    #[test]
    fn lagrange_basics() {
        let l: Vec<FieldElement> = [0, 1, 2].iter().map(|&v| q().from_i64(v)).collect();
        assert_eq!(
            characteristic_poly(2, &[0], 0, &l).unwrap(),
            LexPolynomial::one(2, q())
        );
        assert_eq!(
            characteristic_poly(1, &[0, 1], 0, &l).unwrap().to_string(),
            "-x1 + 1"
        );
        assert_eq!(
            characteristic_poly(1, &[0, 1], 1, &l).unwrap().to_string(),
            "x1"
        );
        let mut sum = LexPolynomial::zero(3, q());
        for i in 0..3 {
            sum = sum
                .try_add(&characteristic_poly(3, &[0, 1, 2], i, &l).unwrap())
                .unwrap();
        }
        assert_eq!(sum, LexPolynomial::one(3, q()));
        assert!(characteristic_poly(1, &[0, 1], 2, &l).is_err());
        let dup = vec![q().one(), q().one()];
        assert!(matches!(
            characteristic_poly(1, &[0, 1], 0, &dup),
            Err(Connect4Error::DuplicateEvaluationPoints(_))
        ));
    }

    #[test]
    fn minimal_corner_phi() {
        let inst = monomial_instance(&[
            (set(2, &[&[0, 0], &[1, 0]]), 0),
            (set(2, &[&[0, 0], &[0, 1]]), 1),
        ]);
        let phi = build_phi(&inst, &Exponent::from([0, 0, 2])).unwrap();
        // (x3 - 0)(x3 - 1)
        assert_eq!(phi.to_string(), "x3^2 - x3");
    }

    #[test]
    fn single_summand_reproduces_its_basis() {
        let a = PointSet::from_integers(2, q(), &[vec![0, 0], vec![1, 0], vec![1, 2]]).unwrap();
        let g = vanishing_ideal_gb(&a).unwrap();
        let inst = SlicedInstance::new(
            q(),
            vec![Summand {
                basis: g.clone(),
                lambda: q().from_i64(5),
            }],
        )
        .unwrap();
        let r = reduce_to_psi(&inst, ReduceOptions::default()).unwrap();
        for (c, f) in g.entries() {
            assert_eq!(r.psi.get(&c.extend(0)).unwrap(), &f.lift());
        }
        assert_eq!(
            r.psi.get(&Exponent::from([0, 0, 1])).unwrap().to_string(),
            "x3 - 5"
        );
        assert!(membership_check(&inst, &r).all_pass());
    }

    #[test]
    fn tetrahedron_from_points() {
        let pts = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let a = PointSet::from_integers(3, q(), &pts).unwrap();
        let sliced = crate::pointset::slice(&a).unwrap();
        let inst = SlicedInstance::new(
            q(),
            sliced
                .slices
                .iter()
                .map(|(l, s)| Summand {
                    basis: vanishing_ideal_gb(s).unwrap(),
                    lambda: l.clone(),
                })
                .collect(),
        )
        .unwrap();
        let r = reduce_to_psi(&inst, ReduceOptions::default()).unwrap();
        assert_eq!(r.psi, vanishing_ideal_gb(&a).unwrap());
    }

    #[test]
    fn agrees_with_oracle_and_choice_rule() {
        let inst = monomial_instance(&[
            (set(2, &[&[0, 0], &[1, 0], &[2, 0]]), 3),
            (set(2, &[&[0, 0], &[0, 1]]), -1),
            (set(2, &[&[0, 0]]), 7),
        ]);
        let a = reduce_to_psi(&inst, ReduceOptions::default()).unwrap();
        let b = reduce_to_psi(
            &inst,
            ReduceOptions {
                choice: ChoiceRule::Largest,
                trace: true,
            },
        )
        .unwrap();
        assert_eq!(a.psi, b.psi);
        assert_eq!(a.psi, oracle(&inst));
        assert!(membership_check(&inst, &a).all_pass());
        assert!(b
            .trace
            .unwrap()
            .iter()
            .any(|s| matches!(s.source, StepSource::Phi { .. })));
    }

    #[test]
    fn perturbation_breaks_membership() {
        let inst = monomial_instance(&[(set(1, &[&[0], &[1]]), 0), (set(1, &[&[0]]), 2)]);
        let r = reduce_to_psi(&inst, ReduceOptions::default()).unwrap();
        assert!(membership_check(&inst, &r).all_pass());
        let mut entries = r.psi.entries().clone();
        let (c, f) = entries.iter_mut().next().unwrap();
        let tail = f
            .tail_exponents()
            .next()
            .cloned()
            .unwrap_or_else(|| Exponent::zero(2));
        f.add_term(tail, q().one());
        let _ = c;
        let bad = ConnectFourResult {
            delta: r.delta.clone(),
            psi: ReducedGB::new(r.delta.clone(), q(), entries).unwrap(),
            trace: None,
        };
        assert!(!membership_check(&inst, &bad).all_pass());
    }

    #[test]
    fn canonical_order_and_validation() {
        let d1 = set(1, &[&[0], &[1]]);
        let d2 = set(1, &[&[0]]);
        let a = monomial_instance(&[(d1.clone(), 0), (d2.clone(), 4), (d2.clone(), 2)]);
        let b = monomial_instance(&[(d2.clone(), 2), (d2.clone(), 4), (d1.clone(), 0)]);
        assert_eq!(a, b);
        let ra = reduce_to_psi(&a, ReduceOptions::default()).unwrap();
        let rb = reduce_to_psi(&b, ReduceOptions::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&ra).unwrap(),
            serde_json::to_string(&rb).unwrap()
        );

        let dup = SlicedInstance::new(
            q(),
            vec![
                Summand {
                    basis: ReducedGB::monomial(d1.clone(), q()),
                    lambda: q().one(),
                },
                Summand {
                    basis: ReducedGB::monomial(d2.clone(), q()),
                    lambda: q().one(),
                },
            ],
        );
        assert!(matches!(
            dup,
            Err(Connect4Error::DuplicateEvaluationPoints(_))
        ));
        assert!(matches!(
            SlicedInstance::new(q(), vec![]),
            Err(Connect4Error::EmptyInstance)
        ));
    }

    #[test]
    fn one_dimensional_instance() {
        let p = StandardSet::point(0);
        let inst = monomial_instance(&[(p.clone(), 1), (p.clone(), 2), (p, 3)]);
        let r = reduce_to_psi(&inst, ReduceOptions::default()).unwrap();
        assert_eq!(
            r.psi.entries()[&Exponent::from([3])].to_string(),
            "x1^3 - 6*x1^2 + 11*x1 - 6"
        );
    }

    #[test]
    fn json_round_trip() {
        let inst = monomial_instance(&[(set(1, &[&[0], &[1]]), 0), (set(1, &[&[0]]), 2)]);
        let json = serde_json::to_string(&inst).unwrap();
        let back: SlicedInstance = serde_json::from_str(&json).unwrap();
        assert_eq!(back, inst);
        let short =
            r#"{"field":"Q","summands":[{"delta":{"dim":1,"elements":[[0]]},"lambda":"1/2"}]}"#;
        let s: SlicedInstance = serde_json::from_str(short).unwrap();
        assert_eq!(s.delta(), &StandardSet::point(2));
    }
}
