//! Ground truth by linear algebra.
//!
//! Every zero-dimensional ideal handled here is the common kernel of a
//! finite family of linear functionals on `k[x]`: evaluations at points,
//! Taylor coefficients at a point (fat points), or coordinates of normal
//! forms in a direct sum of quotients. Running through monomials in
//! increasing lex order and keeping those whose functional vector is
//! independent of the earlier ones yields the lex standard set; each
//! dependent monomial that is not a multiple of an earlier one is a corner,
//! and its dependency is the reduced Gröbner basis element.
//!
//! None of this uses Connect Four addition, so it can check it.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::ReducedGB;
use crate::field::{Field, FieldElement, FieldError, RawScalar, Scalar};
use crate::poly::{AlgebraError, LexPolynomial};
use crate::staircase::{Exponent, StandardSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointSetError {
    #[error("point {0:?} occurs twice")]
    DuplicatePoints(String),
    #[error("evaluation value {0} is used by two summands")]
    DuplicateEvaluationPoints(String),
    #[error("point has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("slicing needs dimension at least 1")]
    ZeroDimension,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Outcome of the greedy lex elimination.
#[derive(Debug, Clone)]
pub struct GreedyBasis<S> {
    /// Standard monomials in increasing lex order.
    pub staircase: Vec<Exponent>,
    /// For each corner `α`: coefficients `c_β` with
    /// `x^α - Σ c_β x^β` in the ideal, `β` ranging over earlier staircase
    /// monomials.
    pub relations: Vec<(Exponent, Vec<(Exponent, S)>)>,
}

/// Greedy lex-increasing elimination over all exponents in the box
/// `[0, bound]^dim`, with `eval` giving the functional vector of a
/// monomial. Multiples of already found corners are skipped.
///
/// Every corner of a standard set of size `r` lies in `[0, r]^dim`, so
/// `bound = rank of the functional family` suffices.
pub fn lex_greedy_basis<S: Scalar>(
    dim: usize,
    bound: u32,
    one: &S,
    mut eval: impl FnMut(&Exponent) -> Vec<S>,
) -> GreedyBasis<S> {
    struct Row<S> {
        pivot: usize,
        vec: Vec<S>,
        combo: Vec<S>,
    }
    let mut rows: Vec<Row<S>> = Vec::new();
    let mut staircase: Vec<Exponent> = Vec::new();
    let mut relations = Vec::new();
    let mut corners: Vec<Exponent> = Vec::new();
    let zero = one.zero_like();

    for alpha in box_exponents(dim, bound) {
        if corners.iter().any(|c| c.divides(&alpha)) {
            continue;
        }
        let mut rem = eval(&alpha);
        let mut coeffs = vec![zero.clone(); staircase.len()];
        for row in &rows {
            let t = rem[row.pivot].clone();
            if t.is_zero() {
                continue;
            }
            for (r, v) in rem.iter_mut().zip(&row.vec) {
                *r = r.sub(&t.mul(v));
            }
            for (c, v) in coeffs.iter_mut().zip(&row.combo) {
                *c = c.add(&t.mul(v));
            }
        }
        match rem.iter().position(|x| !x.is_zero()) {
            None => {
                let rel = staircase
                    .iter()
                    .cloned()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                relations.push((alpha.clone(), rel));
                corners.push(alpha);
            }
            Some(pivot) => {
                // rem = v(α) - Σ coeffs_j v(β_j); store it normalized
                let scale = rem[pivot].inv().expect("nonzero pivot");
                let mut combo: Vec<S> = coeffs.iter().map(|c| zero.sub(c).mul(&scale)).collect();
                combo.push(scale.clone());
                for row in rows.iter_mut() {
                    row.combo.push(zero.clone());
                }
                let vec = rem.iter().map(|x| x.mul(&scale)).collect();
                rows.push(Row { pivot, vec, combo });
                staircase.push(alpha);
            }
        }
    }
    GreedyBasis {
        staircase,
        relations,
    }
}

/// All exponents of `[0, bound]^dim` in increasing lex order.
fn box_exponents(dim: usize, bound: u32) -> impl Iterator<Item = Exponent> {
    let mut cur = vec![0u32; dim];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = Exponent::new(cur.clone());
        // increment the last coordinate first
        let mut k = dim;
        loop {
            if k == 0 {
                done = true;
                break;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] <= bound {
                break;
            }
            cur[k] = 0;
        }
        Some(out)
    })
}

fn greedy_to_basis(
    dim: usize,
    field: Field,
    g: GreedyBasis<FieldElement>,
) -> Result<ReducedGB, AlgebraError> {
    let delta = StandardSet::new(dim, g.staircase)?;
    let mut entries = BTreeMap::new();
    for (alpha, rel) in g.relations {
        let mut f = LexPolynomial::monomial(alpha.clone(), field);
        for (beta, c) in rel {
            f.add_term(beta, -&c);
        }
        entries.insert(alpha, f);
    }
    ReducedGB::new(delta, field, entries)
}

/// A finite set of distinct points in `k^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    field: Field,
    points: Vec<Vec<FieldElement>>,
}

impl PointSet {
    pub fn new(
        dim: usize,
        field: Field,
        points: Vec<Vec<FieldElement>>,
    ) -> Result<Self, PointSetError> {
        let mut seen = HashSet::new();
        for p in &points {
            if p.len() != dim {
                return Err(PointSetError::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if let Some(x) = p.iter().find(|x| x.field() != field) {
                return Err(PointSetError::FieldMismatch(field, x.field()));
            }
            if !seen.insert(p.clone()) {
                return Err(PointSetError::DuplicatePoints(format_point(p)));
            }
        }
        Ok(PointSet { dim, field, points })
    }

    /// Integer coordinates mapped into `field`.
    pub fn from_integers(
        dim: usize,
        field: Field,
        points: &[Vec<i64>],
    ) -> Result<Self, PointSetError> {
        Self::new(
            dim,
            field,
            points
                .iter()
                .map(|p| p.iter().map(|&c| field.from_i64(c)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Lift into `k^{n+1}` by appending the coordinate `lambda`.
    pub fn lift(&self, lambda: &FieldElement) -> PointSet {
        PointSet {
            dim: self.dim + 1,
            field: self.field,
            points: self
                .points
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q.push(lambda.clone());
                    q
                })
                .collect(),
        }
    }
}

fn format_point(p: &[FieldElement]) -> String {
    let coords: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", coords.join(","))
}

#[derive(Serialize, Deserialize)]
struct RawPointSet {
    dim: usize,
    field: Field,
    points: Vec<Vec<RawScalar>>,
}

/// `{"dim": n, "field": …, "points": [[…], …]}`.
impl Serialize for PointSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawPointSet {
            dim: self.dim,
            field: self.field,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(RawScalar::from).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawPointSet::deserialize(deserializer)?;
        let points = raw
            .points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|c| c.resolve(raw.field))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        PointSet::new(raw.dim, raw.field, points).map_err(D::Error::custom)
    }
}

/// Monomial evaluation `x^α(p)`.
fn eval_monomial<S: Scalar>(p: &[S], alpha: &Exponent) -> S {
    let mut acc = p.first().map(|x| x.one_like());
    for (x, &k) in p.iter().zip(alpha.iter()) {
        for _ in 0..k {
            acc = acc.map(|a| a.mul(x));
        }
    }
    acc.expect("point in positive dimension")
}

/// Reduced lex Gröbner basis of the vanishing ideal `I(A)`.
pub fn vanishing_ideal_gb(a: &PointSet) -> Result<ReducedGB, PointSetError> {
    let one = a.field.one();
    let g = lex_greedy_basis(a.dim, a.len() as u32, &one, |alpha| {
        a.points
            .iter()
            .map(|p| {
                if a.dim == 0 {
                    one.clone()
                } else {
                    eval_monomial(p, alpha)
                }
            })
            .collect()
    });
    Ok(greedy_to_basis(a.dim, a.field, g)?)
}

/// `D(A)`, the standard set of `I(A)`.
pub fn standard_set_of(a: &PointSet) -> Result<StandardSet, PointSetError> {
    Ok(vanishing_ideal_gb(a)?.delta().clone())
}

/// `D(A)` for points over any [`Scalar`]; `points` must be distinct and
/// nonempty.
pub fn standard_set_of_points<S: Scalar>(dim: usize, points: &[Vec<S>]) -> StandardSet {
    let one = points[0].first().expect("positive dimension").one_like();
    let g = lex_greedy_basis(dim, points.len() as u32, &one, |alpha| {
        points.iter().map(|p| eval_monomial(p, alpha)).collect()
    });
    StandardSet::new(dim, g.staircase).expect("greedy staircases are standard sets")
}

/// Points grouped by last coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicedPointSet {
    pub slices: BTreeMap<FieldElement, PointSet>,
}

impl SlicedPointSet {
    /// The union of the slices lifted back by their keys.
    pub fn reassemble(&self) -> Vec<Vec<FieldElement>> {
        self.slices
            .iter()
            .flat_map(|(lambda, s)| s.lift(lambda).points)
            .collect()
    }
}

impl Serialize for SlicedPointSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Slice<'a> {
            lambda: RawScalar,
            points: &'a PointSet,
        }
        let v: Vec<Slice<'_>> = self
            .slices
            .iter()
            .map(|(l, p)| Slice {
                lambda: l.into(),
                points: p,
            })
            .collect();
        v.serialize(serializer)
    }
}

/// `A_λ = A ∩ {x_n = λ}`, as point sets in `k^{n-1}`.
pub fn slice(a: &PointSet) -> Result<SlicedPointSet, PointSetError> {
    if a.dim == 0 {
        return Err(PointSetError::ZeroDimension);
    }
    let mut groups: BTreeMap<FieldElement, Vec<Vec<FieldElement>>> = BTreeMap::new();
    for p in &a.points {
        groups
            .entry(p[a.dim - 1].clone())
            .or_default()
            .push(p[..a.dim - 1].to_vec());
    }
    let slices = groups
        .into_iter()
        .map(|(l, pts)| {
            let ps = PointSet {
                dim: a.dim - 1,
                field: a.field,
                points: pts,
            };
            (l, ps)
        })
        .collect();
    Ok(SlicedPointSet { slices })
}

/// Reduced lex Gröbner basis of `∩_i (⟨J_i⟩ + ⟨x_n - λ_i⟩)`, from the
/// normal-form coordinates of `x̄^ᾱ λ_i^{α_n}` in each summand quotient.
pub fn intersect_ideals_gb(
    summands: &[(&ReducedGB, FieldElement)],
) -> Result<ReducedGB, PointSetError> {
    let (first, _) = summands.first().ok_or(PointSetError::ZeroDimension)?;
    let field = first.field();
    let sub_dim = first.dim();
    let mut seen = HashSet::new();
    for (g, lambda) in summands {
        if g.field() != field || lambda.field() != field {
            return Err(PointSetError::FieldMismatch(field, g.field()));
        }
        if g.dim() != sub_dim {
            return Err(PointSetError::DimensionMismatch {
                expected: sub_dim,
                found: g.dim(),
            });
        }
        if !seen.insert(lambda.clone()) {
            return Err(PointSetError::DuplicateEvaluationPoints(lambda.to_string()));
        }
    }
    let rank: usize = summands.iter().map(|(g, _)| g.delta().len()).sum();
    let one = field.one();
    let mut cache: HashMap<(usize, Exponent), Vec<FieldElement>> = HashMap::new();
    let mut failure = None;
    let g = lex_greedy_basis(sub_dim + 1, rank as u32, &one, |alpha| {
        let head = alpha.head();
        let mut out = Vec::with_capacity(rank);
        for (i, (g, lambda)) in summands.iter().enumerate() {
            let coords = cache.entry((i, head.clone())).or_insert_with(|| {
                let nf = g
                    .normal_form(&LexPolynomial::monomial(head.clone(), field))
                    .unwrap_or_else(|e| {
                        failure = Some(e);
                        LexPolynomial::zero(sub_dim, field)
                    });
                g.delta()
                    .elements()
                    .iter()
                    .map(|b| nf.coefficient(b))
                    .collect()
            });
            let w = lambda.pow(alpha.last());
            out.extend(coords.iter().map(|c| c * &w));
        }
        out
    });
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok(greedy_to_basis(sub_dim + 1, field, g)?)
}

/// A point carrying the multiplicity structure of a staircase: the ideal
/// `{f : f(x + p) ∈ ⟨x^c : c ∈ C(shape)⟩}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPoint {
    pub point: Vec<FieldElement>,
    pub shape: StandardSet,
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for t in 0..k as u64 {
        acc = acc * (n as u64 - t) / (t + 1);
    }
    acc
}

/// Reduced lex Gröbner basis of the intersection of fat points at distinct
/// locations. Reduced points are fat points of shape `{0}`.
pub fn fat_points_ideal_gb(
    dim: usize,
    field: Field,
    fat: &[FatPoint],
) -> Result<ReducedGB, PointSetError> {
    let mut seen = HashSet::new();
    for fp in fat {
        if fp.point.len() != dim || fp.shape.dim() != dim {
            return Err(PointSetError::DimensionMismatch {
                expected: dim,
                found: fp.point.len(),
            });
        }
        if !seen.insert(fp.point.clone()) {
            return Err(PointSetError::DuplicatePoints(format_point(&fp.point)));
        }
    }
    let rank: usize = fat.iter().map(|f| f.shape.len()).sum();
    let one = field.one();
    let g = lex_greedy_basis(dim, rank as u32, &one, |alpha| {
        let mut out = Vec::with_capacity(rank);
        for fp in fat {
            for gamma in fp.shape.elements() {
                // coefficient of x^γ in (x + p)^α
                let mut c = field.one();
                for j in 0..dim {
                    if alpha[j] < gamma[j] {
                        c = field.zero();
                        break;
                    }
                    let b = field.from_u64(binomial(alpha[j], gamma[j]));
                    c = &(&c * &b) * &fp.point[j].pow(alpha[j] - gamma[j]);
                }
                out.push(c);
            }
        }
        out
    });
    Ok(greedy_to_basis(dim, field, g)?)
}

/// `F_{p^2} = F_p[ω]/(ω^2 - r)` with `r` a non-residue; `p` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp2 {
    a: u64,
    b: u64,
    p: u64,
    r: u64,
}

impl Fp2 {
    /// `a + bω` over `F_p`.
    pub fn new(a: u64, b: u64, p: u64) -> Fp2 {
        use crate::field::pow_mod;
        let r = (2..p)
            .find(|&r| pow_mod(r, (p - 1) / 2, p) == p - 1)
            .expect("odd prime has a non-residue");
        Fp2 {
            a: a % p,
            b: b % p,
            p,
            r,
        }
    }

    /// `x ↦ x^p`, which sends `a + bω` to `a - bω`.
    pub fn frobenius(&self) -> Fp2 {
        Fp2 {
            b: (self.p - self.b) % self.p,
            ..*self
        }
    }

    pub fn parts(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    fn pow(&self, mut e: u64) -> Fp2 {
        let mut acc = self.one_like();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = Scalar::mul(&acc, &base);
            }
            base = Scalar::mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Scalar for Fp2 {
    fn zero_like(&self) -> Self {
        Fp2 {
            a: 0,
            b: 0,
            ..*self
        }
    }
    fn one_like(&self) -> Self {
        Fp2 {
            a: 1,
            b: 0,
            ..*self
        }
    }
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
    fn add(&self, o: &Self) -> Self {
        use crate::field::add_mod;
        Fp2 {
            a: add_mod(self.a, o.a, self.p),
            b: add_mod(self.b, o.b, self.p),
            ..*self
        }
    }
    fn sub(&self, o: &Self) -> Self {
        use crate::field::add_mod;
        Fp2 {
            a: add_mod(self.a, self.p - o.a, self.p),
            b: add_mod(self.b, self.p - o.b, self.p),
            ..*self
        }
    }
    fn mul(&self, o: &Self) -> Self {
        use crate::field::{add_mod, mul_mod};
        let p = self.p;
        let a = add_mod(
            mul_mod(self.a, o.a, p),
            mul_mod(self.r, mul_mod(self.b, o.b, p), p),
            p,
        );
        let b = add_mod(mul_mod(self.a, o.b, p), mul_mod(self.b, o.a, p), p);
        Fp2 { a, b, ..*self }
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        // x^(p^2 - 2)
        Some(self.pow(self.p * self.p - 2))
    }
    fn u64_like(&self, v: u64) -> Self {
        Fp2 {
            a: v % self.p,
            b: 0,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::StandardSet;

    fn set(dim: usize, elems: &[&[u32]]) -> StandardSet {
        StandardSet::new(dim, elems.iter().map(|e| Exponent::new(e.to_vec()))).unwrap()
    }

    #[test]
    fn two_points_on_a_line() {
        let a = PointSet::from_integers(1, Field::Rational, &[vec![0], vec![1]]).unwrap();
        let g = vanishing_ideal_gb(&a).unwrap();
        assert_eq!(g.delta(), &StandardSet::line(1, 0, 2));
        assert_eq!(g.entries()[&Exponent::from([2])].to_string(), "x1^2 - x1");
    }

    #[test]
    fn tetrahedron_points() {
        let a = PointSet::from_integers(
            3,
            Field::Rational,
            &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        )
        .unwrap();
        let g = vanishing_ideal_gb(&a).unwrap();
        assert_eq!(
            g.delta(),
            &set(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        for f in g.entries().values() {
            for p in a.points() {
                assert!(f.evaluate(p).unwrap().is_zero());
            }
        }
        let s = slice(&a).unwrap();
        assert_eq!(s.slices.len(), 2);
        assert_eq!(s.slices[&Field::Rational.zero()].len(), 3);
        assert_eq!(
            s.slices[&Field::Rational.one()].points(),
            &[Vec::<FieldElement>::new()
                .into_iter()
                .chain([Field::Rational.zero(), Field::Rational.zero()])
                .collect::<Vec<_>>()][..]
        );
    }

    #[test]
    fn single_point_and_vertical_line() {
        let a = PointSet::from_integers(2, Field::Rational, &[vec![3, -1]]).unwrap();
        assert_eq!(standard_set_of(&a).unwrap(), StandardSet::point(2));
        let b = PointSet::from_integers(2, Field::Rational, &[vec![7, 0], vec![7, 1], vec![7, 5]])
            .unwrap();
        assert_eq!(standard_set_of(&b).unwrap(), StandardSet::line(2, 1, 3));
        let s = slice(&b).unwrap();
        assert_eq!(s.slices.len(), 3);
        let c = PointSet::from_integers(2, Field::Rational, &[vec![1, 4], vec![2, 4]]).unwrap();
        assert_eq!(slice(&c).unwrap().slices.len(), 1);
    }

    #[test]
    fn duplicates_are_rejected() {
        let err =
            PointSet::from_integers(2, Field::Rational, &[vec![1, 2], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, PointSetError::DuplicatePoints(_)));
    }

    #[test]
    fn two_summand_intersection() {
        // J_1 = ⟨x1^2 - 1, x2 - 2⟩ (Δ_1 = {0, e1}), J_2 = ⟨x1 - 3, x2^2⟩ (Δ_2 = {0, e2})
        let q = Field::Rational;
        let d1 = set(2, &[&[0, 0], &[1, 0]]);
        let d2 = set(2, &[&[0, 0], &[0, 1]]);
        let mut e1 = BTreeMap::new();
        e1.insert(
            Exponent::from([2, 0]),
            LexPolynomial::from_terms(
                2,
                q,
                vec![
                    (Exponent::from([2, 0]), q.one()),
                    (Exponent::from([0, 0]), q.from_i64(-1)),
                ],
            )
            .unwrap(),
        );
        e1.insert(
            Exponent::from([0, 1]),
            LexPolynomial::from_terms(
                2,
                q,
                vec![
                    (Exponent::from([0, 1]), q.one()),
                    (Exponent::from([0, 0]), q.from_i64(-2)),
                ],
            )
            .unwrap(),
        );
        let mut e2 = BTreeMap::new();
        e2.insert(
            Exponent::from([1, 0]),
            LexPolynomial::from_terms(
                2,
                q,
                vec![
                    (Exponent::from([1, 0]), q.one()),
                    (Exponent::from([0, 0]), q.from_i64(-3)),
                ],
            )
            .unwrap(),
        );
        e2.insert(
            Exponent::from([0, 2]),
            LexPolynomial::monomial(Exponent::from([0, 2]), q),
        );
        let g1 = ReducedGB::new(d1, q, e1).unwrap();
        let g2 = ReducedGB::new(d2, q, e2).unwrap();
        let g = intersect_ideals_gb(&[(&g1, q.zero()), (&g2, q.one())]).unwrap();
        assert_eq!(
            g.delta(),
            &set(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        assert!(intersect_ideals_gb(&[(&g1, q.zero()), (&g2, q.zero())]).is_err());
    }

    #[test]
    fn fat_point_has_its_shape() {
        let q = Field::Rational;
        let shape = set(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let fp = FatPoint {
            point: vec![q.from_i64(2), q.from_i64(-1)],
            shape: shape.clone(),
        };
        let g = fat_points_ideal_gb(2, q, std::slice::from_ref(&fp)).unwrap();
        assert_eq!(g.delta(), &shape);
        // (x1 - 2)^2 is in the ideal
        let f = LexPolynomial::from_terms(
            2,
            q,
            vec![
                (Exponent::from([2, 0]), q.one()),
                (Exponent::from([1, 0]), q.from_i64(-4)),
                (Exponent::from([0, 0]), q.from_i64(4)),
            ],
        )
        .unwrap();
        assert!(g.contains(&f).unwrap());
        // x1 - 2 is not
        let h = LexPolynomial::from_terms(
            2,
            q,
            vec![
                (Exponent::from([1, 0]), q.one()),
                (Exponent::from([0, 0]), q.from_i64(-2)),
            ],
        )
        .unwrap();
        assert!(!g.contains(&h).unwrap());
    }

    #[test]
    fn reduced_points_as_fat_points_agree() {
        let q = Field::Rational;
        let pts = vec![vec![0, 1], vec![2, 1], vec![2, 3], vec![-1, 0]];
        let a = PointSet::from_integers(2, q, &pts).unwrap();
        let fat: Vec<FatPoint> = a
            .points()
            .iter()
            .map(|p| FatPoint {
                point: p.clone(),
                shape: StandardSet::point(2),
            })
            .collect();
        assert_eq!(
            vanishing_ideal_gb(&a).unwrap(),
            fat_points_ideal_gb(2, q, &fat).unwrap()
        );
    }

    #[test]
    fn empty_point_set_is_the_unit_ideal() {
        let a = PointSet::new(2, Field::Rational, Vec::new()).unwrap();
        let g = vanishing_ideal_gb(&a).unwrap();
        assert!(g.delta().is_empty());
        assert_eq!(g.entries()[&Exponent::zero(2)].to_string(), "1");
    }

    #[test]
    fn fp2_arithmetic() {
        let x = Fp2::new(3, 5, 7);
        let y = x.inv().unwrap();
        assert_eq!(Scalar::mul(&x, &y), x.one_like());
        // Frobenius is a ring homomorphism and x^p
        assert_eq!(x.pow(7), x.frobenius());
        let z = Fp2::new(2, 6, 7);
        assert_eq!(
            Scalar::mul(&x, &z).frobenius(),
            Scalar::mul(&x.frobenius(), &z.frobenius())
        );
    }

    #[test]
    fn json_round_trip() {
        let a = PointSet::from_integers(2, Field::Prime(101), &[vec![1, 2], vec![-1, 5]]).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"{"dim":2,"field":{"Fp":101},"points":[[1,2],[100,5]]}"#
        );
        let back: PointSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
