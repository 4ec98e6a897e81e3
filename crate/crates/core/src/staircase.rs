//! Finite standard sets (staircases) in `N^n`.
//!
//! A standard set is a finite subset of `N^n` whose complement is closed
//! under addition of lattice vectors, i.e. it is closed under taking
//! predecessors `β ↦ β - e_i`. Elements are kept sorted in lexicographic
//! order with the first coordinate most significant, which is the term
//! order used everywhere in this crate.
//!
//! Besides the sorted element list every set carries its column-height map
//! `q^n(β) ↦ #{γ ∈ Δ : q^n(γ) = q^n(β)}`; Connect Four addition and
//! decompositions operate column by column.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StaircaseError {
    /// `index` is 1-based, matching the variable numbering `x_1, …, x_n`.
    #[error("{element} is in the set but {element} - e_{index} is not")]
    ClosureViolation { element: Exponent, index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("projection index {j} out of range 1..={dim}")]
    ProjectionOutOfRange { j: usize, dim: usize },
}

/// An exponent vector `β ∈ N^n`.
///
/// The derived ordering is lexicographic with `x_1` most significant, which
/// is the monomial order `x_1 ≻ x_2 ≻ … ≻ x_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Exponent(vec![0; dim])
    }

    /// The unit vector `e_i`, with `i` zero-based.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.0[i] = 1;
        e
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// `self - e_i`, or `None` when coordinate `i` is zero.
    pub fn predecessor(&self, i: usize) -> Option<Exponent> {
        if self.0[i] == 0 {
            return None;
        }
        let mut p = self.clone();
        p.0[i] -= 1;
        Some(p)
    }

    pub fn successor(&self, i: usize) -> Exponent {
        let mut s = self.clone();
        s.0[i] += 1;
        s
    }

    /// Componentwise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`; caller guarantees `other.divides(self)`.
    pub fn sub(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `q^n`: drop the last coordinate.
    pub fn head(&self) -> Exponent {
        Exponent(self.0[..self.0.len() - 1].to_vec())
    }

    /// `q_n`: the last coordinate.
    pub fn last(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    /// Append a last coordinate.
    pub fn extend(&self, last: u32) -> Exponent {
        let mut v = self.0.clone();
        v.push(last);
        Exponent(v)
    }

    /// `q_j` with 1-based `j`: keep coordinates `j..=n`.
    pub fn tail_from(&self, j: usize) -> Exponent {
        Exponent(self.0[j - 1..].to_vec())
    }

    pub fn max_coord(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The comma-joined form used as a JSON object key.
    pub fn key(&self) -> String {
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_key(key: &str) -> Option<Exponent> {
        if key.is_empty() {
            return Some(Exponent(Vec::new()));
        }
        key.split(',')
            .map(|s| s.trim().parse::<u32>().ok())
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }
}

impl Deref for Exponent {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}

/// Monomial notation: `0`, `e1`, `2e1+e3`.
impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c == 1 {
                write!(f, "e{}", i + 1)?;
            } else {
                write!(f, "{}e{}", c, i + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A finite standard set `Δ ⊂ N^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawStandardSet", into = "RawStandardSet")]
pub struct StandardSet {
    dim: usize,
    elements: Vec<Exponent>,
    columns: BTreeMap<Exponent, u32>,
}

#[derive(Serialize, Deserialize)]
struct RawStandardSet {
    dim: usize,
    elements: Vec<Vec<u32>>,
}

impl TryFrom<RawStandardSet> for StandardSet {
    type Error = StaircaseError;

    fn try_from(raw: RawStandardSet) -> Result<Self, Self::Error> {
        StandardSet::new(raw.dim, raw.elements.into_iter().map(Exponent))
    }
}

impl From<StandardSet> for RawStandardSet {
    fn from(s: StandardSet) -> Self {
        RawStandardSet {
            dim: s.dim,
            elements: s.elements.into_iter().map(Exponent::into_inner).collect(),
        }
    }
}

impl StandardSet {
    /// Validate a candidate set: every element must have length `dim` and
    /// every predecessor of an element must be present. Duplicates are
    /// merged.
    pub fn new(
        dim: usize,
        elements: impl IntoIterator<Item = Exponent>,
    ) -> Result<Self, StaircaseError> {
        let set: BTreeSet<Exponent> = elements.into_iter().collect();
        for e in &set {
            if e.dim() != dim {
                return Err(StaircaseError::DimensionMismatch {
                    expected: dim,
                    found: e.dim(),
                });
            }
        }
        for e in &set {
            for i in 0..dim {
                if let Some(p) = e.predecessor(i) {
                    if !set.contains(&p) {
                        return Err(StaircaseError::ClosureViolation {
                            element: e.clone(),
                            index: i + 1,
                        });
                    }
                }
            }
        }
        Ok(Self::from_sorted_unchecked(dim, set.into_iter().collect()))
    }

    fn from_sorted_unchecked(dim: usize, elements: Vec<Exponent>) -> Self {
        let mut columns = BTreeMap::new();
        if dim > 0 {
            for e in &elements {
                *columns.entry(e.head()).or_insert(0) += 1;
            }
        }
        StandardSet {
            dim,
            elements,
            columns,
        }
    }

    /// Build a set from its column heights. The caller guarantees that the
    /// map describes a standard set (heights weakly decrease along every
    /// predecessor step and the columns form a standard set in `N^{n-1}`).
    pub(crate) fn from_columns_unchecked(dim: usize, columns: &BTreeMap<Exponent, u32>) -> Self {
        let mut elements: Vec<Exponent> = columns
            .iter()
            .flat_map(|(head, &h)| (0..h).map(move |k| head.extend(k)))
            .collect();
        elements.sort();
        Self::from_sorted_unchecked(dim, elements)
    }

    pub fn empty(dim: usize) -> Self {
        Self::from_sorted_unchecked(dim, Vec::new())
    }

    /// The one-point set `{0}`.
    pub fn point(dim: usize) -> Self {
        Self::from_sorted_unchecked(dim, vec![Exponent::zero(dim)])
    }

    /// The set `{k·e_axis : k < r}` (zero-based `axis`).
    pub fn line(dim: usize, axis: usize, r: u32) -> Self {
        let mut elements: Vec<Exponent> = (0..r)
            .map(|k| {
                let mut e = Exponent::zero(dim);
                e.0[axis] = k;
                e
            })
            .collect();
        elements.sort();
        Self::from_sorted_unchecked(dim, elements)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Exponent] {
        &self.elements
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        e.dim() == self.dim && self.elements.binary_search(e).is_ok()
    }

    /// Column-height map `q^n(Δ) → N`. Empty for `dim == 0`.
    pub fn columns(&self) -> &BTreeMap<Exponent, u32> {
        &self.columns
    }

    /// Height of the column over `head ∈ N^{n-1}`; zero off `q^n(Δ)`.
    pub fn column_height(&self, head: &Exponent) -> u32 {
        self.columns.get(head).copied().unwrap_or(0)
    }

    /// `#q_n(Δ)`, the number of slices. Equals the height of the column
    /// over the origin.
    pub fn height(&self) -> u32 {
        if self.dim == 0 {
            return 0;
        }
        self.column_height(&Exponent::zero(self.dim - 1))
    }

    pub fn max_coord(&self) -> u32 {
        self.elements
            .iter()
            .map(Exponent::max_coord)
            .max()
            .unwrap_or(0)
    }

    /// The minimal generators of `N^n \ Δ`, sorted lexicographically.
    ///
    /// For nonempty `Δ` every corner has a predecessor in `Δ`, so corners
    /// are the border elements whose predecessors all lie in `Δ`.
    pub fn corners(&self) -> Vec<Exponent> {
        if self.is_empty() {
            return vec![Exponent::zero(self.dim)];
        }
        self.border()
            .into_iter()
            .filter(|c| (0..self.dim).all(|i| c.predecessor(i).is_none_or(|p| self.contains(&p))))
            .collect()
    }

    /// `(∪_i (Δ + e_i)) \ Δ`, sorted lexicographically.
    pub fn border(&self) -> Vec<Exponent> {
        let mut out = BTreeSet::new();
        for e in &self.elements {
            for i in 0..self.dim {
                let s = e.successor(i);
                if !self.contains(&s) {
                    out.insert(s);
                }
            }
        }
        out.into_iter().collect()
    }

    /// `q_j(Δ)` for 1-based `j`; the result lives in `N^{n-j+1}`.
    pub fn project(&self, j: usize) -> Result<StandardSet, StaircaseError> {
        if j == 0 || j > self.dim {
            return Err(StaircaseError::ProjectionOutOfRange { j, dim: self.dim });
        }
        let image: BTreeSet<Exponent> = self.elements.iter().map(|e| e.tail_from(j)).collect();
        Ok(Self::from_sorted_unchecked(
            self.dim - j + 1,
            image.into_iter().collect(),
        ))
    }

    /// `Δ × {0} ⊂ N^{n+1}`.
    pub fn embed(&self) -> StandardSet {
        Self::from_sorted_unchecked(
            self.dim + 1,
            self.elements.iter().map(|e| e.extend(0)).collect(),
        )
    }

    /// Connect Four sum: column heights add.
    pub fn connect_four_add(&self, other: &StandardSet) -> Result<StandardSet, StaircaseError> {
        if self.dim != other.dim {
            return Err(StaircaseError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.dim == 0 {
            // N^0 is a single point; the only nonempty set is all of it.
            return Ok(if self.is_empty() {
                other.clone()
            } else {
                self.clone()
            });
        }
        let mut columns = self.columns.clone();
        for (head, &h) in &other.columns {
            *columns.entry(head.clone()).or_insert(0) += h;
        }
        Ok(Self::from_columns_unchecked(self.dim, &columns))
    }

    /// Connect Four sum of the embeddings `Δ_i × {0}` of sets in
    /// `N^{dim-1}`, i.e. the column heights of the result count how many
    /// parts contain each column.
    pub fn sum_of_embedded<'a>(
        dim: usize,
        parts: impl IntoIterator<Item = &'a StandardSet>,
    ) -> Result<StandardSet, StaircaseError> {
        let mut columns: BTreeMap<Exponent, u32> = BTreeMap::new();
        for p in parts {
            if p.dim + 1 != dim {
                return Err(StaircaseError::DimensionMismatch {
                    expected: dim - 1,
                    found: p.dim,
                });
            }
            for e in &p.elements {
                *columns.entry(e.clone()).or_insert(0) += 1;
            }
        }
        Ok(Self::from_columns_unchecked(dim, &columns))
    }

    /// The horizontal slices `q^n(Δ ∩ {β_n = i})` for `i = 0..height`.
    pub fn slices(&self) -> Vec<StandardSet> {
        (0..self.height())
            .map(|i| {
                let elems = self
                    .columns
                    .iter()
                    .filter(|(_, &h)| h > i)
                    .map(|(head, _)| head.clone())
                    .collect();
                Self::from_sorted_unchecked(self.dim - 1, elems)
            })
            .collect()
    }

    /// All standard sets of size `size` in `N^dim`, in canonical order.
    pub fn enumerate(dim: usize, size: usize) -> Vec<StandardSet> {
        let mut level: BTreeSet<StandardSet> = BTreeSet::new();
        level.insert(StandardSet::empty(dim));
        for _ in 0..size {
            let mut next = BTreeSet::new();
            for s in &level {
                for c in s.corners() {
                    // dimension 0 has a single point; the loop then stops
                    if s.contains(&c) {
                        continue;
                    }
                    let mut elems = s.elements.clone();
                    let pos = elems.binary_search(&c).unwrap_err();
                    elems.insert(pos, c);
                    next.insert(Self::from_sorted_unchecked(dim, elems));
                }
            }
            level = next;
        }
        level.into_iter().collect()
    }
}

/// Canonical order: by dimension, then size, then element list.
impl Ord for StandardSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dim, self.elements.len(), &self.elements).cmp(&(
            other.dim,
            other.elements.len(),
            &other.elements,
        ))
    }
}

impl PartialOrd for StandardSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StandardSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elements.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(dim: usize, elems: &[&[u32]]) -> StandardSet {
        StandardSet::new(dim, elems.iter().map(|e| Exponent::new(e.to_vec()))).unwrap()
    }

    fn exps(elems: &[&[u32]]) -> Vec<Exponent> {
        let mut v: Vec<Exponent> = elems.iter().map(|e| Exponent::new(e.to_vec())).collect();
        v.sort();
        v
    }

    /// Minimal generators of the complement by exhaustive search in a box.
    fn brute_corners(s: &StandardSet) -> Vec<Exponent> {
        let bound = s.max_coord() + 1;
        let dim = s.dim();
        let mut outside = Vec::new();
        let mut cur = vec![0u32; dim];
        loop {
            let e = Exponent::new(cur.clone());
            if !s.contains(&e) {
                outside.push(e);
            }
            let mut k = 0;
            while k < dim {
                cur[k] += 1;
                if cur[k] <= bound {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
            if k == dim {
                break;
            }
        }
        let mut minimal: Vec<Exponent> = outside
            .iter()
            .filter(|g| !outside.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        minimal.sort();
        minimal
    }

    #[test]
    fn validates_tetrahedron() {
        let s = set(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.height(), 2);
    }

    #[test]
    fn empty_is_valid() {
        let s = StandardSet::new(2, Vec::new()).unwrap();
        assert!(s.is_empty());
        assert_eq!(s.height(), 0);
    }

    #[test]
    fn missing_origin_is_a_closure_violation() {
        let err = StandardSet::new(2, vec![Exponent::from([1, 0])]).unwrap_err();
        assert_eq!(
            err,
            StaircaseError::ClosureViolation {
                element: Exponent::from([1, 0]),
                index: 1
            }
        );
    }

    #[test]
    fn wrong_length_is_rejected() {
        let err = StandardSet::new(3, vec![Exponent::from([0, 0])]).unwrap_err();
        assert!(matches!(
            err,
            StaircaseError::DimensionMismatch {
                expected: 3,
                found: 2
            }
        ));
    }

    #[test]
    fn tetrahedron_corners() {
        let s = set(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let expected = exps(&[
            &[2, 0, 0],
            &[1, 1, 0],
            &[0, 2, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[0, 0, 2],
        ]);
        assert_eq!(brute_corners(&s), expected);
        assert_eq!(s.corners(), expected);
        // every border element of this set is a corner
        assert_eq!(s.border(), expected);
    }

    #[test]
    fn trivial_corners() {
        assert_eq!(
            StandardSet::empty(2).corners(),
            vec![Exponent::from([0, 0])]
        );
        assert_eq!(
            StandardSet::line(1, 0, 5).corners(),
            vec![Exponent::from([5])]
        );
        assert!(StandardSet::empty(3).border().is_empty());
        assert_eq!(StandardSet::point(2).border(), exps(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn projections() {
        let d1 = set(
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[2, 0, 0],
                &[1, 1, 0],
            ],
        );
        assert_eq!(d1.project(2).unwrap(), set(2, &[&[0, 0], &[1, 0], &[0, 1]]));
        assert_eq!(d1.project(1).unwrap(), d1);
        assert_eq!(d1.project(3).unwrap().len(), 2);
        let d2 = set(
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[0, 2, 0],
            ],
        );
        assert_eq!(
            d2.project(2).unwrap(),
            set(2, &[&[0, 0], &[1, 0], &[0, 1], &[2, 0]])
        );
        assert!(d2.project(0).is_err());
        assert!(d2.project(4).is_err());
    }

    #[test]
    fn two_line_sums() {
        let a = set(2, &[&[0, 0], &[1, 0]]).embed();
        let b = set(2, &[&[0, 0], &[0, 1]]).embed();
        let expected = set(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.connect_four_add(&b).unwrap(), expected);
        let c = set(2, &[&[0, 0], &[1, 0], &[0, 1]]).embed();
        let d = StandardSet::point(2).embed();
        assert_eq!(c.connect_four_add(&d).unwrap(), expected);
        assert_eq!(
            expected.connect_four_add(&StandardSet::empty(3)).unwrap(),
            expected
        );
        assert!(a.connect_four_add(&StandardSet::point(2)).is_err());
    }

    #[test]
    fn embed_examples() {
        assert_eq!(
            set(2, &[&[0, 0], &[1, 0]]).embed(),
            set(3, &[&[0, 0, 0], &[1, 0, 0]])
        );
        assert_eq!(StandardSet::empty(2).embed(), StandardSet::empty(3));
        assert_eq!(StandardSet::point(1).embed(), StandardSet::point(2));
    }

    #[test]
    fn height_examples() {
        let s = set(
            4,
            &[
                &[0, 0, 0, 0],
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[0, 0, 0, 2],
            ],
        );
        assert_eq!(s.height(), 3);
        assert_eq!(StandardSet::empty(3).height(), 0);
    }

    #[test]
    fn enumeration_counts() {
        // partitions of r
        let counts: Vec<usize> = (0..8).map(|r| StandardSet::enumerate(2, r).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        // plane partitions of r
        let counts: Vec<usize> = (0..6).map(|r| StandardSet::enumerate(3, r).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 6, 13, 24]);
        assert_eq!(StandardSet::enumerate(1, 4).len(), 1);
    }

    #[test]
    fn dimension_zero() {
        let pt = StandardSet::point(0);
        assert_eq!(pt.len(), 1);
        assert!(pt.corners().is_empty());
        assert_eq!(StandardSet::empty(0).corners(), vec![Exponent::zero(0)]);
        assert_eq!(pt.embed(), StandardSet::point(1));
    }

    #[test]
    fn json_shape() {
        let s = set(2, &[&[0, 0], &[1, 0]]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"dim":2,"elements":[[0,0],[1,0]]}"#);
        let back: StandardSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<StandardSet>(r#"{"dim":2,"elements":[[1,0]]}"#).is_err());
    }

    #[test]
    fn display() {
        let s = set(
            3,
            &[&[0, 0, 0], &[0, 1, 0], &[1, 0, 0], &[2, 0, 0], &[1, 1, 0]],
        );
        assert_eq!(s.to_string(), "{0,e2,e1,e1+e2,2e1}");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        /// Random standard set grown by adding random corners.
        pub(crate) fn arb_set(dim: usize, max: usize) -> impl Strategy<Value = StandardSet> {
            proptest::collection::vec(any::<u32>(), 0..=max).prop_map(move |picks| {
                let mut s = StandardSet::empty(dim);
                for p in picks {
                    let c = s.corners();
                    let pick = c[p as usize % c.len()].clone();
                    let mut elems = s.elements().to_vec();
                    elems.push(pick);
                    s = StandardSet::new(dim, elems).unwrap();
                }
                s
            })
        }

        proptest! {
            #[test]
            fn corners_match_brute_force(s in (1usize..=4).prop_flat_map(|d| arb_set(d, 10))) {
                prop_assert_eq!(s.corners(), brute_corners(&s));
            }

            #[test]
            fn border_is_outside_and_adjacent(s in (1usize..=4).prop_flat_map(|d| arb_set(d, 10))) {
                for b in s.border() {
                    prop_assert!(!s.contains(&b));
                    prop_assert!((0..s.dim()).any(|i| b.predecessor(i).is_some_and(|p| s.contains(&p))));
                }
            }

            #[test]
            fn slicing_resums(s in (1usize..=4).prop_flat_map(|d| arb_set(d, 12))) {
                let slices = s.slices();
                prop_assert_eq!(slices.len() as u32, s.height());
                let total = StandardSet::sum_of_embedded(s.dim(), &slices).unwrap();
                prop_assert_eq!(total, s);
            }
        }
    }
}
