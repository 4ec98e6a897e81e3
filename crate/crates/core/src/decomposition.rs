//! Connect Four decompositions and the decomposition number `d(Δ)`.
//!
//! A decomposition of `Δ ⊂ N^n` is a multiset of standard sets in
//! `N^{n-1}` whose embedded Connect Four sum is `Δ`. Equivalently, it is a
//! multiset of `height(Δ)` nonempty standard subsets of `q^n(Δ)` in which
//! every column `β` occurs exactly `v_Δ(β)` times, `v_Δ` being the column
//! height vector.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::staircase::{Exponent, StandardSet};

/// A decomposition in canonical form: distinct parts in canonical
/// [`StandardSet`] order, each with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Decomposition {
    parts: Vec<(StandardSet, usize)>,
}

impl Decomposition {
    /// Canonicalize a list of parts (with repetitions).
    pub fn from_parts(parts: impl IntoIterator<Item = StandardSet>) -> Self {
        let mut counts: BTreeMap<StandardSet, usize> = BTreeMap::new();
        for p in parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        Decomposition {
            parts: counts.into_iter().collect(),
        }
    }

    /// Distinct parts with multiplicities `h_j`.
    pub fn groups(&self) -> &[(StandardSet, usize)] {
        &self.parts
    }

    /// All parts, repeated according to multiplicity.
    pub fn parts(&self) -> impl Iterator<Item = &StandardSet> + '_ {
        self.parts
            .iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p, *m))
    }

    pub fn num_parts(&self) -> usize {
        self.parts.iter().map(|(_, m)| m).sum()
    }

    /// The embedded Connect Four sum of the parts, in `N^{parent_dim}`.
    pub fn sum(&self, parent_dim: usize) -> StandardSet {
        StandardSet::sum_of_embedded(parent_dim, self.parts())
            .expect("parts of a decomposition share one dimension")
    }
}

impl std::fmt::Display for Decomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.parts().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "}}")
    }
}

/// `v_Δ`: column heights over `q^n(Δ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightVector(pub BTreeMap<Exponent, u32>);

pub fn height_vector(delta: &StandardSet) -> HeightVector {
    HeightVector(delta.columns().clone())
}

/// All decompositions of `Δ`, canonical and sorted.
///
/// Columns of `q^n(Δ)` are visited in decreasing height (ties in lex
/// order), so every predecessor of a column is placed before it. A column
/// may only join a part that already holds all its predecessors, which
/// keeps every part a standard set. Parts that are equal so far are
/// interchangeable, so the branching picks how many members of each class
/// of equal parts receive the column; this produces each multiset once.
pub fn enumerate_decompositions(delta: &StandardSet) -> Vec<Decomposition> {
    if delta.dim() == 0 {
        return Vec::new();
    }
    let h = delta.height() as usize;
    if h == 0 {
        return vec![Decomposition::from_parts(Vec::new())];
    }
    let mut columns: Vec<(&Exponent, u32)> = delta.columns().iter().map(|(c, &v)| (c, v)).collect();
    columns.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));

    let parts: Vec<Vec<Exponent>> = vec![Vec::new(); h];
    let mut out = Vec::new();
    place_column(&columns, 0, parts, delta.dim() - 1, &mut out);
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    out
}

fn place_column(
    columns: &[(&Exponent, u32)],
    k: usize,
    mut parts: Vec<Vec<Exponent>>,
    part_dim: usize,
    out: &mut Vec<Decomposition>,
) {
    if k == columns.len() {
        let sets = parts.into_iter().map(|mut elems| {
            elems.sort();
            StandardSet::new(part_dim, elems).expect("parts are closed by construction")
        });
        out.push(Decomposition::from_parts(sets));
        return;
    }
    let (col, need) = columns[k];
    let need = need as usize;
    parts.sort();
    // classes of equal eligible parts: (start index, size)
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i + 1;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let eligible = (0..part_dim).all(|t| match col.predecessor(t) {
            Some(p) => parts[i].contains(&p),
            None => true,
        });
        if eligible {
            classes.push((i, j - i));
        }
        i = j;
    }
    if classes.iter().map(|c| c.1).sum::<usize>() < need {
        return;
    }
    let mut counts = vec![0usize; classes.len()];
    choose_counts(&classes, 0, need, &mut counts, &mut |counts| {
        let mut next = parts.clone();
        for (&(start, _), &m) in classes.iter().zip(counts) {
            for slot in next.iter_mut().skip(start).take(m) {
                slot.push(col.clone());
            }
        }
        place_column(columns, k + 1, next, part_dim, out);
    });
}

fn choose_counts(
    classes: &[(usize, usize)],
    idx: usize,
    remaining: usize,
    counts: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if idx == classes.len() {
        if remaining == 0 {
            emit(counts);
        }
        return;
    }
    let rest: usize = classes[idx + 1..].iter().map(|c| c.1).sum();
    let lo = remaining.saturating_sub(rest);
    let hi = remaining.min(classes[idx].1);
    for m in lo..=hi {
        counts[idx] = m;
        choose_counts(classes, idx + 1, remaining - m, counts, emit);
    }
    counts[idx] = 0;
}

/// `C(d + h - 1, h)`: multisets of size `h` drawn from `d` kinds.
pub fn multiset_count(d: u128, h: usize) -> u128 {
    let mut acc: u128 = 1;
    for t in 1..=h as u128 {
        acc = acc
            .checked_mul(d + t - 1)
            .expect("decomposition number overflows u128")
            / t;
    }
    acc
}

/// Memoized decomposition numbers.
#[derive(Debug, Default)]
pub struct DecompositionCounter {
    memo: HashMap<StandardSet, u128>,
}

impl DecompositionCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `d(Δ)`: 1 for `n ≤ 2`; otherwise the sum over decompositions of the
    /// product over distinct parts of `C(d(part) + h_j - 1, h_j)`.
    pub fn count(&mut self, delta: &StandardSet) -> u128 {
        if delta.dim() <= 2 {
            return 1;
        }
        if let Some(&d) = self.memo.get(delta) {
            return d;
        }
        let mut total: u128 = 0;
        for dec in enumerate_decompositions(delta) {
            let mut prod: u128 = 1;
            for (part, h) in dec.groups() {
                let d = self.count(part);
                prod = prod
                    .checked_mul(multiset_count(d, *h))
                    .expect("decomposition number overflows u128");
            }
            total = total
                .checked_add(prod)
                .expect("decomposition number overflows u128");
        }
        self.memo.insert(delta.clone(), total);
        total
    }
}

pub fn decomposition_number(delta: &StandardSet) -> u128 {
    DecompositionCounter::new().count(delta)
}
