//! Invariants of the stratum of ideals with a given lex standard set whose
//! zeros all lie over the origin.
//!
//! Only formula-level quantities are reported: the relative dimension
//! `Σ_j #q_j(Δ)` and the component count `d(Δ)`.

use serde::Serialize;

use crate::decomposition::{decomposition_number, Decomposition};
use crate::staircase::StandardSet;

/// Attached to every report.
pub const CAVEAT: &str = "counts refer to the stratum of ideals supported at the origin; \
the full lex stratum may have strictly more irreducible components";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub delta: StandardSet,
    pub dimension: usize,
    pub irreducible_components: u128,
    pub connected_components: u128,
    pub caveat: &'static str,
}

/// `Σ_{j=1}^n #q_j(Δ)`.
pub fn dimension(delta: &StandardSet) -> usize {
    (1..=delta.dim())
        .map(|j| delta.project(j).expect("j in range").len())
        .sum()
}

pub fn report(delta: &StandardSet) -> StratumReport {
    let d = decomposition_number(delta);
    StratumReport {
        delta: delta.clone(),
        dimension: dimension(delta),
        irreducible_components: d,
        connected_components: d,
        caveat: CAVEAT,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRelation {
    Equal,
    Strict,
    Violated,
}

/// `Σ_j #q_j(Δ)` against `n · #Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionBound {
    pub dimension: usize,
    pub bound: usize,
    pub relation: BoundRelation,
}

impl DimensionBound {
    pub fn holds(&self) -> bool {
        self.relation != BoundRelation::Violated
    }
}

pub fn dimension_vs_nr(delta: &StandardSet) -> DimensionBound {
    let dimension = dimension(delta);
    let bound = delta.dim() * delta.len();
    let relation = match dimension.cmp(&bound) {
        std::cmp::Ordering::Equal => BoundRelation::Equal,
        std::cmp::Ordering::Less => BoundRelation::Strict,
        std::cmp::Ordering::Greater => BoundRelation::Violated,
    };
    DimensionBound {
        dimension,
        bound,
        relation,
    }
}

/// The dimension computed through a decomposition: the sum of the
/// `(n-1)`-dimensional strata of its parts plus `height(Δ)` for the
/// positions of the hyperplanes.
pub fn dimension_via_decomposition(delta: &StandardSet, dec: &Decomposition) -> usize {
    dec.parts().map(dimension).sum::<usize>() + delta.height() as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub delta: StandardSet,
    pub dimension: usize,
    pub d: u128,
    pub nr_bound: usize,
}

/// One row per standard set of the given size in `N^dim`.
pub fn table(dim: usize, size: usize) -> Vec<TableRow> {
    StandardSet::enumerate(dim, size)
        .into_iter()
        .map(|delta| {
            let r = report(&delta);
            TableRow {
                dimension: r.dimension,
                d: r.irreducible_components,
                nr_bound: dim * size,
                delta,
            }
        })
        .collect()
}
