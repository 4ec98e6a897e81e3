//! Connect Four addition of lex standard sets, decompositions, and lex
//! Gröbner bases of ideals supported on parallel hyperplanes.

pub mod basis;
pub mod connect4gb;
pub mod decomposition;
pub mod field;
pub mod graph;
pub mod pointset;
pub mod poly;
pub mod random;
pub mod staircase;
pub mod stratum;

pub use basis::ReducedGB;
pub use connect4gb::{
    membership_check, reduce_to_psi, ConnectFourResult, ReduceOptions, SlicedInstance,
};
pub use decomposition::{decomposition_number, enumerate_decompositions, Decomposition};
pub use field::{Field, FieldElement};
pub use graph::{build_iterated_graph, GraphLimits, IteratedDecompositionGraph};
pub use pointset::{intersect_ideals_gb, standard_set_of, vanishing_ideal_gb, PointSet};
pub use poly::LexPolynomial;
pub use staircase::{Exponent, StandardSet};
pub use stratum::{report, StratumReport};
