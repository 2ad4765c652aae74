//! Exact counting and enumeration of fuzzy topologies on finite chain
//! lattices.
//!
//! A fuzzy subset of an `n`-point set, with membership grades in an
//! `m`-element chain, is a vector of grade ranks; the `m^n` of them form a
//! lattice under pointwise minimum and maximum. A fuzzy topology is a
//! family of fuzzy subsets that contains the empty and the whole set and is
//! closed under those two operations; `k` denotes its number of open sets.
//!
//! The crate provides:
//!
//! * [`lattice`]: grade vectors, mixed-radix codes and the lattice
//!   operations;
//! * [`topology`]: validity checking and closure of families;
//! * [`enumerate`]: budgeted brute-force enumeration (a pruned search plus
//!   an intentionally naive oracle to check it against);
//! * [`closed_form`]: closed-form counts for `k = 2..5` and for the
//!   near-maximal cardinalities, in exact big-integer arithmetic;
//! * [`bitopology`]: pair counts for fuzzy bitopological spaces under
//!   three pairing conventions;
//! * [`report`]: formula-versus-enumeration sweeps and census tables;
//! * [`cli`]: the `fuztop` command-line front end built on all of the
//!   above.
//!
//! The `examples/` directory walks through each capability; start with
//! `lattice_tour` and `enumerate_topologies`:
//!
//! ```bash
//! cargo run -p fuztop --example lattice_tour
//! cargo run -p fuztop --example enumerate_topologies
//! ```

pub mod bitopology;
pub mod cli;
pub mod closed_form;
pub mod enumerate;
pub mod error;
pub mod lattice;
pub mod report;
pub mod topology;

pub use bitopology::{
    bitop_count, enumerate_pairs, for_each_pair, pair_count_from_t, BitopCountResult, CountMethod,
    PairConvention,
};
pub use closed_form::{
    binomial, count_k2, count_k3, count_k4, count_k5, formula_count, is_covered, maximal_results,
    FormulaResult, FormulaSource,
};
pub use enumerate::{
    enumerate_all_sizes, enumerate_topologies, enumerate_topologies_into, list_topologies,
    naive_count, EnumBudget,
};
pub use error::{Error, Result};
pub use lattice::{Code, GradeVector, LatticeContext};
pub use report::{build_table, run_verify, CellStatus, TableRow, VerificationReport, VerifyRow};
pub use topology::{closure, is_topology, TopologyFamily};

pub use num_bigint::BigUint;
