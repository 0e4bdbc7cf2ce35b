//! Exact topology of planar polygon spaces.
//!
//! A closed planar linkage with bar lengths `ℓ = (l_1, …, l_n)` has a moduli
//! space `M_ℓ` of shapes (closed polygons modulo rotation). This crate computes
//!
//! * the Betti numbers of `M_ℓ` for a concrete length vector, by counting short
//!   and median subsets of bars ([`linkage`]);
//! * the exact fraction of a simplex lying on one side of a hyperplane, from the
//!   values of the cutting functional at the vertices ([`slice`]);
//! * the exact expected Betti numbers of a random linkage whose lengths are
//!   uniform on the unit simplex or the unit cube ([`expectation`]);
//! * seeded Monte Carlo estimators used to cross-check the exact paths
//!   ([`sampling`]).
//!
//! Bars are labelled `1..=n` throughout the public API.
//!
//! The crate is `no_std` (with `alloc`). The default `std` feature adds
//! rayon-based parallel evaluation; results are bit-identical either way.
#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod combinatorics;
mod error;
pub mod expectation;
pub mod linkage;
mod par;
pub mod sampling;
pub mod slice;
pub mod subset;

pub use error::{Error, Result};
pub use expectation::{
    average_betti_exact, convergence_table, subset_classes, subset_volume_term, AverageReport,
    ConvergenceRow, Measure, SubsetClasses,
};
pub use linkage::{
    betti, betti_profile, count_median, count_short, equilateral_reference, is_generic,
    max_length_index, BettiProfile, LengthVector,
};
pub use sampling::{average_betti_mc, betti_sampled, mc_volume_oracle, McEstimate};
pub use slice::{
    density_sequence, functional_values, group_values, partitions, slice_cdf, slice_ratio,
    slice_ratio_confluent, slice_ratio_distinct, vertices_a, vertices_b, DensitySequence, Flavor,
    GroupedValues, QSequence,
};
pub use subset::IndexSubset;

/// Arbitrary-precision rational, the exact scalar used everywhere outside of sampling.
pub type BigRational = num_rational::BigRational;
