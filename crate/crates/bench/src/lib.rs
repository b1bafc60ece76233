//! Shared setup for the benchmark targets.

use std::sync::Arc;

use dmh_core::fuzzy::{Context, Universe};
use dmh_core::lattice::standard_algebra_arc;

/// A catalog context over an `n`-point universe.
pub fn context(algebra: &str, n: usize) -> Context {
    Context::new(
        standard_algebra_arc(algebra).expect("catalog id"),
        Arc::new(Universe::of_size(n).expect("nonempty")),
    )
}
