//! Separation constants, decomposition into uniformly discrete classes, and
//! the weighted boundary series with their convergence diagnostics.

mod partition;
mod separation;
mod series;
mod verdict;

pub use partition::{partition_into_discrete, Partition};
pub use separation::{
    is_uniformly_discrete, separation_constant, separation_constant_brute_force, SeparationReport,
    DISCRETE_SLACK,
};
pub use series::{
    carleson_mass, divergence_sum, theorem_sum, weight_admissible, NeumaierSum, SumReport,
    WeightFunction,
};
pub use verdict::{
    convergence_verdict, verdict_from_increments, Diagnostics, Verdict, TAIL_WINDOW,
};
