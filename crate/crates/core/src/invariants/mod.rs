//! Numerical invariants: initial degrees and Waldschmidt brackets, Betti
//! tables and regularity.

pub mod alpha;
pub mod betti;
pub mod rank;
pub mod regularity;

pub use alpha::{alpha_table, waldschmidt_estimate, AlphaRow, AlphaTable, WaldschmidtEstimate};
pub use betti::{betti_table, regularity, BettiTable};
pub use regularity::{
    multiplier_witness, odd_cycle_data, reg_comparison, reg_quotient, term_max_degree,
    OddCycleData, RegularityReport,
};
