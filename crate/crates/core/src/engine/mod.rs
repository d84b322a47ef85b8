//! Theorem sums, divisibility decisions, integrality and conjecture checks,
//! and parameter-grid sweeps.

mod divisibility;
mod grid;
mod integrality;
mod ring;
mod sums;
mod verdict;

pub use divisibility::{
    cyclotomic_product_moduli, residue, verify_cyclotomic_product, verify_divisible_by_qn,
    witness_quotient, Modulus,
};
pub use grid::{grid_verify, Evaluation, GridSpec, Param, Statement};
pub use integrality::{
    conjecture_checks, conjecture_sum, int_lcm_sum, int_plain_sum, int_sum_lcm, int_sum_plain,
    ConjectureVariant, RationalSum, Sign,
};
pub use sums::{qsum_alternating, qsum_general, qsum_plain, qsum_product};
pub use verdict::{all_pass, Status, Verdict};
