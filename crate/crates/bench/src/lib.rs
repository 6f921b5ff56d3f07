//! Shared inputs for the criterion benches.

use efrac_core::Rational;

/// Rationals whose greedy expansions stress arbitrary-precision growth.
pub fn hard_greedy_inputs() -> Vec<Rational> {
    [(5, 121), (3, 7), (7, 73), (31, 311), (4, 49)]
        .into_iter()
        .map(|(p, q)| Rational::new(p, q))
        .collect()
}
