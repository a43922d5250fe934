//! Shared inputs for the engine benchmarks.

use threegap_core::{parse_alpha, Alpha};

/// Angles exercised by every benchmark group.
pub const BENCH_ALPHAS: [&str; 3] = ["sqrt:2", "golden", "quad:1:1:3:7"];

pub fn alphas() -> Vec<(&'static str, Alpha)> {
    BENCH_ALPHAS
        .iter()
        .map(|&s| (s, parse_alpha(s).expect("benchmark alpha parses")))
        .collect()
}
