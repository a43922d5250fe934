//! Exact three-gap structure of irrational rotations.
//!
//! For a quadratic irrational `α` and `N ≥ 1` the points `{mα}`, `0 ≤ m < N`,
//! cut the unit circle into gaps of at most three lengths. This crate builds
//! that configuration exactly (no floating point anywhere in a result), reads
//! off the cyclic gap word over `a < b < c`, and checks the mirror symmetry of
//! the word about each `c` along with the facts about relabeling times that
//! explain it.
//!
//! ```
//! use threegap_core::{build_config_oracle, check_symmetry_theorem, parse_alpha};
//!
//! let alpha = parse_alpha("sqrt:2").unwrap();
//! let config = build_config_oracle(&alpha, 10).unwrap();
//! assert_eq!(config.word().to_string(), "acabacabab");
//! assert!(check_symmetry_theorem(config.word()).overall);
//! ```

pub mod checks;
pub mod engine;
pub mod isqrt;
pub mod quadratic;
pub mod word;

pub use checks::{
    c_positions, check_engine_equivalence, check_fact1, check_fact2, check_fact3, check_prop1,
    check_prop2, check_prop2_with_predecessor, check_relabeling_gap_claim, check_symmetry_sweep,
    check_symmetry_theorem, check_third_size_additivity, check_three_gap, sweep, symmetry_radius,
    CheckError, CheckReport, Engine, Params, Status, SymmetryCenter, SymmetryReport, Witness,
    DENSE_EQUIVALENCE_LIMIT,
};
pub use engine::{
    build_config_incremental, build_config_oracle, is_relabeling_time, relabeling_times, step,
    CircleConfig, GapError, IncrementalEngine, Insertion, StepEvent, StepKind,
};
pub use quadratic::{
    cf_expansion, compare, floor_mult, frac_mult, parse_alpha, sign, Alpha, QuadError, QuadValue,
    Sign,
};
pub use word::{GapWord, Letter, WordParseError};
