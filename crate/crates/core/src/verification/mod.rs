//! Independent checks, exhaustive oracles and instance generators.

mod checks;
mod enumerate;
mod generators;
mod oracle;

pub use checks::{
    check_lemma1, is_outerplane, is_strongly_outerplane, ConditionFailure, ConditionReport,
    FailureKind,
};
pub use enumerate::{canonical_code, enumerate_maximal, enumerate_triangulations};
pub use generators::{
    gen_nested_cycles, gen_random_maximal, gen_random_outerplane, gen_random_planar,
    random_general_position, random_permutation,
};
pub use oracle::{
    brute_force_max, independent_set_baseline, OracleMode, OracleResult, SubsetChecker,
    DEFAULT_ORACLE_CAP,
};
