//! Closed-form e-injective chromatic numbers, constructive colorings, and
//! checks that hold both against the exact solver.

pub mod claims;
pub mod corpus;
pub mod oracle;
pub mod pattern;
pub mod suite;

pub use claims::{check, evaluate, CheckReport, Claim, Eval, HarnessError, Params, Verdict};
pub use oracle::{oracle_chi_ei, OracleValue};
pub use pattern::pattern_coloring;
pub use suite::{instances, run_suite, ParamRange, Ranges, SuiteOptions, SuiteReport, Summary};
