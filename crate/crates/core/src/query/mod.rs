//! Conjunctive graph-pattern matching over a [`TripleSet`] and the two
//! verification suites built on it: completeness (membership, structure,
//! properties) and logic (connections and their direction).
//!
//! [`TripleSet`]: crate::kg::TripleSet

pub mod engine;
pub mod pattern;
pub mod report;
pub mod verify;

pub use engine::{match_pattern, BindingSet};
pub use pattern::{Pattern, PatternTerm, QueryError, TriplePattern};
pub use report::{
    completeness_report, logic_report, CompletenessReport, ConnectionRow, DirectionRow, Link,
    LogicReport,
};
pub use verify::{verify, DiffEntry, Section, VerificationDiff};
