//! A metamodeling kernel for GOPPRRE (graph, object, point, property,
//! relationship, role, plus connector extensions).
//!
//! - [`model`] holds meta-models (language definitions) and models
//!   (instance graphs), [`validate`] checks them.
//! - [`dsl`] reads and writes the `.gopprr.json` / `.model.json` documents.
//! - [`kg`] exports both layers as knowledge-graph triples and serializes
//!   them as N-Triples or Turtle.
//! - [`query`] matches conjunctive patterns over triples and runs the
//!   completeness and logic verification suites.
//! - [`fixtures`] bundles the `mini_sysml` and `mini_bpmn` language packs.
//! - [`cli`] implements the `gopprre` command line.

pub mod cli;
pub mod dsl;
pub mod fixtures;
pub mod kg;
pub mod model;
pub mod query;
pub mod summary;
pub mod validate;

pub use model::{connection_endpoints, Endpoint, EndpointError, MetaKind, MetaModel, Model};
pub use summary::{connector_arithmetic, count_summary, ConnectorArithmetic, KindCounts};
pub use validate::{
    validate_metamodel, validate_model, ValidationReport, Violation, ViolationCode,
};
