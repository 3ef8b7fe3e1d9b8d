//! Knowledge-graph export: terms, vocabulary, the meta-model/model
//! transformation, and N-Triples / Turtle serialization.

pub mod export;
pub mod ntriples;
pub mod term;
pub mod turtle;
pub mod vocab;

pub use export::{export_metamodel, export_model, ExportError, Exporter};
pub use ntriples::{parse_ntriples, serialize_ntriples, NTriplesError};
pub use term::{Iri, Literal, Term, TermError, Triple, TripleSet};
pub use turtle::serialize_turtle;
pub use vocab::{Predicate, Vocabulary};
