//! Builds a small meta-model in code, validates it, then breaks it.

use gopprre::model::{
    id, tn, ConnectionRule, Connector, ConnectorTarget, ObjectTypeDef, RelationshipTypeDef,
    TypeDecl,
};
use gopprre::{validate_metamodel, MetaModel};

fn main() {
    let mut mm = MetaModel::new("tiny_flow");
    mm.graph_types
        .insert(tn("FlowDiagram"), TypeDecl::default());
    mm.object_types
        .insert(tn("Station"), ObjectTypeDef::default());
    mm.role_types.insert(tn("From"), TypeDecl::default());
    mm.role_types.insert(tn("To"), TypeDecl::default());
    mm.relationship_types
        .insert(tn("Pipe"), RelationshipTypeDef::new(tn("From"), tn("To")));
    let end = |role: &str| Connector {
        relationship_type: tn("Pipe"),
        role_type: tn(role),
        target: ConnectorTarget::object(tn("Station")),
    };
    mm.connectors.insert(id("pipe_from"), end("From"));
    mm.connectors.insert(id("pipe_to"), end("To"));
    mm.rules.insert(ConnectionRule {
        start: id("pipe_from"),
        end: id("pipe_to"),
    });
    mm.graph_membership
        .insert(tn("FlowDiagram"), [tn("Station"), tn("Pipe")].into());

    print!("as built: {}", validate_metamodel(&mm));

    // A connector no rule uses, and a type that clashes with a reserved name.
    mm.connectors.insert(id("orphan"), end("To"));
    mm.object_types
        .insert(tn("Connector"), ObjectTypeDef::default());
    print!("after edits: {}", validate_metamodel(&mm));
}
