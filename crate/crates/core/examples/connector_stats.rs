//! Declaration counts and connector arithmetic for the bundled packs and
//! for a synthetic cluster of rules sharing one start connector.

use gopprre::fixtures::{load_pack, pack_names};
use gopprre::model::{
    id, tn, ConnectionRule, Connector, ConnectorTarget, ObjectTypeDef, RelationshipTypeDef,
    TypeDecl,
};
use gopprre::{connector_arithmetic, count_summary, validate_metamodel, MetaModel};

fn cluster(n: usize) -> MetaModel {
    let mut mm = MetaModel::new("cluster");
    mm.object_types.insert(tn("Note"), ObjectTypeDef::default());
    mm.role_types.insert(tn("Annotating"), TypeDecl::default());
    mm.role_types.insert(tn("Annotated"), TypeDecl::default());
    mm.relationship_types.insert(
        tn("Annotation"),
        RelationshipTypeDef::new(tn("Annotating"), tn("Annotated")),
    );
    let conn = |role: &str, object: String| Connector {
        relationship_type: tn("Annotation"),
        role_type: tn(role),
        target: ConnectorTarget::object(tn(&object)),
    };
    mm.connectors
        .insert(id("note"), conn("Annotating", "Note".into()));
    for i in 0..n {
        mm.object_types
            .insert(tn(&format!("Thing{i}")), ObjectTypeDef::default());
        mm.connectors.insert(
            id(&format!("thing{i}")),
            conn("Annotated", format!("Thing{i}")),
        );
        mm.rules.insert(ConnectionRule {
            start: id("note"),
            end: id(&format!("thing{i}")),
        });
    }
    mm
}

fn main() {
    for name in pack_names() {
        let mm = load_pack(name).unwrap().metamodel;
        println!(
            "== {name}\n{}{}",
            count_summary(&mm),
            connector_arithmetic(&mm)
        );
    }
    let mm = cluster(12);
    assert!(validate_metamodel(&mm).ok());
    let a = connector_arithmetic(&mm);
    println!(
        "== 12-rule cluster\n{a}2 x {} - {} = {}",
        a.rules, a.savings, a.connectors
    );
}
