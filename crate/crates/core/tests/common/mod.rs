//! Seeded generators for valid meta-models and models, plus oracles that
//! recompute expected results without going through the library's own
//! export or query code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gopprre::kg::{export_metamodel, export_model, Iri, Literal, Term, Triple, TripleSet};
use gopprre::model::Connection;
use gopprre::model::{
    ConnectionRule, Connector, ConnectorBinding, ConnectorTarget, Datatype, Decomposition,
    DecompositionMode, InstanceId, MetaKind, MetaModel, Model, ObjectTypeDef, PointInstance,
    PropertyInstance, PropertySlot, PropertyValue, RelationshipTypeDef, RoleInstance, TypeDecl,
    TypeName,
};
use gopprre::query::{Pattern, PatternTerm, TriplePattern};
use rand::rngs::StdRng;
use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};

pub fn tn(s: &str) -> TypeName {
    TypeName::new(s).unwrap()
}

pub fn id(s: &str) -> InstanceId {
    InstanceId::new(s).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy)]
pub struct MetaShape {
    /// When false, every rule gets two fresh connectors.
    pub share_connectors: bool,
    pub max_rules: usize,
}

impl Default for MetaShape {
    fn default() -> Self {
        MetaShape {
            share_connectors: true,
            max_rules: 12,
        }
    }
}

fn maybe_icon(r: &mut StdRng, path: String) -> Option<String> {
    r.gen_bool(0.3).then_some(path)
}

const DATATYPES: [Datatype; 4] = [
    Datatype::String,
    Datatype::Integer,
    Datatype::Decimal,
    Datatype::Boolean,
];

/// A random meta-model that passes `validate_metamodel`.
///
/// Names: graphs `G<i>`, objects `O<i>`, points `P<i>`, relationships
/// `R<i>`, roles `Ro<i>`, properties `Pr<i>`, connectors `k<i>`.
pub fn gen_metamodel(r: &mut StdRng, shape: MetaShape) -> MetaModel {
    let mut mm = MetaModel::new(format!("lang{}", r.gen_range(0..1000)));
    let n_graph = r.gen_range(1..=3);
    let n_obj = r.gen_range(1..=6);
    let n_point = r.gen_range(0..=4);
    let n_rel = r.gen_range(0..=4);
    let n_role = r.gen_range(2..=6);
    let n_prop = r.gen_range(0..=4);

    for i in 0..n_graph {
        mm.graph_types.insert(
            tn(&format!("G{i}")),
            TypeDecl {
                icon_path: maybe_icon(r, format!("g{i}.svg")),
            },
        );
    }
    let points: Vec<TypeName> = (0..n_point).map(|i| tn(&format!("P{i}"))).collect();
    for (i, p) in points.iter().enumerate() {
        mm.point_types.insert(
            p.clone(),
            TypeDecl {
                icon_path: maybe_icon(r, format!("p{i}.svg")),
            },
        );
    }
    let objects: Vec<TypeName> = (0..n_obj).map(|i| tn(&format!("O{i}"))).collect();
    for (i, o) in objects.iter().enumerate() {
        let decomposes_to = r.gen_bool(0.2).then(|| Decomposition {
            graph_type: tn(&format!("G{}", r.gen_range(0..n_graph))),
            mode: if r.gen_bool(0.5) {
                DecompositionMode::Decompose
            } else {
                DecompositionMode::Explore
            },
        });
        let def = ObjectTypeDef {
            point_types: BTreeSet::new(),
            decomposes_to,
            icon_path: maybe_icon(r, format!("o{i}.svg")),
        };
        mm.object_types.insert(o.clone(), def);
    }
    // Every point type needs an owner object type.
    for p in &points {
        let owner = objects.choose(r).unwrap();
        mm.object_types
            .get_mut(owner)
            .unwrap()
            .point_types
            .insert(p.clone());
        for o in &objects {
            if r.gen_bool(0.2) {
                mm.object_types
                    .get_mut(o)
                    .unwrap()
                    .point_types
                    .insert(p.clone());
            }
        }
    }
    let roles: Vec<TypeName> = (0..n_role).map(|i| tn(&format!("Ro{i}"))).collect();
    for ro in &roles {
        mm.role_types.insert(ro.clone(), TypeDecl::default());
    }
    let rels: Vec<TypeName> = (0..n_rel).map(|i| tn(&format!("R{i}"))).collect();
    for (i, rel) in rels.iter().enumerate() {
        let pair: Vec<&TypeName> = roles.choose_multiple(r, 2).collect();
        let mut def = RelationshipTypeDef::new(pair[0].clone(), pair[1].clone());
        def.icon_path = maybe_icon(r, format!("r{i}.svg"));
        mm.relationship_types.insert(rel.clone(), def);
    }
    for i in 0..n_prop {
        mm.property_types
            .insert(tn(&format!("Pr{i}")), TypeDecl::default());
    }

    // Slots: at most one datatype per (kind, owner, property).
    if n_prop > 0 {
        let owners: Vec<(MetaKind, TypeName)> = mm
            .declarations()
            .into_iter()
            .filter(|(k, _)| k.can_own_properties())
            .map(|(k, n)| (k, n.clone()))
            .collect();
        for (kind, owner) in owners {
            for i in 0..n_prop {
                if r.gen_bool(0.3) {
                    mm.property_slots.insert(PropertySlot {
                        owner_kind: kind,
                        owner_type: owner.clone(),
                        property_type: tn(&format!("Pr{i}")),
                        value_datatype: *DATATYPES.choose(r).unwrap(),
                    });
                }
            }
        }
    }

    for g in 0..n_graph {
        let mut members: BTreeSet<TypeName> = BTreeSet::new();
        for t in objects.iter().chain(rels.iter()) {
            if r.gen_bool(0.7) {
                members.insert(t.clone());
            }
        }
        if !members.is_empty() || r.gen_bool(0.5) {
            mm.graph_membership.insert(tn(&format!("G{g}")), members);
        }
    }

    gen_rules(r, &mut mm, shape, &objects, &rels);
    mm
}

fn random_target(r: &mut StdRng, mm: &MetaModel, objects: &[TypeName]) -> ConnectorTarget {
    let o = objects.choose(r).unwrap();
    let pts: Vec<&TypeName> = mm.object_types[o].point_types.iter().collect();
    if !pts.is_empty() && r.gen_bool(0.4) {
        ConnectorTarget::point(o.clone(), (*pts.choose(r).unwrap()).clone())
    } else {
        ConnectorTarget::object(o.clone())
    }
}

fn gen_rules(
    r: &mut StdRng,
    mm: &mut MetaModel,
    shape: MetaShape,
    objects: &[TypeName],
    rels: &[TypeName],
) {
    if rels.is_empty() {
        return;
    }
    let n_rules = r.gen_range(0..=shape.max_rules);
    let mut by_signature: BTreeMap<Connector, InstanceId> = BTreeMap::new();
    let mut next = 0usize;
    for _ in 0..n_rules * 4 {
        if mm.rules.len() == n_rules {
            break;
        }
        let rel = rels.choose(r).unwrap();
        let def = &mm.relationship_types[rel];
        let (start_role, end_role) = if r.gen_bool(0.5) {
            (def.role_types[0].clone(), def.role_types[1].clone())
        } else {
            (def.role_types[1].clone(), def.role_types[0].clone())
        };
        let start = Connector {
            relationship_type: rel.clone(),
            role_type: start_role,
            target: random_target(r, mm, objects),
        };
        let end = Connector {
            relationship_type: rel.clone(),
            role_type: end_role,
            target: random_target(r, mm, objects),
        };
        if !shape.share_connectors
            && (by_signature.contains_key(&start) || by_signature.contains_key(&end))
        {
            continue;
        }
        let mut intern = |c: Connector| -> InstanceId {
            by_signature
                .entry(c)
                .or_insert_with(|| {
                    next += 1;
                    id(&format!("k{next}"))
                })
                .clone()
        };
        let rule = ConnectionRule {
            start: intern(start),
            end: intern(end),
        };
        mm.rules.insert(rule);
    }
    // Only connectors cited by a kept rule survive (duplicated rules are
    // dropped by the set, their connectors were still interned).
    let cited: BTreeSet<&InstanceId> = mm.rules.iter().flat_map(|r| [&r.start, &r.end]).collect();
    for (c, cid) in &by_signature {
        if cited.contains(cid) {
            mm.connectors.insert(cid.clone(), c.clone());
        }
    }
}

/// One start connector shared by `n` rules, each with its own end
/// connector: `n + 1` connectors.
pub fn shared_cluster(n: usize) -> MetaModel {
    let mut mm = MetaModel::new("cluster");
    mm.graph_types.insert(tn("Diagram"), TypeDecl::default());
    mm.object_types.insert(tn("Note"), ObjectTypeDef::default());
    mm.role_types.insert(tn("Annotating"), TypeDecl::default());
    mm.role_types.insert(tn("Annotated"), TypeDecl::default());
    mm.relationship_types.insert(
        tn("Annotation"),
        RelationshipTypeDef::new(tn("Annotating"), tn("Annotated")),
    );
    mm.connectors.insert(
        id("from_note"),
        Connector {
            relationship_type: tn("Annotation"),
            role_type: tn("Annotating"),
            target: ConnectorTarget::object(tn("Note")),
        },
    );
    for i in 0..n {
        let target = tn(&format!("Target{i}"));
        mm.object_types
            .insert(target.clone(), ObjectTypeDef::default());
        let end = id(&format!("to_target{i}"));
        mm.connectors.insert(
            end.clone(),
            Connector {
                relationship_type: tn("Annotation"),
                role_type: tn("Annotated"),
                target: ConnectorTarget::object(target),
            },
        );
        mm.rules.insert(ConnectionRule {
            start: id("from_note"),
            end,
        });
    }
    mm
}

fn gen_value(r: &mut StdRng, dt: Datatype) -> PropertyValue {
    match dt {
        Datatype::String => {
            const PIECES: [&str; 7] = [
                "alpha",
                "β",
                " ",
                "\"q\"",
                "back\\slash",
                "line\nbreak",
                "tab\t",
            ];
            let n = r.gen_range(0..4);
            PropertyValue::String((0..n).map(|_| *PIECES.choose(r).unwrap()).collect())
        }
        Datatype::Integer => PropertyValue::Integer(r.gen_range(-1000..1000)),
        Datatype::Decimal => {
            let int = r.gen_range(-500i64..500);
            if r.gen_bool(0.5) {
                PropertyValue::Decimal(format!("{int}.{}", r.gen_range(0..1000)))
            } else {
                PropertyValue::Decimal(int.to_string())
            }
        }
        Datatype::Boolean => PropertyValue::Boolean(r.gen_bool(0.5)),
    }
}

/// Total number of model elements: graph, objects, relationships, points,
/// roles and properties.
pub fn element_count(m: &Model) -> usize {
    1 + m.objects.len()
        + m.relationships.len()
        + m.points.len()
        + m.roles.len()
        + m.properties.len()
}

/// A random model of `mm` (which must be valid) with at most `max_elements`
/// elements. Ids: graph `g`, objects `o<i>`, relationships `e<i>`, points
/// `p<i>`, roles `rl<i>`, properties `v<i>`.
pub fn gen_model(r: &mut StdRng, mm: &MetaModel, max_elements: usize) -> Model {
    let graphs: Vec<&TypeName> = mm.graph_types.keys().collect();
    let graph_type = (*graphs.choose(r).unwrap()).clone();
    let mut m = Model::new(id("g"), graph_type.clone());
    let admitted: BTreeSet<TypeName> = mm
        .graph_membership
        .get(&graph_type)
        .cloned()
        .unwrap_or_default();
    let budget = |m: &Model, extra: usize| element_count(m) + extra <= max_elements;

    let object_types: Vec<&TypeName> = mm
        .object_types
        .keys()
        .filter(|t| admitted.contains(*t))
        .collect();
    if !object_types.is_empty() {
        for i in 0..r.gen_range(0..=12) {
            if !budget(&m, 1) {
                break;
            }
            m.objects.insert(
                id(&format!("o{i}")),
                (*object_types.choose(r).unwrap()).clone(),
            );
        }
    }
    let mut pi = 0;
    for (oid, oty) in m.objects.clone() {
        for pt in &mm.object_types[&oty].point_types {
            if r.gen_bool(0.6) && budget(&m, 1) {
                m.points.insert(
                    id(&format!("p{pi}")),
                    PointInstance {
                        point_type: pt.clone(),
                        owner: oid.clone(),
                    },
                );
                pi += 1;
            }
        }
    }

    // Relationships: mostly realizations of admitted rules with matching
    // endpoints; some left unconnected.
    let rules: Vec<&ConnectionRule> = mm
        .rules
        .iter()
        .filter(|rule| admitted.contains(&mm.connectors[&rule.start].relationship_type))
        .collect();
    let endpoints = |m: &Model, c: &Connector| -> Vec<(InstanceId, Option<InstanceId>)> {
        let mut out = Vec::new();
        for (oid, oty) in &m.objects {
            if *oty != c.target.object_type {
                continue;
            }
            match &c.target.point_type {
                None => out.push((oid.clone(), None)),
                Some(pt) => {
                    for (pid, p) in &m.points {
                        if p.owner == *oid && p.point_type == *pt {
                            out.push((oid.clone(), Some(pid.clone())));
                        }
                    }
                }
            }
        }
        out
    };
    let mut ei = 0;
    let mut ri = 0;
    let mut new_role = |m: &mut Model, role_type: &TypeName, owner: &InstanceId| -> InstanceId {
        let rid = id(&format!("rl{ri}"));
        ri += 1;
        m.roles.insert(
            rid.clone(),
            RoleInstance {
                role_type: role_type.clone(),
                owner: owner.clone(),
            },
        );
        rid
    };
    for _ in 0..r.gen_range(0..=8) {
        if !budget(&m, 3) {
            break;
        }
        let connect = !rules.is_empty() && r.gen_bool(0.85);
        if connect {
            let rule = *rules.choose(r).unwrap();
            let (sc, ec) = (&mm.connectors[&rule.start], &mm.connectors[&rule.end]);
            let (starts, ends) = (endpoints(&m, sc), endpoints(&m, ec));
            let (Some(s), Some(e)) = (starts.choose(r).cloned(), ends.choose(r).cloned()) else {
                continue;
            };
            let eid = id(&format!("e{ei}"));
            ei += 1;
            m.relationships
                .insert(eid.clone(), sc.relationship_type.clone());
            let sr = new_role(&mut m, &sc.role_type, &eid);
            let er = new_role(&mut m, &ec.role_type, &eid);
            m.connections.insert(Connection {
                relationship: eid,
                start: ConnectorBinding {
                    connector: rule.start.clone(),
                    role: sr,
                    object: s.0,
                    point: s.1,
                },
                end: ConnectorBinding {
                    connector: rule.end.clone(),
                    role: er,
                    object: e.0,
                    point: e.1,
                },
            });
        } else {
            let rel_types: Vec<&TypeName> = mm
                .relationship_types
                .keys()
                .filter(|t| admitted.contains(*t))
                .collect();
            let Some(rt) = rel_types.choose(r) else {
                continue;
            };
            let eid = id(&format!("e{ei}"));
            ei += 1;
            m.relationships.insert(eid.clone(), (*rt).clone());
            for role_type in mm.relationship_types[*rt].role_types.clone() {
                new_role(&mut m, &role_type, &eid);
            }
        }
    }

    // Properties on any element with a matching slot.
    let owners: Vec<(InstanceId, MetaKind, TypeName)> =
        std::iter::once((m.graph_id.clone(), MetaKind::Graph, m.graph_type.clone()))
            .chain(
                m.objects
                    .iter()
                    .map(|(i, t)| (i.clone(), MetaKind::Object, t.clone())),
            )
            .chain(
                m.relationships
                    .iter()
                    .map(|(i, t)| (i.clone(), MetaKind::Relationship, t.clone())),
            )
            .chain(
                m.points
                    .iter()
                    .map(|(i, p)| (i.clone(), MetaKind::Point, p.point_type.clone())),
            )
            .chain(
                m.roles
                    .iter()
                    .map(|(i, ro)| (i.clone(), MetaKind::Role, ro.role_type.clone())),
            )
            .collect();
    let mut vi = 0;
    for (oid, kind, ty) in &owners {
        for slot in mm
            .property_slots
            .iter()
            .filter(|s| s.owner_kind == *kind && s.owner_type == *ty)
        {
            if r.gen_bool(0.5) && budget(&m, 1) {
                let value = gen_value(r, slot.value_datatype);
                m.properties.insert(
                    id(&format!("v{vi}")),
                    PropertyInstance {
                        property_type: slot.property_type.clone(),
                        owner: oid.clone(),
                        value,
                    },
                );
                vi += 1;
            }
        }
        if *kind != MetaKind::Role && r.gen_bool(0.1) {
            m.icon_overrides
                .insert(oid.clone(), format!("custom/{oid}.svg"));
        }
    }
    m
}

/// A valid meta-model that admits at least one connection, with a model of
/// it. Retries seeds derived from `seed` until a connected model appears.
pub fn gen_pair(seed: u64, max_elements: usize) -> (MetaModel, Model) {
    let mut r = rng(seed);
    loop {
        let mm = gen_metamodel(&mut r, MetaShape::default());
        let m = gen_model(&mut r, &mm, max_elements);
        if !m.connections.is_empty() || r.gen_bool(0.2) {
            return (mm, m);
        }
    }
}

// ---------------------------------------------------------------- oracles

/// Exhaustive scan over rules: (rules, distinct connector signatures cited,
/// connector citations beyond the first).
pub fn oracle_connector_scan(mm: &MetaModel) -> (usize, usize, usize) {
    let mut citations: Vec<&Connector> = Vec::new();
    for rule in &mm.rules {
        citations.push(&mm.connectors[&rule.start]);
        citations.push(&mm.connectors[&rule.end]);
    }
    let mut distinct: Vec<&Connector> = Vec::new();
    for c in &citations {
        if !distinct.iter().any(|d| d == c) {
            distinct.push(c);
        }
    }
    (
        mm.rules.len(),
        distinct.len(),
        citations.len() - distinct.len(),
    )
}

pub const BASE: &str = "http://www.zkhoneycomb.com/formats/metagInOwl#";
const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
const SUBCLASS: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
const OWL: &str = "http://www.w3.org/2002/07/owl#";
const XSD: &str = "http://www.w3.org/2001/XMLSchema#";

fn lit(lexical: &str, datatype: &str) -> String {
    let mut s = String::from("\"");
    for ch in lexical.chars() {
        match ch {
            '\\' => s.push_str("\\\\"),
            '"' => s.push_str("\\\""),
            '\n' => s.push_str("\\n"),
            '\r' => s.push_str("\\r"),
            c => s.push(c),
        }
    }
    s.push('"');
    if datatype != "string" {
        s.push_str(&format!("^^<{XSD}{datatype}>"));
    }
    s
}

fn line(s: &str, p: &str, o: &str) -> String {
    format!("<{s}> <{p}> {o} .")
}

fn iri(s: &str) -> String {
    format!("<{s}>")
}

fn se(local: &str) -> String {
    format!("{BASE}{local}")
}

const OBJECT_PROPS: [&str; 11] = [
    "graphIncludingObject",
    "graphIncludingRelationship",
    "linkObjectAndPoint",
    "linkRelationshipAndRole",
    "hasProperty",
    "graphIncludingConnector",
    "linkFromRelationship",
    "linkToObject",
    "connect",
    "roleBindingObject",
    "roleBindingPoint",
];

/// The N-Triples lines a meta-model should export to, written out by hand
/// from the mapping table.
pub fn oracle_metamodel_lines(mm: &MetaModel) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let class = |t: &str| iri(&format!("{OWL}{t}"));
    for p in OBJECT_PROPS {
        out.insert(line(&se(p), RDF_TYPE, &class("ObjectProperty")));
    }
    out.insert(line(&se("hasValue"), RDF_TYPE, &class("DatatypeProperty")));
    out.insert(line(
        &se("modelIconPath"),
        RDF_TYPE,
        &class("DatatypeProperty"),
    ));
    out.insert(line(
        &se("iconPath"),
        RDF_TYPE,
        &class("AnnotationProperty"),
    ));
    for k in [
        "Graph",
        "Object",
        "Point",
        "Property",
        "Relationship",
        "Role",
        "Connector",
    ] {
        out.insert(line(&se(k), RDF_TYPE, &class("Class")));
    }
    let mut decl = |kind: &str, name: &TypeName, icon: Option<&String>| {
        out.insert(line(&se(name.as_str()), SUBCLASS, &iri(&se(kind))));
        if let Some(icon) = icon {
            out.insert(line(
                &se(name.as_str()),
                &se("iconPath"),
                &lit(icon, "string"),
            ));
        }
    };
    for (n, d) in &mm.graph_types {
        decl("Graph", n, d.icon_path.as_ref());
    }
    for (n, d) in &mm.object_types {
        decl("Object", n, d.icon_path.as_ref());
    }
    for (n, d) in &mm.point_types {
        decl("Point", n, d.icon_path.as_ref());
    }
    for (n, d) in &mm.property_types {
        decl("Property", n, d.icon_path.as_ref());
    }
    for (n, d) in &mm.relationship_types {
        decl("Relationship", n, d.icon_path.as_ref());
    }
    for (n, d) in &mm.role_types {
        decl("Role", n, d.icon_path.as_ref());
    }
    for (cid, c) in &mm.connectors {
        let s = se(&format!("Connector_{cid}"));
        out.insert(line(&s, RDF_TYPE, &iri(&se("Connector"))));
        out.insert(line(
            &s,
            &se("linkFromRelationship"),
            &iri(&se(c.relationship_type.as_str())),
        ));
        out.insert(line(
            &s,
            &se("roleBindingObject"),
            &iri(&se(c.role_type.as_str())),
        ));
        out.insert(line(
            &s,
            &se("linkToObject"),
            &iri(&se(c.target.object_type.as_str())),
        ));
        if let Some(p) = &c.target.point_type {
            out.insert(line(&s, &se("roleBindingPoint"), &iri(&se(p.as_str()))));
        }
    }
    for rule in &mm.rules {
        out.insert(line(
            &se(&format!("Connector_{}", rule.start)),
            &se("connect"),
            &iri(&se(&format!("Connector_{}", rule.end))),
        ));
    }
    out
}

/// Metamodel triple count from declaration counts alone.
pub fn oracle_metamodel_count(mm: &MetaModel) -> usize {
    let icons = mm
        .graph_types
        .values()
        .chain(mm.point_types.values())
        .chain(mm.role_types.values())
        .chain(mm.property_types.values())
        .filter(|d| d.icon_path.is_some())
        .count()
        + mm.object_types
            .values()
            .filter(|d| d.icon_path.is_some())
            .count()
        + mm.relationship_types
            .values()
            .filter(|d| d.icon_path.is_some())
            .count();
    let decls = mm.graph_types.len()
        + mm.object_types.len()
        + mm.point_types.len()
        + mm.property_types.len()
        + mm.relationship_types.len()
        + mm.role_types.len();
    let pointed = mm
        .connectors
        .values()
        .filter(|c| c.target.point_type.is_some())
        .count();
    14 + 7 + decls + icons + 4 * mm.connectors.len() + pointed + mm.rules.len()
}

fn individual(ty: &TypeName, id: &InstanceId) -> String {
    se(&format!("{ty}_{id}"))
}

/// Type of any model element, looked up field by field.
fn type_of<'a>(m: &'a Model, i: &InstanceId) -> &'a TypeName {
    if *i == m.graph_id {
        return &m.graph_type;
    }
    if let Some(t) = m.objects.get(i).or_else(|| m.relationships.get(i)) {
        return t;
    }
    if let Some(p) = m.points.get(i) {
        return &p.point_type;
    }
    if let Some(r) = m.roles.get(i) {
        return &r.role_type;
    }
    &m.properties[i].property_type
}

fn ind(m: &Model, i: &InstanceId) -> String {
    individual(type_of(m, i), i)
}

/// The N-Triples lines a model should export to.
pub fn oracle_model_lines(m: &Model) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let g = ind(m, &m.graph_id);
    out.insert(line(&g, RDF_TYPE, &iri(&se(m.graph_type.as_str()))));
    for (i, t) in &m.objects {
        out.insert(line(&ind(m, i), RDF_TYPE, &iri(&se(t.as_str()))));
        out.insert(line(&g, &se("graphIncludingObject"), &iri(&ind(m, i))));
    }
    for (i, t) in &m.relationships {
        out.insert(line(&ind(m, i), RDF_TYPE, &iri(&se(t.as_str()))));
        out.insert(line(
            &g,
            &se("graphIncludingRelationship"),
            &iri(&ind(m, i)),
        ));
    }
    for (i, p) in &m.points {
        out.insert(line(&ind(m, i), RDF_TYPE, &iri(&se(p.point_type.as_str()))));
        out.insert(line(
            &ind(m, &p.owner),
            &se("linkObjectAndPoint"),
            &iri(&ind(m, i)),
        ));
    }
    for (i, ro) in &m.roles {
        out.insert(line(&ind(m, i), RDF_TYPE, &iri(&se(ro.role_type.as_str()))));
        out.insert(line(
            &ind(m, &ro.owner),
            &se("linkRelationshipAndRole"),
            &iri(&ind(m, i)),
        ));
    }
    for (i, p) in &m.properties {
        out.insert(line(
            &ind(m, i),
            RDF_TYPE,
            &iri(&se(p.property_type.as_str())),
        ));
        out.insert(line(
            &ind(m, &p.owner),
            &se("hasProperty"),
            &iri(&ind(m, i)),
        ));
        let (lex, dt) = match &p.value {
            PropertyValue::String(s) => (s.clone(), "string"),
            PropertyValue::Integer(n) => (n.to_string(), "integer"),
            PropertyValue::Decimal(d) => (d.clone(), "decimal"),
            PropertyValue::Boolean(b) => (b.to_string(), "boolean"),
        };
        out.insert(line(&ind(m, i), &se("hasValue"), &lit(&lex, dt)));
    }
    for (i, path) in &m.icon_overrides {
        out.insert(line(&ind(m, i), &se("modelIconPath"), &lit(path, "string")));
    }
    for c in &m.connections {
        let mut side = |b: &ConnectorBinding| {
            let s = se(&format!("Connector_{}", b.role));
            out.insert(line(&s, RDF_TYPE, &iri(&se("Connector"))));
            out.insert(line(&g, &se("graphIncludingConnector"), &iri(&s)));
            out.insert(line(
                &s,
                &se("linkFromRelationship"),
                &iri(&ind(m, &c.relationship)),
            ));
            out.insert(line(&s, &se("linkToObject"), &iri(&ind(m, &b.object))));
            out.insert(line(&s, &se("roleBindingObject"), &iri(&ind(m, &b.role))));
            if let Some(p) = &b.point {
                out.insert(line(&s, &se("roleBindingPoint"), &iri(&ind(m, p))));
            }
            s
        };
        let s = side(&c.start);
        let e = side(&c.end);
        out.insert(line(&s, &se("connect"), &iri(&e)));
    }
    out
}

/// (graph members, structure links, property links) as IRI string pairs,
/// collected by walking the model.
pub type StrLinks = BTreeSet<(String, String)>;

pub fn oracle_completeness(m: &Model) -> (StrLinks, StrLinks, StrLinks) {
    let g = ind(m, &m.graph_id);
    let members = m
        .objects
        .keys()
        .chain(m.relationships.keys())
        .map(|i| (g.clone(), ind(m, i)))
        .collect();
    let structure = m
        .points
        .iter()
        .map(|(i, p)| (ind(m, &p.owner), ind(m, i)))
        .chain(m.roles.iter().map(|(i, r)| (ind(m, &r.owner), ind(m, i))))
        .collect();
    let props = m
        .properties
        .iter()
        .map(|(i, p)| (ind(m, &p.owner), ind(m, i)))
        .collect();
    (members, structure, props)
}

/// Connection rows `(relationship, input, output, input_point, output_point)`
/// with `-` for no point, and direction rows `(graph, relationship, input)`.
pub fn oracle_logic(m: &Model) -> (BTreeSet<[String; 5]>, BTreeSet<[String; 3]>) {
    let g = ind(m, &m.graph_id);
    let pt = |p: &Option<InstanceId>| p.as_ref().map_or("-".to_string(), |p| ind(m, p));
    let mut conns = BTreeSet::new();
    let mut dirs = BTreeSet::new();
    for c in &m.connections {
        let rel = ind(m, &c.relationship);
        conns.insert([
            rel.clone(),
            ind(m, &c.start.object),
            ind(m, &c.end.object),
            pt(&c.start.point),
            pt(&c.end.point),
        ]);
        dirs.insert([g.clone(), rel, ind(m, &c.start.object)]);
    }
    (conns, dirs)
}

/// Every binding of every connection checked against every connector of
/// the meta-model: returns the bindings that no connector licenses, or whose
/// cited connector is not among the licensing ones.
pub fn oracle_unlicensed_bindings(mm: &MetaModel, m: &Model) -> Vec<String> {
    let mut bad = Vec::new();
    for c in &m.connections {
        for b in [&c.start, &c.end] {
            // Dangling references license nothing.
            let rel_ty = m.relationships.get(&c.relationship);
            let role_ty = m.roles.get(&b.role).map(|r| &r.role_type);
            let obj_ty = m.objects.get(&b.object);
            let point_ty = match &b.point {
                None => Some(None),
                Some(p) => m.points.get(p).map(|p| Some(&p.point_type)),
            };
            let licensing: Vec<&InstanceId> = mm
                .connectors
                .iter()
                .filter(|(_, k)| {
                    rel_ty == Some(&k.relationship_type)
                        && role_ty == Some(&k.role_type)
                        && obj_ty == Some(&k.target.object_type)
                        && point_ty == Some(k.target.point_type.as_ref())
                })
                .map(|(cid, _)| cid)
                .collect();
            if !licensing.contains(&&b.connector) {
                bad.push(format!("{}:{}", c.relationship, b.role));
            }
        }
    }
    bad
}

// ------------------------------------------------------- query oracle

fn test_iri(s: &str) -> Iri {
    Iri::new(format!("urn:t:{s}")).unwrap()
}

/// Dense store over a tiny vocabulary so that joins have many solutions.
pub fn dense_store(r: &mut StdRng, n: usize) -> TripleSet {
    // Wider vocabulary for bigger stores keeps join fan-out bounded.
    let width = (n / 10).max(12);
    let mut ts = TripleSet::new();
    while ts.len() < n {
        let s = test_iri(&format!("s{}", r.gen_range(0..width)));
        let p = test_iri(&format!("p{}", r.gen_range(0..4)));
        let o = if r.gen_bool(0.8) {
            Term::Iri(test_iri(&format!("s{}", r.gen_range(0..width))))
        } else {
            Term::Literal(Literal::new(r.gen_range(0..5).to_string(), Datatype::Integer).unwrap())
        };
        ts.insert(Triple::new(s, p, o));
    }
    ts
}

/// An exported fixture-like store, cut down to at most 500 triples.
pub fn exported_store(r: &mut StdRng, seed: u64) -> TripleSet {
    let (mm, m) = gen_pair(seed, 50);
    let all = export_metamodel(&mm)
        .unwrap()
        .union(&export_model(&mm, &m).unwrap());
    let keep = all.len().min(500);
    all.iter()
        .cloned()
        .choose_multiple(r, keep)
        .into_iter()
        .collect()
}

pub fn random_pattern(r: &mut StdRng, ts: &TripleSet) -> Pattern {
    let triples: Vec<&Triple> = ts.iter().collect();
    let vars = ["a", "b", "c", "d"];
    let n = r.gen_range(1..=4);
    let mut out = Vec::new();
    for _ in 0..n {
        // Anchor constants in real triples so patterns are not trivially empty.
        let t = triples.choose(r).unwrap();
        let pick = |r: &mut StdRng, konst: Term, p_var: f64| {
            if r.gen_bool(p_var) {
                PatternTerm::var(vars.choose(r).unwrap())
            } else {
                PatternTerm::Const(konst)
            }
        };
        let s = pick(r, Term::Iri(t.subject.clone()), 0.55);
        let p = pick(r, Term::Iri(t.predicate.clone()), 0.2);
        let o = pick(r, t.object.clone(), 0.55);
        out.push(TriplePattern::new(s, p, o));
    }
    Pattern::new(out).unwrap()
}

fn unify(slot: &PatternTerm, value: &Term, env: &mut BTreeMap<String, Term>) -> bool {
    match slot {
        PatternTerm::Const(c) => c == value,
        PatternTerm::Var(v) => match env.get(v) {
            Some(bound) => bound == value,
            None => {
                env.insert(v.clone(), value.clone());
                true
            }
        },
    }
}

pub fn brute_force(ts: &TripleSet, pattern: &Pattern) -> BTreeSet<Vec<Term>> {
    let mut envs: Vec<BTreeMap<String, Term>> = vec![BTreeMap::new()];
    for tp in pattern.triples() {
        let mut next = Vec::new();
        for env in &envs {
            for t in ts.iter() {
                let mut e = env.clone();
                let [s, p, o] = tp.positions();
                if unify(s, &Term::Iri(t.subject.clone()), &mut e)
                    && unify(p, &Term::Iri(t.predicate.clone()), &mut e)
                    && unify(o, &t.object, &mut e)
                {
                    next.push(e);
                }
            }
        }
        envs = next;
    }
    let vars = pattern.variables();
    envs.into_iter()
        .map(|e| vars.iter().map(|v| e[v].clone()).collect())
        .collect()
}
