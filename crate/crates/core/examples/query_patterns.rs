//! Runs a hand-written conjunctive pattern over an export: which objects
//! own a point that an item flow binds to?

use gopprre::fixtures::load_pack;
use gopprre::kg::{export_model, Iri, Predicate, Vocabulary};
use gopprre::model::tn;
use gopprre::query::{match_pattern, Pattern, PatternTerm, TriplePattern};

fn main() {
    let pack = load_pack("mini_sysml").expect("bundled pack");
    let ts = export_model(&pack.metamodel, pack.model("ibd_small").unwrap()).unwrap();
    let v = Vocabulary::default();
    let p = |pred| PatternTerm::iri(&v.predicate(pred));
    let var = PatternTerm::var;
    let rdf_type = Iri::new("http://www.w3.org/1999/02/22-rdf-syntax-ns#type").unwrap();

    let pattern = Pattern::new(vec![
        TriplePattern::new(
            var("object"),
            p(Predicate::LinkObjectAndPoint),
            var("point"),
        ),
        TriplePattern::new(
            var("connector"),
            p(Predicate::RoleBindingPoint),
            var("point"),
        ),
        TriplePattern::new(
            var("connector"),
            p(Predicate::LinkFromRelationship),
            var("flow"),
        ),
        TriplePattern::new(
            var("flow"),
            PatternTerm::iri(&rdf_type),
            PatternTerm::iri(&v.type_class(&tn("ItemFlow"))),
        ),
    ])
    .expect("well-formed pattern");

    println!("{pattern}");
    for row in match_pattern(&ts, &pattern).solutions() {
        println!("{} --{}--> {}", row["object"], row["flow"], row["point"]);
    }
}
