//! Exports the `ibd_small` model and its meta-model, printing Turtle and
//! the N-Triples size.

use gopprre::fixtures::load_pack;
use gopprre::kg::{serialize_ntriples, serialize_turtle, Exporter, Vocabulary};

fn main() {
    let pack = load_pack("mini_sysml").expect("bundled pack");
    let m = pack.model("ibd_small").expect("bundled model");
    let exporter = Exporter::new(Vocabulary::default());
    let meta = exporter
        .export_metamodel(&pack.metamodel)
        .expect("valid meta-model");
    let model = exporter
        .export_model(&pack.metamodel, m)
        .expect("valid model");

    println!("{}", serialize_turtle(&model, exporter.vocabulary()));
    let all = meta.union(&model);
    println!(
        "# {} meta-model + {} model triples = {}",
        meta.len(),
        model.len(),
        all.len()
    );
    println!("# {} bytes of N-Triples", serialize_ntriples(&all).len());
}
