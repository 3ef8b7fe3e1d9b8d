//! Parses the bundled document files, re-emits them canonically and shows
//! how parse errors are reported.

use gopprre::dsl::{emit_model, parse_metamodel, parse_model, read_metamodel};
use gopprre::fixtures::load_pack;

fn main() {
    let pack = load_pack("mini_bpmn").expect("bundled pack");
    let mm = parse_metamodel(pack.metamodel_source.text).expect("valid meta-model");
    let (_, _, src) = &pack.models[0];
    let m = parse_model(src.text, &mm).expect("valid model");
    println!("{} -> canonical form:\n{}", src.file, emit_model(&m));

    let broken = r#"{"format_version": 1, "kind": "metamodel", "payload": {"language_name": "x", "colour": "red"}}"#;
    println!("{}", read_metamodel(broken).unwrap_err());
    println!(
        "{}",
        read_metamodel("{\n  \"format_version\": 1,\n  oops\n}").unwrap_err()
    );
}
