//! Runs the completeness and logic reports on an export, then deletes one
//! `connect` triple and shows the resulting diff.

use gopprre::fixtures::load_pack;
use gopprre::kg::{export_model, Predicate, Vocabulary};
use gopprre::query::{completeness_report, logic_report, verify};

fn main() {
    let pack = load_pack("mini_sysml").expect("bundled pack");
    let m = pack.model("ibd_small").unwrap();
    let vocab = Vocabulary::default();
    let mut ts = export_model(&pack.metamodel, m).unwrap();

    print!("{}", completeness_report(&ts, &vocab));
    print!("{}", logic_report(&ts, &vocab));
    print!("{}", verify(m, &pack.metamodel, &ts, &vocab));

    let connect = vocab.predicate(Predicate::Connect);
    let victim = ts.iter().find(|t| t.predicate == connect).cloned().unwrap();
    ts.remove(&victim);
    println!("\nafter deleting {victim}");
    print!("{}", verify(m, &pack.metamodel, &ts, &vocab));
}
