use std::path::PathBuf;

use nrgrade::claims::{replay, Counterexample};
use nrgrade::io::parse_structure;

fn seeds(target: &str) -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    out.sort();
    out
}

#[test]
fn structure_seeds_load() {
    let files = seeds("structure_file");
    assert!(!files.is_empty());
    for f in files {
        parse_structure(&std::fs::read_to_string(&f).unwrap()).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
    }
}

#[test]
fn counterexample_seeds_replay() {
    let files = seeds("counterexample_replay");
    assert!(!files.is_empty());
    for f in files {
        let cx: Counterexample = serde_json::from_slice(&std::fs::read(&f).unwrap()).unwrap();
        assert_eq!(replay(&cx), Ok(true), "{}", f.display());
    }
}
