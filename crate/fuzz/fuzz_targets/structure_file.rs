#![no_main]

use libfuzzer_sys::fuzz_target;
use nrgrade::io::{parse_structure, StructureFile};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(loaded) = parse_structure(text) {
        let file = StructureFile::from_graded(&loaded.name, &loaded.gnr);
        let again = parse_structure(&file.to_json()).expect("saved structure reloads");
        assert_eq!(again.gnr, loaded.gnr);
        assert!(!again.renumbered);
    }
});
