#![no_main]

use libfuzzer_sys::fuzz_target;
use nrgrade::claims::{replay, Counterexample};

fuzz_target!(|data: &[u8]| {
    if let Ok(cx) = serde_json::from_slice::<Counterexample>(data) {
        if cx.structures.iter().all(|s| s.order <= 24) {
            let _ = replay(&cx);
        }
    }
});
