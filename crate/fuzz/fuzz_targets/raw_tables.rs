#![no_main]

use libfuzzer_sys::fuzz_target;
use nrgrade::ideal::enumerate_ideals;
use nrgrade::{FiniteMonoid, FiniteNearRing, GradedNearRing};

// First byte is the order (1..=6); then the addition and multiplication
// tables, one byte per entry reduced mod the order.
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let n = (n as usize % 6) + 1;
    if rest.len() < 2 * n * n {
        return;
    }
    let table = |off: usize| -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| rest[off + a * n + b] as usize % n).collect()).collect()
    };
    let (add, mul) = (table(0), table(n * n));
    if let Ok(ring) = FiniteNearRing::new(&add, &mul, 0) {
        let g = GradedNearRing::trivial(ring, FiniteMonoid::trivial()).expect("trivial grading");
        let ideals = enumerate_ideals(&g, false, 64).expect("small order");
        assert!(ideals.iter().all(|i| i.flags.is_ideal));
    }
});
