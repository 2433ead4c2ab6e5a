#![no_main]

use libfuzzer_sys::fuzz_target;
use maxpair_core::arith::{cyclotomic_value, decode_cache};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(entries) = decode_cache(text) {
        for ((q, d), f) in entries {
            assert_eq!(f.value(), cyclotomic_value(q, d));
        }
    }
});
