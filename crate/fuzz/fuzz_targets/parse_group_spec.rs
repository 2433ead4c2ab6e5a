#![no_main]

use libfuzzer_sys::fuzz_target;
use maxpair_core::classifier::classify;
use maxpair_core::groups::GroupSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = text.parse::<GroupSpec>() {
        let again: GroupSpec = g.to_string().parse().expect("display form reparses");
        assert_eq!(again, g);
        let _ = classify(&g);
    }
});
