#![no_main]

use libfuzzer_sys::fuzz_target;
use maxpair_core::atlas::parse_structure;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(expr) = parse_structure(text) {
        let rendered = expr.render();
        let again = parse_structure(&rendered).expect("rendered form reparses");
        assert_eq!(again.order(), expr.order());
    }
});
