#![no_main]

use libfuzzer_sys::fuzz_target;
use maxpair_core::arith::FactoredInt;

fuzz_target!(|data: &[u8]| {
    if data.len() > 256 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = text.parse::<FactoredInt>() {
        let again: FactoredInt = f.to_string().parse().expect("display form reparses");
        assert_eq!(again, f);
    }
});
