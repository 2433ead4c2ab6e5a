#![no_main]

use libfuzzer_sys::fuzz_target;
use maxpair_cli::Catalog;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = Catalog::rows_from_csv(text);
});
