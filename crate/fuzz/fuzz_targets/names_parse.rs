#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 14 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = ghorkit::matchings::parse_names(text);
    }
});
