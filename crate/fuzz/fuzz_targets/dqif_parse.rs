#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 16 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(quiver) = ghorkit::dqif::parse_dqif(text) {
            // accepted input must round-trip through the canonical form
            let canonical = ghorkit::dqif::serialize_dqif(&quiver);
            let reparsed = ghorkit::dqif::parse_dqif(&canonical).expect("canonical form parses");
            assert_eq!(ghorkit::dqif::serialize_dqif(&reparsed), canonical);
            // the validator must never panic, whatever it concludes
            let _ = quiver.validate();
        }
    }
});
