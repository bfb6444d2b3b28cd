#![no_main]

use libfuzzer_sys::fuzz_target;

const HEX: &str = "surface 2\nvertices 1\narrow l1 1 1 1 0\narrow l2 1 1 0 1\narrow l3 1 1 -1 -1\nface ccw l1 l2 l3\nface cw l1 l3 l2\n";

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 14 {
        return;
    }
    let quiver = ghorkit::dqif::parse_dqif(HEX).expect("fixture parses");
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(spec) = ghorkit::modules::parse_module_spec(&quiver, text) {
            let table = ghorkit::matchings::build_label_table(&quiver, None).unwrap();
            let _ = ghorkit::modules::validate_simple_module(&quiver, &table, &spec, 3);
        }
    }
});
