#![no_main]

use libfuzzer_sys::fuzz_target;

const EX: &str = "surface 2\nvertices 3\narrow a 1 1 1 0\narrow b 1 2 0 0\narrow b' 1 2 0 -1\narrow c 2 3 0 1\narrow c' 2 3 1 1\narrow d 3 1 -1 -1\narrow d' 3 1 -1 0\nface ccw b c d a\nface ccw b' c' d'\nface cw b' c d' a\nface cw b c' d\n";

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 12 {
        return;
    }
    let quiver = ghorkit::dqif::parse_dqif(EX).expect("fixture parses");
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = ghorkit::paths::parse_path_literal(&quiver, text) {
            // accepted literals round-trip through display
            let shown = p.display(&quiver);
            let again = ghorkit::paths::parse_path_literal(&quiver, &shown).expect("display parses");
            assert_eq!(p, again);
        }
    }
});
