#![no_main]

use libfuzzer_sys::fuzz_target;
use qdrg::atlas::parse_adjacency_text;
use qdrg::report::parse_fixture;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_adjacency_text(text) {
        assert_eq!(parse_adjacency_text(&g.to_adjacency_text()).unwrap(), g);
        if g.n() <= 64 {
            let _ = qdrg::atlas::verify_drg(&g);
        }
    }
    let _ = parse_fixture("fuzz", text);
});
