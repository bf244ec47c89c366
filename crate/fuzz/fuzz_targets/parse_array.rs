#![no_main]

use libfuzzer_sys::fuzz_target;
use qdrg::parse_array;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(ia) = parse_array(text) {
        assert_eq!(parse_array(&ia.to_string()).unwrap(), ia);
        // derived parameters must not panic on anything the parser accepts
        let _ = ia.derived();
        let _ = qdrg::feasibility::feasibility_check(&ia);
    }
});
