#![no_main]

use libfuzzer_sys::fuzz_target;
use qdrg::RationalQ;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = text.parse::<RationalQ>() {
        assert_eq!(q.to_string().parse::<RationalQ>().unwrap(), q);
        let _ = q.region();
    }
});
