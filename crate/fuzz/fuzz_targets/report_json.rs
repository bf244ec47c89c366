#![no_main]

use libfuzzer_sys::fuzz_target;
use qdrg::report::{AnalysisReport, VerifySummary};
use qdrg::{QSpectrum, QValue};

fn round_trip<T>(data: &[u8])
where
    T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug,
{
    if let Ok(v) = serde_json::from_slice::<T>(data) {
        let text = serde_json::to_string(&v).unwrap();
        let back: T = serde_json::from_str(&text).unwrap();
        // NaN-free floats round-trip exactly
        if text == serde_json::to_string(&back).unwrap() {
            return;
        }
        panic!("{v:?} re-serialized differently");
    }
}

fuzz_target!(|data: &[u8]| {
    round_trip::<QValue>(data);
    round_trip::<QSpectrum>(data);
    round_trip::<AnalysisReport>(data);
    round_trip::<VerifySummary>(data);
});
