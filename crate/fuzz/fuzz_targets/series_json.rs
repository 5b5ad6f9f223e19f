#![no_main]

use libfuzzer_sys::fuzz_target;
use supercat::TruncatedSeries;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = serde_json::from_slice::<TruncatedSeries>(data) {
        assert_eq!(s.coeffs().len(), s.order() + 1);
        let text = serde_json::to_string(&s).unwrap();
        let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
        assert!(back.equals(&s));
    }
});
