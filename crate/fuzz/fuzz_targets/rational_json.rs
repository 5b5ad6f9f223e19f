#![no_main]

use libfuzzer_sys::fuzz_target;
use supercat::RationalForm;

fuzz_target!(|data: &[u8]| {
    if let Ok(r) = serde_json::from_slice::<RationalForm>(data) {
        assert!(!r.den().is_zero());
        assert!(r.rat_equal(&r));
        let text = serde_json::to_string(&r).unwrap();
        let back: RationalForm = serde_json::from_str(&text).unwrap();
        assert!(back.rat_equal(&r));
    }
});
