#![no_main]

use libfuzzer_sys::fuzz_target;
use supercat::LaurentPoly;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<LaurentPoly>(data) {
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&text).unwrap(), p);
        let _ = p.is_palindromic();
    }
});
