#![no_main]

use libfuzzer_sys::fuzz_target;
use supercat::identities::parse_range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_range(text) {
        let again = parse_range(&format!("{}..{}", r.start(), r.end())).unwrap();
        assert_eq!(again, r);
    }
});
