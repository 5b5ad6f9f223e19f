#![no_main]

use libfuzzer_sys::fuzz_target;
use supercat::noncrossing::{is_noncrossing, phi, phi_inverse, rank, Step, TwoPath};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = text.parse::<TwoPath>() {
        assert_eq!(w.to_string().parse::<TwoPath>().unwrap(), w);
        if w.len() <= 64 {
            let p = phi_inverse(&w).unwrap();
            assert!(is_noncrossing(&p));
            assert_eq!(phi(&p), w);
            assert_eq!(rank(&p), w.count(Step::U) + w.count(Step::W));
        }
    }
});
