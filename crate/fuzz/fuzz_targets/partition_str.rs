#![no_main]

use libfuzzer_sys::fuzz_target;
use supercat::noncrossing::{is_noncrossing, phi, phi_inverse, SignedBlockPartition};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<SignedBlockPartition>() {
        assert_eq!(p.to_string().parse::<SignedBlockPartition>().unwrap(), p);
        if p.n() <= 12 && is_noncrossing(&p) {
            assert_eq!(phi_inverse(&phi(&p)).unwrap(), p);
        }
    }
});
