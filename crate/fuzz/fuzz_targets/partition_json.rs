#![no_main]

use libfuzzer_sys::fuzz_target;
use supercat::noncrossing::SignedBlockPartition;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<SignedBlockPartition>(data) {
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            serde_json::from_str::<SignedBlockPartition>(&text).unwrap(),
            p
        );
    }
});
