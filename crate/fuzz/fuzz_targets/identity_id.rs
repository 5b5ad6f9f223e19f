#![no_main]

use libfuzzer_sys::fuzz_target;
use supercat::identities::IdentityId;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(id) = text.parse::<IdentityId>() {
        assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        assert_eq!(id.params().len(), id.arity());
    }
});
