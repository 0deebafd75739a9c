#![no_main]

use libfuzzer_sys::fuzz_target;
use qpke_core::keys::PrivateKey;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(key) = text.parse::<PrivateKey>() {
        assert_eq!(key.to_string(), text);
        assert_eq!(key.len(), text.len());
        if let Some(index) = key.index() {
            assert_eq!(PrivateKey::from_index(index, key.len()).unwrap(), key);
        }
    }
});
