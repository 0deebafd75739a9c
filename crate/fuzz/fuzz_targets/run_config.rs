#![no_main]

use libfuzzer_sys::fuzz_target;
use qpke_core::experiment::RunConfig;

// Parsing and validation only; running a fuzzed config could be arbitrarily slow.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(config) = RunConfig::from_json(text) {
        let again = serde_json::to_string(&config).expect("config serializes");
        assert_eq!(RunConfig::from_json(&again).expect("round trip"), config);
    }
});
