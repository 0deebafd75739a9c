#![no_main]

use libfuzzer_sys::fuzz_target;
use qpke_core::scheme::{Bit, Codeword};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(w) = text.parse::<Codeword>() {
        assert_eq!(w.to_string(), text);
        let ones = text.bytes().filter(|&b| b == b'1').count();
        assert_eq!(w.weight(), ones);
        assert_eq!(w.parity(), Bit::from_bool(ones % 2 == 1));
    }
});
