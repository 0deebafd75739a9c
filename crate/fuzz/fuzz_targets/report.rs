#![no_main]

use libfuzzer_sys::fuzz_target;
use qpke_core::experiment::ExperimentReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = ExperimentReport::from_json(text) {
        let _ = report.to_csv();
        assert!(ExperimentReport::from_json(&report.to_json()).is_ok());
    }
});
