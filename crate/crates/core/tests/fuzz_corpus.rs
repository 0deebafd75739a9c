//! Replays the checked-in fuzz corpus through the parsers on stable, with
//! the same invariants the fuzz targets assert.

use std::fs;
use std::path::PathBuf;

use qpke_core::experiment::{ExperimentReport, RunConfig};
use qpke_core::keys::PrivateKey;
use qpke_core::scheme::{Bit, Codeword};

fn corpus(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut seeds: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let text = fs::read_to_string(&path).unwrap();
            (path, text)
        })
        .collect();
    seeds.sort();
    assert!(!seeds.is_empty(), "empty corpus for {target}");
    seeds
}

#[test]
fn private_key_seeds() {
    let mut parsed = 0;
    for (_, text) in corpus("private_key") {
        if let Ok(key) = text.parse::<PrivateKey>() {
            assert_eq!(key.to_string(), text);
            if let Some(index) = key.index() {
                assert_eq!(PrivateKey::from_index(index, key.len()).unwrap(), key);
            }
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn codeword_seeds() {
    for (path, text) in corpus("codeword") {
        match text.parse::<Codeword>() {
            Ok(w) => {
                let ones = text.bytes().filter(|&b| b == b'1').count();
                assert_eq!(w.to_string(), text);
                assert_eq!(w.parity(), Bit::from_bool(ones % 2 == 1));
            }
            Err(_) => assert!(text.bytes().any(|b| b != b'0' && b != b'1'), "{}", path.display()),
        }
    }
}

#[test]
fn run_config_seeds() {
    let mut accepted = 0;
    for (_, text) in corpus("run_config") {
        if let Ok(config) = RunConfig::from_json(&text) {
            let again = serde_json::to_string(&config).unwrap();
            assert_eq!(RunConfig::from_json(&again).unwrap(), config);
            accepted += 1;
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn report_seeds() {
    for (path, text) in corpus("report") {
        let report = ExperimentReport::from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        report.to_csv().unwrap();
        assert!(ExperimentReport::from_json(&report.to_json()).is_ok());
    }
}
