#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(f) = eigenlogic::formula::parse(text) {
            assert!(f.validate().is_ok());
        }
    }
});
