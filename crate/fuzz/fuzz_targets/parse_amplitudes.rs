#![no_main]

use eigenlogic::state::{parse_amplitudes, InterpretationState};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(amps) = parse_amplitudes(text) else {
        return;
    };
    if amps.len().is_power_of_two() {
        let n = amps.len().trailing_zeros() as usize;
        if let Ok(state) = InterpretationState::from_amplitudes(n, amps) {
            assert!(
                (state.norm_sqr() - 1.0).abs() < 1e-9,
                "norm {}",
                state.norm_sqr()
            );
        }
    }
});
