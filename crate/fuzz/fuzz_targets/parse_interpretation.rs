#![no_main]

use eigenlogic::truthtable::Interpretation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(itp) = text.parse::<Interpretation>() else {
        return;
    };
    if itp.arity() <= 30 {
        assert_eq!(
            Interpretation::from_row(itp.arity(), itp.row_index()).unwrap(),
            itp
        );
    }
});
