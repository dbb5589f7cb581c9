#![no_main]

use eigenlogic::formula::parse;
use eigenlogic::truthtable::truth_vector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(f) = parse(text) else { return };
    let printed = f.to_string();
    let back = parse(&printed).expect("formatted formula parses");
    assert_eq!(back, f);
    assert_eq!(back.to_string(), printed);
    let order = f.variables();
    if order.len() <= 10 {
        assert_eq!(
            truth_vector(&f, &order).ok(),
            truth_vector(&back, &order).ok()
        );
    }
});
