#![no_main]

use eigenlogic::elective::MultilinearPoly;
use eigenlogic::truthtable::TruthVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(tv) = text.parse::<TruthVector>() else {
        return;
    };
    assert_eq!(
        TruthVector::from_index(tv.arity(), &tv.function_index()).unwrap(),
        tv
    );
    if tv.arity() <= 12 {
        let poly = MultilinearPoly::from_truth_vector(&tv).unwrap();
        assert_eq!(poly.to_truth_vector().unwrap(), tv);
    }
});
