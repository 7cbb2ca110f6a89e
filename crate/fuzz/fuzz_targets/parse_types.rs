#![no_main]

use coxeter_rh::chain4;
use coxeter_rh_cli::{parse_subset, parse_types};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let m = chain4(7).unwrap();
    if let Ok(types) = parse_types(&m, text) {
        let _ = coxeter_rh::relhyp::verify_family(&m, &types);
    }
    let _ = parse_subset(&m, text);
});
