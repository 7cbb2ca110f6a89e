#![no_main]

use coxeter_rh_cli::{parse_input, Format};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(doc) = parse_input(data, Format::Json) {
        let _ = doc.resolve();
    }
});
