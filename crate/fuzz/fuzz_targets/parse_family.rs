#![no_main]

use coxeter_rh_cli::families::family_document;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(name) = std::str::from_utf8(data) {
        if let Ok(doc) = family_document(name, None) {
            let _ = doc.resolve();
        }
    }
});
