#![no_main]

use coxeter_rh_cli::{parse_input, run, Command, Format};
use libfuzzer_sys::fuzz_target;

// Small instances only, so each input runs every command quickly.
fuzz_target!(|data: &[u8]| {
    let Ok(doc) = parse_input(data, Format::sniff(data)) else {
        return;
    };
    match doc.resolve() {
        Ok(r) if r.matrix.n() <= 8 => {}
        _ => return,
    }
    for cmd in [
        Command::Classify {
            subset: None,
            min_rank: 1,
        },
        Command::Moussong,
        Command::RelhypMinimal,
        Command::Decide,
        Command::IsolatedFlats,
        Command::Racg { min_pairs: 2 },
        Command::Dot,
    ] {
        let _ = run(&cmd, &doc);
    }
});
