#![no_main]

use jcolour::io::{parse_dimacs, write_dimacs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(g) = parse_dimacs(text) {
        assert_eq!(parse_dimacs(&write_dimacs(&g)).as_ref(), Ok(&g));
    }
});
