#![no_main]

use jcolour::io::{parse_edge_list, write_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(g) = parse_edge_list(text) {
        let written = write_edge_list(&g);
        assert_eq!(parse_edge_list(&written).as_ref(), Ok(&g));
        assert_eq!(write_edge_list(&parse_edge_list(&written).unwrap()), written);
    }
});
