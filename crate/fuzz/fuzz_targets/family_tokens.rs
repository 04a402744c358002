#![no_main]

use jcolour::Family;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if let Ok(f) = Family::from_tokens(&tokens) {
        let shown = f.to_string();
        let again: Vec<&str> = shown.split_whitespace().collect();
        assert_eq!(Family::from_tokens(&again).as_ref(), Ok(&f));
        let g = f.generate().unwrap();
        let _ = f.oracle();
        assert!(g.order() <= 64);
    }
});
