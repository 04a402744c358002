#![no_main]

use jcolour::{inverse_colouring, Colouring};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(c) = serde_json::from_slice::<Colouring>(data) {
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<Colouring>(&text).unwrap(), c);
        assert_eq!(inverse_colouring(&inverse_colouring(&c)), c);
    }
});
