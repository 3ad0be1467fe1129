#![no_main]

use libfuzzer_sys::fuzz_target;
use dialab::parse::{parse_pointed_word, parse_word};

fuzz_target!(|data: &[u8]| {
    let s = String::from_utf8_lossy(data);
    let _ = parse_word(&s);
    let _ = parse_pointed_word(&s);
});
