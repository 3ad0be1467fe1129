#![no_main]

use libfuzzer_sys::fuzz_target;
use dialab::parse::{parse_dend, parse_dend_term};

fuzz_target!(|data: &[u8]| {
    let s = String::from_utf8_lossy(data);
    let _ = parse_dend_term(&s);
    if let Ok(c) = parse_dend(&s) {
        assert_eq!(parse_dend(&c.to_string()).ok(), Some(c));
    }
});
