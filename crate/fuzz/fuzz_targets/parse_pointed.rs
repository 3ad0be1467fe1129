#![no_main]

use libfuzzer_sys::fuzz_target;
use dialab::parse::parse_pointed;

fuzz_target!(|data: &[u8]| {
    let s = String::from_utf8_lossy(data);
    if let Ok(c) = parse_pointed(&s) {
        assert_eq!(parse_pointed(&c.to_string()).ok(), Some(c));
    }
});
