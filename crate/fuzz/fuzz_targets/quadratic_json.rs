#![no_main]

use libfuzzer_sys::fuzz_target;
use dialab::operads::QuadraticData;

fuzz_target!(|data: &[u8]| {
    let s = String::from_utf8_lossy(data);
    let _ = QuadraticData::from_json(&s);
});
