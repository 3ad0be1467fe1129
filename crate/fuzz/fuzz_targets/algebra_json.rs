#![no_main]

use libfuzzer_sys::fuzz_target;
use dialab::finalg::{algebra_from_json, algebra_from_json_deferred};

fuzz_target!(|data: &[u8]| {
    let s = String::from_utf8_lossy(data);
    let _ = algebra_from_json_deferred(&s);
    let _ = algebra_from_json(&s);
});
