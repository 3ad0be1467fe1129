#![no_main]

use libfuzzer_sys::fuzz_target;
use dialab::Permutation;

fuzz_target!(|data: &[u8]| {
    let s = String::from_utf8_lossy(data);
    if let Ok(p) = s.parse::<Permutation>() {
        assert_eq!(p.to_string().parse::<Permutation>().ok(), Some(p));
    }
});
