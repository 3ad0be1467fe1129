#![no_main]

use libfuzzer_sys::fuzz_target;
use dialab::Tree;

fuzz_target!(|data: &[u8]| {
    let s = String::from_utf8_lossy(data);
    if let Ok(y) = s.parse::<Tree>() {
        assert_eq!(y.to_string().parse::<Tree>().ok(), Some(y));
    }
});
