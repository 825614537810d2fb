#![no_main]

use coxtile::coxeter::CoxeterType;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = text.parse::<CoxeterType>() {
        assert_eq!(t.to_string().parse::<CoxeterType>().unwrap(), t);
    }
});
