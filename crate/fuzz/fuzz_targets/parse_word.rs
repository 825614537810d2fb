#![no_main]

use coxtile::words::Word;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = text.parse::<Word>() {
        assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }
});
