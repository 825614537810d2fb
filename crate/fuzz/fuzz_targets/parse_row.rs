#![no_main]

use coxtile::embeddings::TableRow;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(row) = text.parse::<TableRow>() {
        assert_eq!(row.to_string().parse::<TableRow>().unwrap(), row);
    }
});
