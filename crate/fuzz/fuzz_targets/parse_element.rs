#![no_main]

use std::sync::OnceLock;

use coxtile::coxeter::{build_system, CoxeterSystem, CoxeterType};
use coxtile::parse::parse_element;
use libfuzzer_sys::fuzz_target;

fn systems() -> &'static [CoxeterSystem] {
    static SYSTEMS: OnceLock<Vec<CoxeterSystem>> = OnceLock::new();
    SYSTEMS.get_or_init(|| {
        [
            CoxeterType::a(3),
            CoxeterType::a(5),
            CoxeterType::d(4),
            CoxeterType::d(6),
        ]
        .into_iter()
        .map(|t| build_system(t).unwrap())
        .collect()
    })
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for sys in systems() {
        if let Ok(e) = parse_element(sys, text) {
            let again = parse_element(sys, &sys.format_element(&e)).unwrap();
            assert_eq!(again, e);
        }
    }
});
