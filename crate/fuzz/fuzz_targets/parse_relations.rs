#![no_main]

use std::sync::OnceLock;

use coxtile::coxeter::{build_system, CoxeterSystem, CoxeterType};
use coxtile::parse::parse_relations;
use libfuzzer_sys::fuzz_target;

fn system() -> &'static CoxeterSystem {
    static SYSTEM: OnceLock<CoxeterSystem> = OnceLock::new();
    SYSTEM.get_or_init(|| build_system(CoxeterType::d(5)).unwrap())
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let sys = system();
    if let Ok(rels) = parse_relations(sys, text) {
        if !rels.is_empty() {
            assert_eq!(parse_relations(sys, &rels.to_string()).unwrap(), rels);
        }
    }
});
