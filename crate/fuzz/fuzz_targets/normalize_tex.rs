//! TeX normalization must never panic and must be idempotent.

#![no_main]

use libfuzzer_sys::fuzz_target;
use zbnet::tex::{normalize_tex, TexNormTable};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let table = TexNormTable::default();
        let once = normalize_tex(s, &table);
        assert_eq!(normalize_tex(&once, &table), once);
    }
});
