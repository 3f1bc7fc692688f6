//! The record parser must be total: any byte stream yields records plus
//! warnings, never a panic, and re-serializing then re-parsing is stable.

#![no_main]

use libfuzzer_sys::fuzz_target;
use zbnet::record::{parse_records, write_records, Encoding};
use zbnet::tex::TexNormTable;

fuzz_target!(|data: &[u8]| {
    let norm = TexNormTable::default();
    for encoding in [Encoding::Utf8, Encoding::Latin1] {
        let outcome = parse_records(data, encoding, &norm);
        let canonical = write_records(&outcome.records);
        let again = parse_records(canonical.as_bytes(), Encoding::Utf8, &norm);
        assert_eq!(outcome.records, again.records);
    }
});
