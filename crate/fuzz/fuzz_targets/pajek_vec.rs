//! The Pajek vector reader must never panic.

#![no_main]

use libfuzzer_sys::fuzz_target;
use zbnet::pajek::read_vec_string;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = read_vec_string(s);
    }
});
