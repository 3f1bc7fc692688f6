//! The Pajek network reader must reject or accept any input without
//! panicking; accepted networks must survive a write/read round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use zbnet::pajek::{read_net_string, write_net_string};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(net) = read_net_string(s) {
            let text = write_net_string(&net);
            read_net_string(&text).expect("writer output is always readable");
        }
    }
});
