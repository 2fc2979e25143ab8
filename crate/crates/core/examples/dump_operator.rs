//! Dumps a deformed creation operator as a row-major JSON matrix, for
//! cross-checking against an independent implementation.
//!
//!     cargo run -p qweyl --example dump_operator -- 1.2 6

use qweyl::deform::sl2_weyl_map;
use qweyl::{FockSpace, QParam};

fn main() {
    let mut args = std::env::args().skip(1);
    let q: f64 = args.next().as_deref().unwrap_or("1.2").parse().expect("q");
    let cutoff: u32 = args.next().as_deref().unwrap_or("6").parse().expect("cutoff");

    let space = FockSpace::bose(2, cutoff).expect("space");
    let p = QParam::from_q(q).expect("q > 0");
    let gs = sl2_weyl_map(space, p).expect("two-mode bosonic map");
    let dump = gs.creator(0).to_dump();
    println!("{}", serde_json::to_string(&dump).expect("serializable"));
}
