//! Which vertices of `P_n` give pretty good state transfer between their two
//! copies in `B_2(P_n)`.
//!
//! cargo run --example paths -- 24

use lpstlab::transfer::{lpgst_path, path_support_indices, Certificate};

fn main() {
    let max: usize = std::env::args().nth(1).map(|s| s.parse().expect("maximum order")).unwrap_or(16);
    for n in 2..=max {
        let row: String = (1..=n).map(|u| if lpgst_path(n, u).unwrap().is_yes() { 'Y' } else { '.' }).collect();
        println!("P_{n:<3} {row}");
    }
    let v = lpgst_path(5, 3).unwrap();
    if let Certificate::Path { branch, evidence, .. } = &v.certificate {
        println!("P_5 centre: support indices {:?}, {branch:?}, {evidence:?}", path_support_indices(5, 3));
    }
}
