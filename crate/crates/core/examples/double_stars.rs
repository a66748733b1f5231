//! Pretty good state transfer in `B_2(S_{k,l})` at each kind of vertex.
//!
//! cargo run --example double_stars -- 10

use lpstlab::transfer::{lpgst_double_star, Certificate, DoubleStarSite};

fn main() {
    let max: u64 = std::env::args().nth(1).map(|s| s.parse().expect("maximum leaf count")).unwrap_or(6);
    let sites = [DoubleStarSite::HubKSide, DoubleStarSite::HubLSide, DoubleStarSite::LeafOnKSide, DoubleStarSite::LeafOnLSide];
    println!("k l   hub_k hub_l leaf_k leaf_l");
    for k in 1..=max {
        for l in k..=max {
            let cells: Vec<&str> =
                sites.iter().map(|&s| if lpgst_double_star(k, l, s).unwrap().is_yes() { "yes" } else { "no" }).collect();
            println!("{k} {l}   {:<5} {:<5} {:<6} {}", cells[0], cells[1], cells[2], cells[3]);
        }
    }
    let v = lpgst_double_star(2, 3, DoubleStarSite::HubKSide).unwrap();
    if let Certificate::DoubleStar { polynomial, factorization, reason, .. } = v.certificate {
        println!("S_{{2,3}} hub: p = {polynomial:?}, {factorization:?}: {reason}");
    }
}
