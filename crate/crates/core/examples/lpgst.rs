//! Pretty good state transfer between twin copies in `B_2(G)`, with the
//! certificate behind each verdict printed as JSON. Path and double-star
//! supports with irrational members go to their dedicated decision rules.
//!
//! cargo run --example lpgst -- 'double-star(2,4)'

use lpstlab::graph::{make_family, Family};
use lpstlab::spectra::laplacian_spectrum;
use lpstlab::transfer::{analyze_vertex, Question};

fn main() {
    let family: Family = std::env::args().nth(1).as_deref().unwrap_or("path(4)").parse().expect("family expression");
    let g = make_family(&family).unwrap();
    let sd = laplacian_spectrum(&g).unwrap();
    for u in 0..g.vertex_count() {
        for v in analyze_vertex(&g, &sd, 2, u).unwrap() {
            if matches!(v.question, Question::Lpst | Question::Lpgst) {
                println!("{family} u={u} {:?}: {:?}", v.question, v.answer);
                println!("  {}", serde_json::to_string(&v.certificate).unwrap());
            }
        }
    }
}
