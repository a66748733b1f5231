//! Every analytic verdict for the twin copies in `B_2(G)` checked against the
//! dense walk, over the built-in catalogue.

use lpstlab::cli::{verify_vertex, CheckStatus};
use lpstlab::graph::{blow_up, catalog};
use lpstlab::spectra::laplacian_spectrum;

fn main() {
    let (mut pairs, mut failures) = (0, 0);
    for (family, g) in catalog() {
        let sd = laplacian_spectrum(&g).unwrap();
        let blown = laplacian_spectrum(&blow_up(&g, 2).unwrap()).unwrap();
        for u in 0..g.vertex_count() {
            let report = verify_vertex(&family.to_string(), &g, &sd, &blown, 2, u).unwrap();
            pairs += 1;
            if !report.pass {
                failures += 1;
                let bad: Vec<_> = report.checks.iter().filter(|c| c.status == CheckStatus::Disagree).collect();
                println!("{family} u={u}: {bad:?}");
            }
        }
    }
    println!("{pairs} pairs checked, {failures} disagreement(s)");
}
