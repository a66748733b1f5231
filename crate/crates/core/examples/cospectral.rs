//! Strong cospectrality of twin copies in `B_n(G)`: the support test against
//! the projection comparison on the assembled blow-up.
//!
//! cargo run --example cospectral -- 3

use lpstlab::graph::{blow_up, catalog};
use lpstlab::spectra::{laplacian_spectrum, support};
use lpstlab::transfer::{strong_cospectrality_blowup, strong_cospectrality_numeric};

fn main() {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().expect("blow-up order")).unwrap_or(2);
    let mut disagreements = 0;
    for (family, g) in catalog().into_iter().filter(|(_, g)| g.vertex_count() <= 6) {
        let sd = laplacian_spectrum(&g).unwrap();
        let blown = laplacian_spectrum(&blow_up(&g, n).unwrap()).unwrap();
        let order = g.vertex_count();
        for u in 0..order {
            let analytic = strong_cospectrality_blowup(&support(&sd, u).unwrap(), g.degree(u), n).unwrap();
            let numeric = strong_cospectrality_numeric(&blown, u, order + u).unwrap();
            let mark = if analytic.answer == numeric.answer { "" } else { "  <-- differs" };
            disagreements += !mark.is_empty() as usize;
            println!("{family:<22} u={u}  analytic {:?}  numeric {:?}{mark}", analytic.answer, numeric.answer);
        }
    }
    println!("{disagreements} disagreement(s)");
}
