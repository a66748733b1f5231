//! Laplacian perfect state transfer between the twin copies of each vertex in
//! `B_2(G)`, confirmed on the walk at the reported time.

use lpstlab::graph::{blow_up, catalog};
use lpstlab::spectra::{laplacian_spectrum, support};
use lpstlab::transfer::lpst_blowup2;
use lpstlab::walk::fidelity;

fn main() {
    for (family, g) in catalog() {
        let sd = laplacian_spectrum(&g).unwrap();
        let blown = laplacian_spectrum(&blow_up(&g, 2).unwrap()).unwrap();
        let order = g.vertex_count();
        for u in 0..order {
            let v = lpst_blowup2(&support(&sd, u).unwrap(), g.degree(u)).unwrap();
            if let Some(tau) = v.time() {
                let f = fidelity(&blown, u, order + u, tau);
                println!("{family:<22} u={u}  τ = {tau:.6}  fidelity {f:.12}");
            }
        }
    }
}
