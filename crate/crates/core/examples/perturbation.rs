//! Adding a matching inside a twin block of `B_4(K_3)` creates perfect state
//! transfer between the matched copies; the walk confirms it.

use lpstlab::graph::{add_matching, blow_up, blowup_index, make_family, Family, Matching};
use lpstlab::spectra::laplacian_spectrum;
use lpstlab::transfer::perturbation_plan;
use lpstlab::walk::fidelity;

fn main() {
    let g = make_family(&Family::Complete(3)).unwrap();
    let (n, order) = (4, g.vertex_count());
    let pairs = [(blowup_index(0, 0, order), blowup_index(2, 0, order)), (blowup_index(1, 0, order), blowup_index(3, 0, order))];
    let matching = Matching::new(pairs).unwrap();

    let v = perturbation_plan(&g, n, &[vec![0]], &matching).unwrap();
    println!("{}", serde_json::to_string_pretty(&v).unwrap());

    let perturbed = add_matching(&blow_up(&g, n).unwrap(), &matching).unwrap();
    let sd = laplacian_spectrum(&perturbed).unwrap();
    let tau = v.time().unwrap();
    for (a, b) in pairs {
        println!("fidelity {a} -> {b} at τ = {tau:.6}: {:.12}", fidelity(&sd, a, b, tau));
    }
}
