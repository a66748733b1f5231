//! Transfer in blow-ups of joins and of products, decided from the factors.

use lpstlab::graph::{make_family, Family, Graph};
use lpstlab::spectra::{adjacency, decompose, laplacian_spectrum, support};
use lpstlab::transfer::{lpst_cartesian_factors, lpst_direct_factors, lpst_join, RegularFactor};

fn family(f: Family) -> Graph {
    make_family(&f).unwrap()
}

fn main() {
    // G ∨ O_m with G = C_4, P_3 and K_1
    for (g, m) in [(family(Family::Cycle(4)), 1), (family(Family::Path(3)), 2), (family(Family::Complete(1)), 3)] {
        let sd = laplacian_spectrum(&g).unwrap();
        for u in 0..g.vertex_count() {
            let sup = support(&sd, u).unwrap();
            let v = lpst_join(&sup, g.degree(u), g.vertex_count(), m, g.is_connected(), g.degree(u) == 0).unwrap();
            println!("order {} join O_{m}, u={u}: {:?} {:?}", g.vertex_count(), v.answer, v.time());
        }
    }

    let k2 = family(Family::Complete(2));
    let sk2 = laplacian_spectrum(&k2).unwrap();
    let cube = [RegularFactor::of(&k2, &sk2); 3];
    let v = lpst_cartesian_factors(&cube).unwrap();
    println!("K_2 □ K_2 □ K_2: {:?} at {:?}", v.answer, v.time());

    let (k4, k6) = (family(Family::Complete(4)), family(Family::Complete(6)));
    let (a4, a6) = (decompose(&adjacency(&k4)).unwrap(), decompose(&adjacency(&k6)).unwrap());
    let v = lpst_direct_factors(&[RegularFactor::of(&k4, &a4), RegularFactor::of(&k6, &a6)]).unwrap();
    println!("K_4 × K_6: {:?} at {:?}", v.answer, v.time());
}
