//! Laplacian eigenspaces, vertex supports, and the blow-up spectrum read off
//! the base graph.
//!
//! cargo run --example spectra -- 'double-star(1,2)'

use lpstlab::graph::{make_family, Family};
use lpstlab::spectra::{blowup_spectral, is_laplacian_integral, laplacian, laplacian_spectrum, support, support_blowup};

fn main() {
    let family: Family = std::env::args().nth(1).as_deref().unwrap_or("double-star(1,2)").parse().expect("family expression");
    let g = make_family(&family).unwrap();
    let sd = laplacian_spectrum(&g).unwrap();

    println!("{family}, Laplacian integral: {}", is_laplacian_integral(&sd));
    for e in &sd.eigenspaces {
        println!("  λ = {:>10.6}  mult {}  integer {:?}", e.value, e.multiplicity, e.integer);
    }
    println!(
        "resolution {:.1e}, reconstruction {:.1e}, orthogonality {:.1e}",
        sd.resolution_error(),
        sd.reconstruction_error(&laplacian(&g)),
        sd.orthogonality_error()
    );

    for u in 0..g.vertex_count() {
        let sup = support(&sd, u).unwrap();
        let blown = support_blowup(&sup, g.degree(u), 2);
        let show = |s: &lpstlab::spectra::Support| s.eigenvalues().iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(", ");
        println!("  σ_{u} = {{{}}}   in B_2: {{{}}}", show(&sup), show(&blown));
    }

    let b2 = blowup_spectral(&sd, &g.degrees(), 2).unwrap();
    println!("B_2 spectrum: {:?}", b2.eigenvalues().iter().map(|x| (x * 1e6).round() / 1e6).collect::<Vec<_>>());
}
