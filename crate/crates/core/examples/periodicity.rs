//! Periodicity of vertices in small graphs and in their double blow-ups.

use lpstlab::graph::catalog;
use lpstlab::spectra::{laplacian_spectrum, support, support_blowup};
use lpstlab::transfer::{blowup_period, is_periodic};

fn main() {
    println!("{:<22} {:>3} {:>12} {:>12}", "graph", "u", "period G", "period B_2");
    for (family, g) in catalog() {
        let sd = laplacian_spectrum(&g).unwrap();
        for u in 0..g.vertex_count() {
            let sup = support(&sd, u).unwrap();
            let base = is_periodic(&sup).unwrap();
            let blown = blowup_period(&sup, g.degree(u), 2).unwrap();
            // both routes agree on the blow-up
            assert_eq!(blown.answer, is_periodic(&support_blowup(&sup, g.degree(u), 2)).unwrap().answer);
            let fmt = |p: Option<f64>| p.map_or("-".to_string(), |p| format!("{p:.6}"));
            println!("{:<22} {:>3} {:>12} {:>12}", family.to_string(), u, fmt(base.period()), fmt(blown.period()));
        }
    }
}
