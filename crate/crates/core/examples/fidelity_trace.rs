//! Sample the fidelity between two vertices over time, write it as CSV and
//! search for the best time.
//!
//! cargo run --example fidelity_trace -- 'path(4)' 2 0 4 trace.csv

use std::f64::consts::PI;
use std::fs::File;
use std::io::BufWriter;

use lpstlab::graph::{blow_up, make_family, Family};
use lpstlab::spectra::laplacian_spectrum;
use lpstlab::walk::{fidelity_trace, max_fidelity_search};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family: Family = args.first().map_or("star(3)", String::as_str).parse().expect("family expression");
    let n: usize = args.get(1).map_or(2, |s| s.parse().expect("blow-up order"));
    let a: usize = args.get(2).map_or(0, |s| s.parse().expect("source"));
    let g = make_family(&family).unwrap();
    let b: usize = args.get(3).map_or(g.vertex_count(), |s| s.parse().expect("target"));

    let sd = laplacian_spectrum(&blow_up(&g, n).unwrap()).unwrap();
    let trace = fidelity_trace(&sd, a, b, 2.0 * PI, 1024);
    let (i, peak) = trace.peak().unwrap();
    println!("{family}, B_{n}: sampled peak {peak:.9} at t = {:.6}", trace.times[i]);
    let (t, f) = max_fidelity_search(&sd, a, b, 2.0 * PI, 256, 200);
    println!("refined: {f:.12} at t = {t:.9}");

    match args.get(4) {
        Some(path) => trace.write_csv(BufWriter::new(File::create(path).unwrap())).unwrap(),
        None => print!("{}", trace.to_csv().lines().take(6).map(|l| format!("{l}\n")).collect::<String>()),
    }
}
