//! Build `B_n(G)`, list its twin blocks and print the edge list.
//!
//! cargo run --example blowup -- 'star(3)' 2

use lpstlab::graph::{blow_up, blowup_coords, make_family, twin_sets, write_edge_list, Family};

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("star(3)").parse().expect("family expression");
    let n: usize = args.next().map(|s| s.parse().expect("blow-up order")).unwrap_or(2);

    let g = make_family(&family).unwrap();
    let b = blow_up(&g, n).unwrap();
    println!("{family}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("B_{n}: {} vertices, {} edges", b.vertex_count(), b.edge_count());

    for block in twin_sets(&b) {
        let coords: Vec<String> = block
            .vertices
            .iter()
            .map(|&x| {
                let (j, v) = blowup_coords(x, g.vertex_count());
                format!("({j},{v})")
            })
            .collect();
        println!("  {:?} block: {}", block.kind, coords.join(" "));
    }
    print!("{}", write_edge_list(&b));
}
