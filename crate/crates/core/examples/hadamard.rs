//! Which small graphs have a Laplacian diagonalised by a Hadamard matrix.

use lpstlab::graph::catalog;
use lpstlab::spectra::{is_hadamard_diagonalizable, laplacian_spectrum, HadamardCheck};

fn main() {
    for (family, g) in catalog() {
        let sd = laplacian_spectrum(&g).unwrap();
        match is_hadamard_diagonalizable(&g, &sd) {
            HadamardCheck::Diagonalizable { columns } => {
                println!("{family:<22} yes");
                for c in columns {
                    println!("    {}", c.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect::<String>());
                }
            }
            HadamardCheck::NotDiagonalizable { reason } => println!("{family:<22} no: {reason}"),
            HadamardCheck::ScreenPassedUnverified => println!("{family:<22} undecided"),
        }
    }
}
