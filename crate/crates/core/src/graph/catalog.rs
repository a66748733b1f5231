use super::{make_family, Family, Graph};

/// Largest vertex count in [`catalog`].
pub const CATALOG_MAX_ORDER: usize = 8;

/// Small connected test graphs: `K_2..K_5`, `P_2..P_8`, `C_3..C_8`,
/// `Q_1..Q_3`, stars `K_{1,2}..K_{1,7}`, double stars `S_{k,l}` with
/// `k <= l`, `k + l <= 6`, the bowtie `K_1 ∨ (K_2 ⊔ K_2)` and `K_2 □ K_3`.
pub fn catalog() -> Vec<(Family, Graph)> {
    let mut families: Vec<Family> = Vec::new();
    families.extend((2..=5).map(Family::Complete));
    families.extend((2..=8).map(Family::Path));
    families.extend((3..=8).map(Family::Cycle));
    families.extend((1..=3).map(Family::Hypercube));
    families.extend((2..=7).map(Family::Star));
    for k in 1..=3 {
        families.extend((k..=6 - k).map(|l| Family::DoubleStar(k, l)));
    }
    let k = |m| Box::new(Family::Complete(m));
    families.push(Family::Cone(Box::new(Family::Union(k(2), k(2)))));
    families.push(Family::Cartesian(k(2), k(3)));
    families
        .into_iter()
        .map(|f| {
            let g = make_family(&f).expect("catalog families are valid");
            (f, g)
        })
        .collect()
}
