use serde::Serialize;

use super::{laplacian_int, SpectralData};
use crate::graph::Graph;

/// Largest order searched exhaustively.
pub const HADAMARD_SEARCH_MAX_ORDER: usize = 12;
const NODE_BUDGET: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum HadamardCheck {
    /// Columns of a ±1 matrix `H` with `H Hᵀ = |V| I` and `Hᵀ L H` diagonal.
    Diagonalizable { columns: Vec<Vec<i8>> },
    NotDiagonalizable { reason: String },
    /// Every necessary condition holds but the order is too large (or the
    /// search budget ran out) to settle the question.
    ScreenPassedUnverified,
}

impl HadamardCheck {
    pub fn is_diagonalizable(&self) -> bool {
        matches!(self, HadamardCheck::Diagonalizable { .. })
    }
}

/// Decides whether `L(g)` is diagonalised by a Hadamard matrix.
///
/// The screen rejects non-regular graphs, spectra with a non-even or
/// non-integer eigenvalue, and orders other than 1, 2 or a multiple of 4.
/// Graphs that pass and have at most 12 vertices are settled by searching the
/// ±1 eigenvectors of each eigenspace for an orthogonal basis.
pub fn is_hadamard_diagonalizable(g: &Graph, sd: &SpectralData) -> HadamardCheck {
    let n = g.vertex_count();
    let fail = |reason: &str| HadamardCheck::NotDiagonalizable { reason: reason.to_string() };
    if g.regular_degree().is_none() {
        return fail("graph is not regular");
    }
    if sd.eigenspaces.iter().any(|e| e.integer.is_none_or(|k| k % 2 != 0)) {
        return fail("spectrum is not made of even integers");
    }
    if !(n <= 2 || n.is_multiple_of(4)) {
        return fail("order is not 1, 2 or a multiple of 4");
    }
    if n > HADAMARD_SEARCH_MAX_ORDER {
        return HadamardCheck::ScreenPassedUnverified;
    }

    let l = laplacian_int(g);
    // ±1 eigenvectors with a leading +1, grouped by eigenvalue
    let mut by_value: std::collections::BTreeMap<i64, Vec<Vec<i8>>> = Default::default();
    for mask in 0u32..(1 << (n - 1)) {
        let x: Vec<i8> = (0..n).map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { -1 } else { 1 }).collect();
        let lx: Vec<i64> = l.iter().map(|row| row.iter().zip(&x).map(|(a, &b)| a * b as i64).sum()).collect();
        let lambda = lx[0];
        if lx.iter().zip(&x).all(|(&y, &b)| y == lambda * b as i64) {
            by_value.entry(lambda).or_default().push(x);
        }
    }

    let mut columns = Vec::with_capacity(n);
    for e in &sd.eigenspaces {
        let k = e.integer.expect("screened");
        let candidates = by_value.remove(&k).unwrap_or_default();
        match orthogonal_subset(&candidates, e.multiplicity) {
            Search::Found(idx) => columns.extend(idx.into_iter().map(|i| candidates[i].clone())),
            Search::None => return fail(&format!("eigenvalue {k} has no orthogonal ±1 eigenbasis")),
            Search::BudgetExhausted => return HadamardCheck::ScreenPassedUnverified,
        }
    }
    HadamardCheck::Diagonalizable { columns }
}

enum Search {
    Found(Vec<usize>),
    None,
    BudgetExhausted,
}

/// Finds `target` pairwise orthogonal vectors among `vecs` (clique search on
/// the orthogonality graph with bitset candidate sets).
fn orthogonal_subset(vecs: &[Vec<i8>], target: usize) -> Search {
    let m = vecs.len();
    let words = m.div_ceil(64);
    let dot = |a: &[i8], b: &[i8]| a.iter().zip(b).map(|(&x, &y)| x as i32 * y as i32).sum::<i32>();
    let mut adj = vec![vec![0u64; words]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            if dot(&vecs[i], &vecs[j]) == 0 {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let mut all = vec![0u64; words];
    for i in 0..m {
        all[i / 64] |= 1 << (i % 64);
    }
    let mut chosen = Vec::new();
    let mut budget = NODE_BUDGET;
    match extend(&adj, all, target, &mut chosen, &mut budget) {
        Some(true) => Search::Found(chosen),
        Some(false) => Search::None,
        None => Search::BudgetExhausted,
    }
}

fn extend(adj: &[Vec<u64>], cand: Vec<u64>, target: usize, chosen: &mut Vec<usize>, budget: &mut usize) -> Option<bool> {
    if chosen.len() == target {
        return Some(true);
    }
    let count: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
    if chosen.len() + count < target {
        return Some(false);
    }
    *budget = budget.checked_sub(1)?;
    let mut rest = cand;
    while let Some(i) = first_bit(&rest) {
        rest[i / 64] &= !(1 << (i % 64));
        let next: Vec<u64> = rest.iter().zip(&adj[i]).map(|(a, b)| a & b).collect();
        chosen.push(i);
        if extend(adj, next, target, chosen, budget)? {
            return Some(true);
        }
        chosen.pop();
        let left: usize = rest.iter().map(|w| w.count_ones() as usize).sum();
        if chosen.len() + left < target {
            break;
        }
    }
    Some(false)
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    bits.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}
