//! Integer kernels of small integer matrices.
//!
//! The kernel `{m ∈ Zᵏ : M m = 0}` is computed by unimodular column
//! operations (column Hermite reduction): the transform `U` satisfies
//! `M U = [H | 0]`, and the columns of `U` that land on zero columns form a
//! basis of the integer kernel.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("row {row} has {len} entries, expected {cols}")]
    Ragged { row: usize, len: usize, cols: usize },
    #[error("integer overflow during column reduction")]
    Overflow,
}

/// Extended gcd on i128: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn combine(x: i128, a: i128, y: i128, b: i128) -> Result<i128, LatticeError> {
    x.checked_mul(a)
        .and_then(|p| y.checked_mul(b).and_then(|q| p.checked_add(q)))
        .ok_or(LatticeError::Overflow)
}

/// Basis of the integer kernel of the `rows.len() × cols` matrix `rows`.
pub fn integer_kernel(rows: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<i64>>, LatticeError> {
    for (row, r) in rows.iter().enumerate() {
        if r.len() != cols {
            return Err(LatticeError::Ragged { row, len: r.len(), cols });
        }
    }
    // Work column-major: col[j] = (M column j, U column j).
    let mut m: Vec<Vec<i128>> = (0..cols).map(|j| rows.iter().map(|r| r[j] as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..cols).map(|j| (0..cols).map(|i| (i == j) as i128).collect()).collect();
    let mut pivot = 0;
    for i in 0..rows.len() {
        if pivot == cols {
            break;
        }
        for j in (pivot + 1)..cols {
            let (x, y) = (m[pivot][i], m[j][i]);
            if y == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(x, y);
            let (xg, yg) = (x / g, y / g);
            for cols_of in [&mut m, &mut u] {
                let (a, b) = (cols_of[pivot].clone(), cols_of[j].clone());
                for k in 0..a.len() {
                    cols_of[pivot][k] = combine(s, a[k], t, b[k])?;
                    cols_of[j][k] = combine(-yg, a[k], xg, b[k])?;
                }
            }
        }
        if m[pivot][i] != 0 {
            pivot += 1;
        }
    }
    u[pivot..]
        .iter()
        .map(|col| col.iter().map(|&x| i64::try_from(x).map_err(|_| LatticeError::Overflow)).collect())
        .collect()
}

/// Returns the first basis vector whose coordinate sum is odd. Parity of the
/// coordinate sum is linear mod 2, so every kernel vector has an even sum iff
/// every basis vector does.
pub fn odd_sum_vector(basis: &[Vec<i64>]) -> Option<&Vec<i64>> {
    basis.iter().find(|v| v.iter().sum::<i64>().rem_euclid(2) == 1)
}
