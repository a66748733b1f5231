//! LPGST on `B_2(P_n)`, decided exactly in the cyclotomic ring.
//!
//! With `ζ = e^{iπ/n}`, the Laplacian eigenvalues of `P_n` are
//! `θ_j = 2 - ζ^j - ζ^{-j}` for `0 <= j < n`, so each `θ_j - d_u` is an
//! element of `Z[ζ]` and has integer coordinates in the power basis of
//! `Z[x]/Φ_{2n}`. An integer relation `Σ m_j (θ_j - d_u) = 0` is then exactly
//! an element of the integer kernel of the coordinate matrix.

use serde::Serialize;

use super::{Answer, Certificate, Question, Subject, TransferError, Verdict};
use crate::arith::lattice::{integer_kernel, odd_sum_vector};
use crate::arith::poly::{cyclotomic, rem_monic};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathBranch {
    Endpoint,
    /// `n` even and `u` interior: `θ_{n/2} = 2 = d_u` lies in the support.
    InteriorEven,
    InteriorOddOffCentre,
    /// `n` odd and `u = (n+1)/2`.
    InteriorOddCentre,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "evidence", rename_all = "kebab-case")]
pub enum PathEvidence {
    /// `θ_index = d_u`, so the copies are not strongly cospectral.
    DegreeInSupport { index: usize },
    /// Coefficients `m_j` aligned with the support indices, odd sum.
    OddRelation { coefficients: Vec<i64> },
    /// Kernel basis in which every vector has even sum.
    EvenKernel { basis: Vec<Vec<i64>> },
}

/// Indices `j` with `θ_j ∈ σ_u(P_n)`, `u` 1-indexed.
///
/// The `θ_j`-eigenvector has entries `cos(jπ(2u-1)/(2n))`, which vanish
/// exactly when `(2u-1)j ≡ n (mod 2n)`.
pub fn path_support_indices(n: usize, u: usize) -> Vec<usize> {
    (0..n).filter(|&j| ((2 * u - 1) * j) % (2 * n) != n).collect()
}

/// Coordinates of `θ_j - d` in `Z[x]/Φ_{2n}`.
fn shifted_eigenvalue(n: usize, j: usize, d: i64, phi: &[i64]) -> Vec<i64> {
    let mut p = vec![0i64; 2 * n + 1];
    p[0] += 2 - d;
    p[j] -= 1;
    p[2 * n - j] -= 1;
    rem_monic(&p, phi)
}

/// If `g` is a path on at least two vertices, the 1-indexed position of each vertex along it.
pub fn recognize_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != n - 1 || !g.is_connected() || (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) == 1)?;
    let mut position = vec![0; n];
    let (mut prev, mut cur) = (usize::MAX, start);
    for k in 1..=n {
        position[cur] = k;
        match g.neighbors(cur).iter().find(|&&w| w != prev) {
            Some(&next) => (prev, cur) = (cur, next),
            None => break,
        }
    }
    Some(position)
}

/// LPGST between `(0,u)` and `(1,u)` in `B_2(P_n)`, `u` 1-indexed.
pub fn lpgst_path(n: usize, u: usize) -> Result<Verdict, TransferError> {
    if n < 2 || u == 0 || u > n {
        return Err(TransferError::InvalidPathVertex { n, u });
    }
    let endpoint = u == 1 || u == n;
    let d: i64 = if endpoint { 1 } else { 2 };
    let branch = if endpoint {
        PathBranch::Endpoint
    } else if n.is_multiple_of(2) {
        PathBranch::InteriorEven
    } else if 2 * u == n + 1 {
        PathBranch::InteriorOddCentre
    } else {
        PathBranch::InteriorOddOffCentre
    };
    let support = path_support_indices(n, u);
    let phi = cyclotomic(2 * n);
    let columns: Vec<Vec<i64>> = support.iter().map(|&j| shifted_eigenvalue(n, j, d, &phi)).collect();
    let subject = Subject::twin_pair(u - 1);
    let verdict = |answer, evidence| {
        Verdict::new(Question::Lpgst, subject.clone(), answer, Certificate::Path { n, vertex: u, branch, support: support.clone(), evidence })
    };

    if let Some(pos) = columns.iter().position(|c| c.iter().all(|&x| x == 0)) {
        return Ok(verdict(Answer::No, PathEvidence::DegreeInSupport { index: support[pos] }));
    }
    let rows: Vec<Vec<i64>> = (0..phi.len() - 1).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
    let basis = integer_kernel(&rows, support.len())?;
    Ok(match odd_sum_vector(&basis) {
        Some(m) => verdict(Answer::No, PathEvidence::OddRelation { coefficients: m.clone() }),
        None => verdict(Answer::Yes, PathEvidence::EvenKernel { basis }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};
    use crate::spectra::{laplacian_spectrum, support};
    use std::f64::consts::PI;

    fn theta(n: usize, j: usize) -> f64 {
        2.0 * (1.0 - (j as f64 * PI / n as f64).cos())
    }

    #[test]
    fn support_rule_matches_decomposition() {
        for n in 2..=10 {
            let sd = laplacian_spectrum(&make_family(&Family::Path(n)).unwrap()).unwrap();
            for u in 1..=n {
                let numeric = support(&sd, u - 1).unwrap().eigenvalues();
                let rule: Vec<f64> = path_support_indices(n, u).iter().map(|&j| theta(n, j)).collect();
                assert_eq!(numeric.len(), rule.len(), "n={n} u={u}");
                for (a, b) in numeric.iter().zip(&rule) {
                    assert!((a - b).abs() < 1e-9, "n={n} u={u} {numeric:?} {rule:?}");
                }
            }
        }
        assert_eq!(path_support_indices(5, 3), vec![0, 2, 4]);
        assert_eq!(path_support_indices(3, 2), vec![0, 2]);
        assert_eq!(path_support_indices(4, 1), vec![0, 1, 2, 3]);
    }

    #[test]
    fn branches() {
        let v = lpgst_path(4, 2).unwrap();
        let Certificate::Path { branch, evidence, .. } = v.certificate else { panic!() };
        assert_eq!(branch, PathBranch::InteriorEven);
        assert_eq!(evidence, PathEvidence::DegreeInSupport { index: 2 });
        assert!(v.answer == Answer::No);

        // θ_1(P_3) = 1 = d_u at the endpoint
        let v = lpgst_path(3, 1).unwrap();
        assert!(v.is_no());
        assert!(matches!(v.certificate, Certificate::Path { branch: PathBranch::Endpoint, .. }));

        let v = lpgst_path(5, 3).unwrap();
        assert!(v.is_no());
        assert!(matches!(v.certificate, Certificate::Path { branch: PathBranch::InteriorOddCentre, .. }));
        assert!(lpgst_path(1, 1).is_err());
        assert!(lpgst_path(4, 5).is_err());
    }

    #[test]
    fn odd_relations_hold_numerically() {
        for n in 2..=10 {
            for u in 1..=n {
                let v = lpgst_path(n, u).unwrap();
                let Certificate::Path { support, evidence: PathEvidence::OddRelation { coefficients }, .. } = v.certificate else {
                    continue;
                };
                let d = if u == 1 || u == n { 1.0 } else { 2.0 };
                let value: f64 = support.iter().zip(&coefficients).map(|(&j, &m)| m as f64 * (theta(n, j) - d)).sum();
                assert!(value.abs() < 1e-9, "n={n} u={u}");
                assert_eq!(coefficients.iter().sum::<i64>().rem_euclid(2), 1);
            }
        }
    }

    #[test]
    fn recognises_relabelled_paths() {
        let g = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(recognize_path(&g).unwrap(), vec![3, 1, 4, 2]);
        assert!(recognize_path(&make_family(&Family::Star(3)).unwrap()).is_none());
        assert!(recognize_path(&make_family(&Family::Cycle(4)).unwrap()).is_none());
        assert!(recognize_path(&make_family(&Family::Complete(1)).unwrap()).is_none());
    }
}
