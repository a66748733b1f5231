//! Laplacian spectral decompositions `L = Σ λ E_λ`, eigenvalue supports, and
//! the closed-form spectral decomposition of a blow-up.

mod exact;
mod hadamard;
mod jacobi;

pub use hadamard::{is_hadamard_diagonalizable, HadamardCheck};

use nalgebra::DMatrix;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Largest order for which integrality flags are re-verified exactly.
pub const EXACT_RECHECK_MAX_ORDER: usize = 64;
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is not symmetric: |m[{0}][{1}] - m[{1}][{0}]| = {2:e}")]
    NotSymmetric(usize, usize, f64),
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("dimension mismatch: spectral data of order {expected}, got {got} degrees")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

/// Numerical tolerances shared by decomposition and the decision layer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Matrix identities (resolution of identity, reconstruction, ±-equality of projections).
    pub mat: f64,
    /// Eigenvalues closer than this are merged into one eigenspace.
    pub group: f64,
    /// Distance to the nearest integer below which an eigenvalue is a candidate integer.
    pub int: f64,
    /// `(E_λ)_{u,u}` above this puts λ in the support of `u`.
    pub supp: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { mat: 1e-9, group: 1e-7, int: 1e-6, supp: 1e-10 }
    }
}

#[derive(Debug, Clone)]
pub struct Eigenspace {
    pub value: f64,
    pub multiplicity: usize,
    pub projection: DMatrix<f64>,
    /// The eigenvalue as an integer, when it is one. Flags set on integer
    /// matrices of order <= 64 are confirmed by `det(M - kI) = 0` in exact arithmetic.
    pub integer: Option<i64>,
}

/// Eigenvalues in increasing order, each with its orthogonal projection.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub order: usize,
    pub eigenspaces: Vec<Eigenspace>,
    pub tol: Tolerances,
}

impl SpectralData {
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigenspaces.iter().map(|e| e.value).collect()
    }

    /// Eigenvalues repeated by multiplicity.
    pub fn eigenvalue_multiset(&self) -> Vec<f64> {
        self.eigenspaces.iter().flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity)).collect()
    }

    pub fn find(&self, value: f64) -> Option<&Eigenspace> {
        self.eigenspaces.iter().find(|e| (e.value - value).abs() < self.tol.group)
    }

    /// `max |Σ E_λ - I|`.
    pub fn resolution_error(&self) -> f64 {
        let sum = self.eigenspaces.iter().fold(DMatrix::zeros(self.order, self.order), |acc, e| acc + &e.projection);
        (sum - DMatrix::identity(self.order, self.order)).amax()
    }

    /// `max |Σ λ E_λ - m|`.
    pub fn reconstruction_error(&self, m: &DMatrix<f64>) -> f64 {
        let sum = self
            .eigenspaces
            .iter()
            .fold(DMatrix::zeros(self.order, self.order), |acc, e| acc + &e.projection * e.value);
        (sum - m).amax()
    }

    /// `max_{λ≠μ} max |E_λ E_μ|`.
    pub fn orthogonality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.eigenspaces.iter().enumerate() {
            for b in &self.eigenspaces[i + 1..] {
                worst = worst.max((&a.projection * &b.projection).amax());
            }
        }
        worst
    }
}

pub fn laplacian(g: &Graph) -> DMatrix<f64> {
    let l = laplacian_int(g);
    let n = g.vertex_count();
    DMatrix::from_fn(n, n, |i, j| l[i][j] as f64)
}

/// Integer Laplacian `D - A`.
pub fn laplacian_int(g: &Graph) -> Vec<Vec<i64>> {
    let mut l = g.adjacency_matrix();
    for (u, row) in l.iter_mut().enumerate() {
        for x in row.iter_mut() {
            *x = -*x;
        }
        row[u] = g.degree(u) as i64;
    }
    l
}

pub fn adjacency(g: &Graph) -> DMatrix<f64> {
    let a = g.adjacency_matrix();
    let n = g.vertex_count();
    DMatrix::from_fn(n, n, |i, j| a[i][j] as f64)
}

/// Spectral decomposition of a symmetric matrix with default tolerances.
pub fn decompose(m: &DMatrix<f64>) -> Result<SpectralData, SpectraError> {
    decompose_with(m, Tolerances::default())
}

pub fn decompose_with(m: &DMatrix<f64>, tol: Tolerances) -> Result<SpectralData, SpectraError> {
    let (rows, cols) = m.shape();
    if rows != cols {
        return Err(SpectraError::NotSquare(rows, cols));
    }
    for i in 0..rows {
        for j in (i + 1)..rows {
            let gap = (m[(i, j)] - m[(j, i)]).abs();
            if gap > tol.mat {
                return Err(SpectraError::NotSymmetric(i, j, gap));
            }
        }
    }
    let (values, vectors) = jacobi::symmetric_eigen(m, MAX_SWEEPS).ok_or(SpectraError::NoConvergence(MAX_SWEEPS))?;

    let mut order: Vec<usize> = (0..rows).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if values[i] - values[*g.last().unwrap()] < tol.group => g.push(i),
            _ => groups.push(vec![i]),
        }
    }

    let integral = rows <= EXACT_RECHECK_MAX_ORDER && m.iter().all(|x| x.fract() == 0.0 && x.abs() < 1e15);
    let int_matrix: Option<Vec<Vec<i64>>> =
        integral.then(|| (0..rows).map(|i| (0..rows).map(|j| m[(i, j)] as i64).collect()).collect());

    let eigenspaces = groups
        .into_iter()
        .map(|members| {
            let mean = members.iter().map(|&i| values[i]).sum::<f64>() / members.len() as f64;
            let basis = DMatrix::from_fn(rows, members.len(), |r, c| vectors[(r, members[c])]);
            let projection = &basis * basis.transpose();
            let rounded = mean.round();
            let integer = ((mean - rounded).abs() < tol.int)
                .then_some(rounded as i64)
                .filter(|&k| int_matrix.as_ref().is_none_or(|im| exact::is_integer_eigenvalue(im, k)));
            Eigenspace {
                value: integer.map_or(mean, |k| k as f64),
                multiplicity: members.len(),
                projection,
                integer,
            }
        })
        .collect();
    Ok(SpectralData { order: rows, eigenspaces, tol })
}

/// Laplacian decomposition of a graph.
pub fn laplacian_spectrum(g: &Graph) -> Result<SpectralData, SpectraError> {
    decompose(&laplacian(g))
}

pub fn is_laplacian_integral(sd: &SpectralData) -> bool {
    sd.eigenspaces.iter().all(|e| e.integer.is_some())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupportEntry {
    pub eigenvalue: f64,
    /// `(E_λ)_{u,u} = ‖E_λ e_u‖²`.
    pub weight: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integer: Option<i64>,
}

/// The eigenvalue support σ_u: eigenvalues whose projection does not vanish on `e_u`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Support {
    pub vertex: usize,
    pub entries: Vec<SupportEntry>,
    pub integer_support: bool,
    #[serde(skip)]
    pub group_tol: f64,
}

impl Support {
    fn from_entries(vertex: usize, mut entries: Vec<SupportEntry>, group_tol: f64) -> Support {
        entries.sort_by(|a, b| a.eigenvalue.total_cmp(&b.eigenvalue));
        let integer_support = entries.iter().all(|e| e.integer.is_some());
        Support { vertex, entries, integer_support, group_tol }
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.eigenvalue).collect()
    }

    /// The support as integers, if every member is one.
    pub fn integers(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|e| e.integer).collect()
    }

    /// Nonzero support members as integers.
    pub fn nonzero_integers(&self) -> Option<Vec<i64>> {
        self.integers().map(|v| v.into_iter().filter(|&x| x != 0).collect())
    }

    /// Membership test for an integer such as a vertex degree: exact when
    /// the matching entry is integer-flagged, within the grouping tolerance otherwise.
    pub fn contains_integer(&self, k: i64) -> bool {
        self.entries.iter().any(|e| match e.integer {
            Some(x) => x == k,
            None => (e.eigenvalue - k as f64).abs() < self.group_tol,
        })
    }

    pub fn contains_value(&self, x: f64) -> bool {
        self.entries.iter().any(|e| (e.eigenvalue - x).abs() < self.group_tol)
    }

    pub fn weight_sum(&self) -> f64 {
        self.entries.iter().map(|e| e.weight).sum()
    }
}

pub fn support(sd: &SpectralData, u: usize) -> Result<Support, SpectraError> {
    if u >= sd.order {
        return Err(SpectraError::VertexOutOfRange(u));
    }
    let entries = sd
        .eigenspaces
        .iter()
        .filter(|e| e.projection[(u, u)] > sd.tol.supp)
        .map(|e| SupportEntry { eigenvalue: e.value, weight: e.projection[(u, u)], integer: e.integer })
        .collect();
    Ok(Support::from_entries(u, entries, sd.tol.group))
}

struct Piece {
    value: f64,
    integer: Option<i64>,
    multiplicity: usize,
    projection: DMatrix<f64>,
}

fn merge_pieces(mut pieces: Vec<Piece>, order: usize, tol: Tolerances) -> SpectralData {
    pieces.sort_by(|a, b| a.value.total_cmp(&b.value));
    let mut eigenspaces: Vec<Eigenspace> = Vec::new();
    for p in pieces {
        match eigenspaces.last_mut() {
            Some(last) if (p.value - last.value).abs() < tol.group => {
                last.projection += &p.projection;
                last.multiplicity += p.multiplicity;
                last.integer = last.integer.or(p.integer);
                if let Some(k) = last.integer {
                    last.value = k as f64;
                }
            }
            _ => eigenspaces.push(Eigenspace {
                value: p.value,
                multiplicity: p.multiplicity,
                projection: p.projection,
                integer: p.integer,
            }),
        }
    }
    SpectralData { order, eigenspaces, tol }
}

/// Spectral decomposition of `L(B_n(G))` assembled from that of `L(G)` without
/// re-diagonalising:
///
/// ```text
/// L_n = Σ_j nλ_j (J_n/n ⊗ E_j) + Σ_l n·d_l (I_n - J_n/n) ⊗ e_l e_lᵀ
/// ```
///
/// Pieces whose eigenvalues collide (`nλ_j = n·d_l`) are summed into one
/// eigenspace. For `n = 1` the degree pieces vanish.
pub fn blowup_spectral(sd: &SpectralData, degrees: &[usize], n: usize) -> Result<SpectralData, SpectraError> {
    let m = sd.order;
    if degrees.len() != m {
        return Err(SpectraError::DimensionMismatch { expected: m, got: degrees.len() });
    }
    let big = n * m;
    let inv = 1.0 / n as f64;
    let mut pieces = Vec::new();
    for e in &sd.eigenspaces {
        let projection = DMatrix::from_fn(big, big, |r, c| inv * e.projection[(r % m, c % m)]);
        pieces.push(Piece {
            value: n as f64 * e.value,
            integer: e.integer.map(|k| k * n as i64),
            multiplicity: e.multiplicity,
            projection,
        });
    }
    if n > 1 {
        for (l, &d) in degrees.iter().enumerate() {
            let projection = DMatrix::from_fn(big, big, |r, c| {
                if r % m == l && c % m == l {
                    if r == c { 1.0 - inv } else { -inv }
                } else {
                    0.0
                }
            });
            let value = (n * d) as i64;
            pieces.push(Piece { value: value as f64, integer: Some(value), multiplicity: n - 1, projection });
        }
    }
    Ok(merge_pieces(pieces, big, sd.tol))
}

/// Support of `(j,u)` in `B_n(G)` from the support of `u` in `G`:
/// `n·σ_u(G) ∪ {n·d_u}` with weights `(E_λ)_{u,u}/n` and `1 - 1/n`.
///
/// For `n = 1` the degree term has weight zero and the support is `σ_u(G)`.
pub fn support_blowup(sup: &Support, d_u: usize, n: usize) -> Support {
    let nf = n as f64;
    let mut entries: Vec<SupportEntry> = sup
        .entries
        .iter()
        .map(|e| SupportEntry {
            eigenvalue: nf * e.eigenvalue,
            weight: e.weight / nf,
            integer: e.integer.map(|k| k * n as i64),
        })
        .collect();
    if n > 1 {
        let value = (n * d_u) as i64;
        let extra = 1.0 - 1.0 / nf;
        match entries.iter_mut().find(|e| match e.integer {
            Some(k) => k == value,
            None => (e.eigenvalue - value as f64).abs() < sup.group_tol,
        }) {
            Some(e) => {
                e.weight += extra;
                e.integer = Some(value);
                e.eigenvalue = value as f64;
            }
            None => entries.push(SupportEntry { eigenvalue: value as f64, weight: extra, integer: Some(value) }),
        }
    }
    Support::from_entries(sup.vertex, entries, sup.group_tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blow_up, make_family, Family};

    fn spectrum(f: Family) -> SpectralData {
        laplacian_spectrum(&make_family(&f).unwrap()).unwrap()
    }

    fn distinct(sd: &SpectralData) -> Vec<(f64, usize)> {
        sd.eigenspaces.iter().map(|e| (e.value, e.multiplicity)).collect()
    }

    #[test]
    fn laplacian_examples() {
        let k2 = make_family(&Family::Complete(2)).unwrap();
        assert_eq!(laplacian_int(&k2), vec![vec![1, -1], vec![-1, 1]]);
        let p3 = make_family(&Family::Path(3)).unwrap();
        assert_eq!(laplacian_int(&p3), vec![vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]]);
        let c4 = make_family(&Family::Cycle(4)).unwrap();
        let l = laplacian_int(&c4);
        for i in 0..4 {
            assert_eq!(l[i][i], 2);
            assert_eq!(l[i].iter().sum::<i64>(), 0);
            assert_eq!(l[i][(i + 2) % 4], 0);
        }
    }

    #[test]
    fn k3_spectrum() {
        // char poly of L(K_3): x(x-3)^2
        assert_eq!(distinct(&spectrum(Family::Complete(3))), vec![(0.0, 1), (3.0, 2)]);
    }

    #[test]
    fn p3_spectrum() {
        // 2(1 - cos(jπ/3)) for j = 0, 1, 2
        let expected: Vec<f64> = (0..3).map(|j| 2.0 * (1.0 - (j as f64 * std::f64::consts::PI / 3.0).cos())).collect();
        let sd = spectrum(Family::Path(3));
        for (got, want) in sd.eigenvalues().iter().zip(&expected) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(sd.eigenspaces.iter().map(|e| e.integer).collect::<Vec<_>>(), vec![Some(0), Some(1), Some(3)]);
    }

    #[test]
    fn q3_spectrum() {
        assert_eq!(distinct(&spectrum(Family::Hypercube(3))), vec![(0.0, 1), (2.0, 3), (4.0, 3), (6.0, 1)]);
    }

    #[test]
    fn decomposition_invariants() {
        for f in [Family::Cycle(7), Family::Hypercube(3), Family::DoubleStar(2, 3), Family::Path(6)] {
            let g = make_family(&f).unwrap();
            let l = laplacian(&g);
            let sd = decompose(&l).unwrap();
            assert!(sd.resolution_error() < 1e-9, "{f}");
            assert!(sd.orthogonality_error() < 1e-9, "{f}");
            assert!(sd.reconstruction_error(&l) < 1e-9, "{f}");
            assert!(sd.eigenvalues().iter().all(|&x| x > -1e-9));
            let zero = &sd.eigenspaces[0];
            assert_eq!(zero.integer, Some(0));
            let ones = nalgebra::DVector::from_element(g.vertex_count(), 1.0);
            assert!((&zero.projection * &ones - &ones).amax() < 1e-9);
            let trace: f64 = sd.eigenspaces.iter().map(|e| e.value * e.multiplicity as f64).sum();
            assert!((trace - 2.0 * g.edge_count() as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_nonsymmetric() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(decompose(&m), Err(SpectraError::NotSymmetric(0, 1, _))));
        assert!(matches!(decompose(&DMatrix::zeros(2, 3)), Err(SpectraError::NotSquare(2, 3))));
    }

    #[test]
    fn support_examples() {
        let sd = spectrum(Family::Complete(3));
        assert_eq!(support(&sd, 1).unwrap().integers(), Some(vec![0, 3]));

        let sd = spectrum(Family::Star(3));
        assert_eq!(support(&sd, 0).unwrap().integers(), Some(vec![0, 4]));

        let sd = spectrum(Family::Path(4));
        let s = support(&sd, 0).unwrap();
        assert_eq!(s.entries.len(), 4);
        assert!(!s.integer_support);
        assert!((s.weight_sum() - 1.0).abs() < 1e-9);
        assert!(support(&sd, 9).is_err());
    }

    #[test]
    fn integrality() {
        assert!(is_laplacian_integral(&spectrum(Family::Complete(5))));
        assert!(!is_laplacian_integral(&spectrum(Family::Path(4))));
        assert!(is_laplacian_integral(&spectrum(Family::Hypercube(3))));
    }

    #[test]
    fn blowup_shortcut_examples() {
        let k3 = make_family(&Family::Complete(3)).unwrap();
        let sd = blowup_spectral(&laplacian_spectrum(&k3).unwrap(), &k3.degrees(), 2).unwrap();
        let vals: Vec<i64> = sd.eigenspaces.iter().map(|e| e.integer.unwrap()).collect();
        assert_eq!(vals, vec![0, 4, 6]);

        let k2 = make_family(&Family::Complete(2)).unwrap();
        let sd = blowup_spectral(&laplacian_spectrum(&k2).unwrap(), &k2.degrees(), 2).unwrap();
        let c4 = laplacian_spectrum(&make_family(&Family::Cycle(4)).unwrap()).unwrap();
        assert_eq!(distinct(&sd), distinct(&c4));

        let p4 = make_family(&Family::Path(4)).unwrap();
        let base = laplacian_spectrum(&p4).unwrap();
        let same = blowup_spectral(&base, &p4.degrees(), 1).unwrap();
        assert_eq!(distinct(&same), distinct(&base));

        assert!(matches!(blowup_spectral(&base, &[1, 2], 2), Err(SpectraError::DimensionMismatch { .. })));
    }

    #[test]
    fn blowup_shortcut_matches_direct_decomposition() {
        for f in [Family::Path(4), Family::Cycle(4), Family::Star(3), Family::DoubleStar(1, 2)] {
            let g = make_family(&f).unwrap();
            for n in 2..=3 {
                let shortcut = blowup_spectral(&laplacian_spectrum(&g).unwrap(), &g.degrees(), n).unwrap();
                let direct = laplacian_spectrum(&blow_up(&g, n).unwrap()).unwrap();
                assert_eq!(shortcut.eigenspaces.len(), direct.eigenspaces.len(), "{f} n={n}");
                for (a, b) in shortcut.eigenspaces.iter().zip(&direct.eigenspaces) {
                    assert!((a.value - b.value).abs() < 1e-7);
                    assert_eq!(a.multiplicity, b.multiplicity);
                    assert!((&a.projection - &b.projection).amax() < 1e-9, "{f} n={n} λ={}", a.value);
                }
            }
        }
    }

    #[test]
    fn support_blowup_examples() {
        let k3 = spectrum(Family::Complete(3));
        let s = support_blowup(&support(&k3, 0).unwrap(), 2, 2);
        assert_eq!(s.integers(), Some(vec![0, 4, 6]));
        assert!((s.weight_sum() - 1.0).abs() < 1e-12);

        let k2 = spectrum(Family::Complete(2));
        let s = support_blowup(&support(&k2, 0).unwrap(), 1, 2);
        assert_eq!(s.integers(), Some(vec![0, 2, 4]));

        let p4 = spectrum(Family::Path(4));
        let base = support(&p4, 1).unwrap();
        assert_eq!(support_blowup(&base, 2, 1), base);
    }
}
