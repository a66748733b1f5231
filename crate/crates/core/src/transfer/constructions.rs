//! Sufficient conditions for LPST built from joins, products and matchings.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use serde::Serialize;

use super::{integer_support, Answer, Certificate, ProductKind, Question, Site, Subject, TransferError, Verdict};
use crate::arith::{gcd_all, nu2, ValuationTable};
use crate::graph::{add_matching, are_false_twins, blow_up, blowup_coords, Graph, Matching};
use crate::spectra::{laplacian_spectrum, support, SpectralData, Support};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JoinBranch {
    Connected,
    Disconnected,
}

/// LPST between `(0,u)` and `(1,u)` in `B_2(G ∨ H)` for a vertex `u` of `G`,
/// where `|V(G)| = m` and `|V(H)| = n`.
///
/// With `σ_u(G) ⊂ Z` and `d_u ∉ σ_u(G)` (waived for `G = K_1`), LPST holds
/// iff every member of `S` other than `d_u + n` has larger 2-adic valuation
/// than `d_u + n`, where
///
/// ```text
/// S = { λ + n : λ ∈ (σ_u(G) ∖ {0}) ∪ {d_u, m} }          G connected
/// S = { λ + n : λ ∈ σ_u(G) ∪ {d_u, m} }                  G disconnected, u not isolated
/// ```
///
/// and the minimum time is `π/(2 gcd S)`.
pub fn lpst_join(sup: &Support, d_u: usize, m: usize, n: usize, connected: bool, isolated: bool) -> Result<Verdict, TransferError> {
    let q = Question::Lpst;
    let subject = Subject::twin_pair(sup.vertex);
    if !connected && isolated {
        return Ok(Verdict::precondition(q, subject, Answer::No, "u must not be an isolated vertex of a disconnected G"));
    }
    let (d, m_i, n_i) = (d_u as i64, m as i64, n as i64);
    if m > 1 && sup.contains_integer(d) {
        return Ok(Verdict::precondition(q, subject, Answer::No, format!("d_u = {d_u} lies in the support of u in G")));
    }
    let values = match integer_support(sup) {
        Ok(v) => v,
        Err(eigenvalue) => return Ok(Verdict::new(q, subject, Answer::No, Certificate::NonIntegerSupport { eigenvalue })),
    };
    let branch = if connected { JoinBranch::Connected } else { JoinBranch::Disconnected };
    let mut shifted: BTreeSet<i64> = values.iter().filter(|&&x| x != 0 || !connected).map(|&x| x + n_i).collect();
    shifted.insert(m_i + n_i);
    let degree = d + n_i;
    let valuations = ValuationTable::new(shifted.iter().copied().chain([degree]));
    let failure = shifted.iter().find(|&&s| nu2(s) <= nu2(degree)).map(|s| format!("nu2({s}) <= nu2({degree})"));
    let mut all = shifted.clone();
    all.insert(degree);
    let shifted: Vec<i64> = shifted.into_iter().collect();
    let certificate = |gcd, time, failure| Certificate::Join { branch, shifted: shifted.clone(), degree, valuations: valuations.clone(), gcd, time, failure };
    if failure.is_some() {
        return Ok(Verdict::new(q, subject, Answer::No, certificate(None, None, failure)));
    }
    let h = gcd_all(all);
    Ok(Verdict::new(q, subject, Answer::Yes, certificate(Some(h), Some(PI / (2.0 * h as f64)), None)))
}

/// A factor graph's spectrum together with its regular degree (`None` if not regular).
#[derive(Debug, Clone, Copy)]
pub struct RegularFactor<'a> {
    pub spectrum: &'a SpectralData,
    pub degree: Option<usize>,
}

impl<'a> RegularFactor<'a> {
    pub fn of(g: &Graph, spectrum: &'a SpectralData) -> RegularFactor<'a> {
        RegularFactor { spectrum, degree: g.regular_degree() }
    }
}

fn degrees(factors: &[RegularFactor]) -> Result<Vec<usize>, TransferError> {
    factors.iter().enumerate().map(|(i, f)| f.degree.ok_or(TransferError::NonRegularFactor(i))).collect()
}

fn integer_values(sd: &SpectralData) -> Option<Vec<i64>> {
    sd.eigenspaces.iter().map(|e| e.integer).collect()
}

/// Fast path for `B_2(G_1 □ ... □ G_d)`: LPST at `π/2` for every vertex when
/// each `σ(G_j)` consists of even integers and the degree sum is odd.
/// Otherwise `undecided`; the assembled product can still go through
/// [`super::lpst_blowup2`].
pub fn lpst_cartesian_factors(factors: &[RegularFactor]) -> Result<Verdict, TransferError> {
    let degs = degrees(factors)?;
    let k: i64 = degs.iter().map(|&x| x as i64).sum();
    let spectra: Vec<Option<Vec<i64>>> = factors.iter().map(|f| integer_values(f.spectrum)).collect();
    let valuations = spectra.iter().map(|s| ValuationTable::new(s.iter().flatten().copied())).collect();
    let failure = if let Some(i) = spectra.iter().position(|s| s.as_ref().is_none_or(|v| v.iter().any(|x| x % 2 != 0))) {
        Some(format!("factor {i} has a Laplacian eigenvalue that is not an even integer"))
    } else if k % 2 == 0 {
        Some(format!("degree sum {k} is even"))
    } else {
        None
    };
    let answer = if failure.is_some() { Answer::Undecided } else { Answer::Yes };
    let time = failure.is_none().then_some(PI / 2.0);
    Ok(Verdict::new(
        Question::Lpst,
        Subject::Product { factors: factors.len() },
        answer,
        Certificate::Product { product: ProductKind::Cartesian, degree: k, valuations, time, failure },
    ))
}

/// Fast path for `B_2(G_1 × ... × G_d)`: LPST for every vertex when each
/// factor is regular of positive degree and its adjacency eigenvalues are
/// integers sharing a single 2-adic valuation. `factors` carry adjacency spectra.
///
/// The certified time is `π/(2h)` with `h` the gcd of the product's nonzero
/// Laplacian eigenvalues and its degree; it is a transfer time for every
/// vertex, and the minimum one when the vertex support is the whole spectrum.
pub fn lpst_direct_factors(factors: &[RegularFactor]) -> Result<Verdict, TransferError> {
    let degs = degrees(factors)?;
    let spectra: Vec<Option<Vec<i64>>> = factors.iter().map(|f| integer_values(f.spectrum)).collect();
    let valuations: Vec<ValuationTable> = spectra.iter().map(|s| ValuationTable::new(s.iter().flatten().copied())).collect();
    let k: i64 = degs.iter().map(|&x| x as i64).product();
    let failure = if let Some(i) = degs.iter().position(|&x| x == 0) {
        Some(format!("factor {i} has degree 0"))
    } else if let Some(i) = spectra.iter().position(Option::is_none) {
        Some(format!("factor {i} has a non-integer adjacency eigenvalue"))
    } else { spectra.iter().position(|s| {
        let v = s.as_ref().expect("checked above");
        v.iter().any(|&x| nu2(x) != nu2(v[0]))
    }).map(|i| format!("adjacency eigenvalues of factor {i} have different 2-adic valuations")) };
    let time = failure.is_none().then(|| {
        let thetas = spectra.iter().flatten().fold(BTreeSet::from([1i64]), |acc, s| {
            acc.iter().flat_map(|a| s.iter().map(move |b| a * b)).collect()
        });
        let h = gcd_all(thetas.into_iter().map(|t| k - t).chain([k]));
        PI / (2.0 * h as f64)
    });
    let answer = if failure.is_some() { Answer::Undecided } else { Answer::Yes };
    Ok(Verdict::new(
        Question::Lpst,
        Subject::Product { factors: factors.len() },
        answer,
        Certificate::Product { product: ProductKind::Direct, degree: k, valuations, time, failure },
    ))
}

/// Plans the insertion of a matching inside twin blocks of `B_n(g)`, `n ≡ 0 (mod 4)`.
///
/// Each block is a set of base vertices: a single vertex `v` (giving the twin
/// set `T_v`) or pairwise false twins (giving `T_v ∪ T_u ∪ ...`). Every base
/// vertex must have an integral support. The matching uses blow-up indices and
/// each edge must stay inside one block. The verdict is LPST at `π/2` between
/// the ends of every inserted edge, and period `π/2` at the unmatched block vertices.
pub fn perturbation_plan(g: &Graph, n: usize, blocks: &[Vec<usize>], matching: &Matching) -> Result<Verdict, TransferError> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(TransferError::CopiesNotMultipleOfFour(n));
    }
    let order = g.vertex_count();
    let sd = laplacian_spectrum(g)?;
    let mut block_of = vec![None; order];
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            if v >= order {
                return Err(TransferError::VertexOutOfRange(v));
            }
            if integer_support(&support(&sd, v)?).is_err() {
                return Err(TransferError::NonIntegerBaseSupport(v));
            }
            block_of[v] = Some(i);
        }
        for (a, &u) in block.iter().enumerate() {
            for &v in &block[a + 1..] {
                if !are_false_twins(g, u, v) {
                    return Err(TransferError::NotFalseTwins(u, v));
                }
            }
        }
    }
    let site = |x: usize| {
        let (j, v) = blowup_coords(x, order);
        Site::copy(j, v)
    };
    let mut pairs = Vec::new();
    for &(a, b) in matching.edges() {
        let (ba, bb) = (a % order, b % order);
        if a >= n * order || b >= n * order || block_of[ba].is_none() || block_of[ba] != block_of[bb] {
            return Err(TransferError::PairOutsideBlock(a, b));
        }
        pairs.push([site(a), site(b)]);
    }
    add_matching(&blow_up(g, n)?, matching)?;
    let periodic = (0..n * order)
        .filter(|&x| block_of[x % order].is_some() && !matching.covers(x))
        .map(site)
        .collect();
    Ok(Verdict::new(
        Question::Lpst,
        Subject::Matching { pairs: pairs.clone() },
        Answer::Yes,
        Certificate::Perturbation { time: PI / 2.0, pairs, periodic, period: PI / 2.0 },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{join, make_family, Family};
    use crate::spectra::{adjacency, decompose};
    use crate::transfer::lpst_blowup2;

    fn k(n: usize) -> Graph {
        make_family(&Family::Complete(n)).unwrap()
    }

    #[test]
    fn cone_over_empty_graph() {
        let g = k(1);
        let sup = support(&laplacian_spectrum(&g).unwrap(), 0).unwrap();
        for n in 1..=8 {
            let v = lpst_join(&sup, 0, 1, n, true, false).unwrap();
            assert_eq!(v.is_yes(), n % 2 == 1, "n={n}");
            if v.is_yes() {
                assert!((v.time().unwrap() - PI / 2.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn join_agrees_with_assembled_graph() {
        let cases = [
            (make_family(&Family::Cycle(4)).unwrap(), make_family(&Family::Empty(1)).unwrap()),
            (make_family(&Family::Path(3)).unwrap(), make_family(&Family::Empty(2)).unwrap()),
            (make_family(&Family::Empty(3)).unwrap(), k(1)),
            (crate::graph::disjoint_union(&k(2), &k(1)), make_family(&Family::Empty(1)).unwrap()),
            (crate::graph::disjoint_union(&k(2), &k(2)), make_family(&Family::Empty(3)).unwrap()),
        ];
        for (g, h) in cases {
            let sd = laplacian_spectrum(&g).unwrap();
            let joined = join(&g, &h);
            let sdj = laplacian_spectrum(&joined).unwrap();
            for u in 0..g.vertex_count() {
                let sup = support(&sd, u).unwrap();
                let ours = lpst_join(&sup, g.degree(u), g.vertex_count(), h.vertex_count(), g.is_connected(), g.degree(u) == 0).unwrap();
                let direct = lpst_blowup2(&support(&sdj, u).unwrap(), joined.degree(u)).unwrap();
                assert_eq!(ours.is_yes(), direct.is_yes(), "{g:?} u={u}");
                if ours.is_yes() {
                    assert!((ours.time().unwrap() - direct.time().unwrap()).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let g = crate::graph::disjoint_union(&k(2), &k(1));
        let sup = support(&laplacian_spectrum(&g).unwrap(), 2).unwrap();
        let v = lpst_join(&sup, 0, 3, 1, false, true).unwrap();
        assert!(matches!(v.certificate, Certificate::Precondition { .. }));
    }

    #[test]
    fn cartesian_fast_path() {
        let k2 = k(2);
        let sd = laplacian_spectrum(&k2).unwrap();
        let f = RegularFactor::of(&k2, &sd);
        assert!(lpst_cartesian_factors(&[f, f, f]).unwrap().is_yes());
        assert!(lpst_cartesian_factors(&[f]).unwrap().is_yes());
        let k4 = k(4);
        let sd4 = laplacian_spectrum(&k4).unwrap();
        let f4 = RegularFactor::of(&k4, &sd4);
        assert_eq!(lpst_cartesian_factors(&[f4, f4]).unwrap().answer, Answer::Undecided);
        let p3 = make_family(&Family::Path(3)).unwrap();
        let sdp = laplacian_spectrum(&p3).unwrap();
        assert_eq!(lpst_cartesian_factors(&[RegularFactor::of(&p3, &sdp)]), Err(TransferError::NonRegularFactor(0)));
    }

    #[test]
    fn direct_fast_path() {
        let spectra: Vec<(Graph, SpectralData)> =
            [4, 6, 3, 2, 5].iter().map(|&n| (k(n), decompose(&adjacency(&k(n))).unwrap())).collect();
        let f = |i: usize| RegularFactor::of(&spectra[i].0, &spectra[i].1);
        let v = lpst_direct_factors(&[f(0), f(1)]).unwrap();
        assert!(v.is_yes());
        assert!(v.time().unwrap() > 0.0);
        assert_eq!(lpst_direct_factors(&[f(2)]).unwrap().answer, Answer::Undecided);
        assert_eq!(lpst_direct_factors(&[f(3), f(4)]).unwrap().answer, Answer::Undecided);
    }

    #[test]
    fn perturbation_preconditions() {
        let k3 = k(3);
        let m = Matching::new([(0, 6), (3, 9)]).unwrap();
        let v = perturbation_plan(&k3, 4, &[vec![0]], &m).unwrap();
        let Certificate::Perturbation { pairs, periodic, .. } = &v.certificate else { panic!() };
        assert_eq!(pairs[0], [Site::copy(0, 0), Site::copy(2, 0)]);
        assert!(periodic.is_empty());

        assert_eq!(perturbation_plan(&k3, 2, &[vec![0]], &m), Err(TransferError::CopiesNotMultipleOfFour(2)));
        let across = Matching::new([(0, 1)]).unwrap();
        assert!(perturbation_plan(&k3, 4, &[vec![0]], &across).is_err());
        assert_eq!(perturbation_plan(&k3, 4, &[vec![0, 1]], &Matching::default()), Err(TransferError::NotFalseTwins(0, 1)));
        let p4 = make_family(&Family::Path(4)).unwrap();
        assert_eq!(perturbation_plan(&p4, 4, &[vec![0]], &Matching::default()), Err(TransferError::NonIntegerBaseSupport(0)));

        let empty = perturbation_plan(&k3, 4, &[vec![1]], &Matching::default()).unwrap();
        let Certificate::Perturbation { periodic, .. } = empty.certificate else { panic!() };
        assert_eq!(periodic.len(), 4);
    }
}
