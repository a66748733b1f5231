//! LPGST on `B_2(S_{k,l})` via the cubic factor `p(x)` of the characteristic
//! polynomial `x (x-1)^{k+l-2} p(x)`.

use serde::Serialize;

use super::{Answer, Certificate, Question, Subject, TransferError, Verdict};
use crate::arith::poly::{cubic_irreducible_over_q, double_star_poly, CubicFactorization};
use crate::arith::{nu2, ValuationTable};
use crate::graph::Graph;

/// The four vertex orbits of `S_{k,l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DoubleStarSite {
    /// The hub of degree `k + 1`.
    HubKSide,
    /// The hub of degree `l + 1`.
    HubLSide,
    /// A leaf attached to the hub of degree `k + 1`.
    LeafOnKSide,
    /// A leaf attached to the hub of degree `l + 1`.
    LeafOnLSide,
}

impl DoubleStarSite {
    fn swapped(self) -> DoubleStarSite {
        match self {
            DoubleStarSite::HubKSide => DoubleStarSite::HubLSide,
            DoubleStarSite::HubLSide => DoubleStarSite::HubKSide,
            DoubleStarSite::LeafOnKSide => DoubleStarSite::LeafOnLSide,
            DoubleStarSite::LeafOnLSide => DoubleStarSite::LeafOnKSide,
        }
    }
}

/// Site of vertex `v` in the standard layout of `S_{k,l}`: hubs `0` (with
/// `k` leaves) and `1`, then the `k` leaves of hub 0, then the `l` leaves of hub 1.
pub fn double_star_site(k: usize, l: usize, v: usize) -> Option<DoubleStarSite> {
    match v {
        0 => Some(DoubleStarSite::HubKSide),
        1 => Some(DoubleStarSite::HubLSide),
        v if v < 2 + k => Some(DoubleStarSite::LeafOnKSide),
        v if v < 2 + k + l => Some(DoubleStarSite::LeafOnLSide),
        _ => None,
    }
}

/// If `g` is a double star `S_{k,l}` (`k, l >= 1`), returns `(k, l)` and the
/// site of every vertex, with `k` counted at the lower-numbered hub.
pub fn recognize_double_star(g: &Graph) -> Option<(usize, usize, Vec<DoubleStarSite>)> {
    let n = g.vertex_count();
    if n < 4 || g.edge_count() != n - 1 || !g.is_connected() {
        return None;
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 1).collect();
    let &[a, b] = hubs.as_slice() else { return None };
    if !g.has_edge(a, b) {
        return None;
    }
    let (k, l) = (g.degree(a) - 1, g.degree(b) - 1);
    let sites = (0..n)
        .map(|v| match v {
            v if v == a => DoubleStarSite::HubKSide,
            v if v == b => DoubleStarSite::HubLSide,
            v if g.has_edge(v, a) => DoubleStarSite::LeafOnKSide,
            _ => DoubleStarSite::LeafOnLSide,
        })
        .collect();
    Some((k, l, sites))
}

/// LPGST between the two copies of a vertex of `S_{k,l}` in `B_2(S_{k,l})`.
///
/// Hub of degree `k+1`: yes iff `p` is irreducible over Q and
/// `ν₂(k+1) = ν₂(l+3)`. Leaf on the hub of degree `l+1`: yes iff `l = 1`,
/// `k` is odd and `p` is irreducible or has an even integer root. The other
/// two sites follow by exchanging `k` and `l`.
pub fn lpgst_double_star(k: u64, l: u64, site: DoubleStarSite) -> Result<Verdict, TransferError> {
    if k == 0 || l == 0 {
        return Err(TransferError::InvalidDoubleStar);
    }
    let polynomial = double_star_poly(k, l);
    let factorization = cubic_irreducible_over_q(&polynomial);
    let (a, b, oriented) = match site {
        DoubleStarSite::HubKSide | DoubleStarSite::LeafOnLSide => (k, l, site),
        DoubleStarSite::HubLSide | DoubleStarSite::LeafOnKSide => (l, k, site.swapped()),
    };
    let (a_i, b_i) = (a as i64, b as i64);
    // in the oriented frame the hub has degree a+1 and the leaf hangs off the hub of degree b+1
    let (answer, valuations, reason) = match oriented {
        DoubleStarSite::HubKSide => {
            let valuations = ValuationTable::new([a_i + 1, b_i + 3]);
            let equal = nu2(a_i + 1) == nu2(b_i + 3);
            let answer = factorization.is_irreducible() && equal;
            let reason = match (&factorization, equal) {
                (CubicFactorization::Reducible { .. }, _) => "p(x) is reducible over Q".to_string(),
                (_, false) => format!("nu2({}) != nu2({})", a + 1, b + 3),
                _ => format!("p(x) irreducible and nu2({}) = nu2({})", a + 1, b + 3),
            };
            (answer, valuations, reason)
        }
        _ => {
            let valuations = ValuationTable::new([a_i]);
            if b >= 2 {
                (false, valuations, format!("the leaf has a twin, so its copies lie in a twin set of size {}", 2 * b))
            } else if a % 2 == 0 {
                (false, valuations, format!("the opposite hub has an even number ({a}) of leaves"))
            } else {
                match &factorization {
                    CubicFactorization::Irreducible => (true, valuations, "l = 1, k odd and p(x) irreducible".into()),
                    CubicFactorization::Reducible { roots } => match roots.iter().find(|r| *r % 2 == 0) {
                        Some(r) => (true, valuations, format!("l = 1, k odd and p has the even root {r}")),
                        None => (false, valuations, "p(x) has only odd integer roots".into()),
                    },
                }
            }
        }
    };
    let vertex = match site {
        DoubleStarSite::HubKSide => 0,
        DoubleStarSite::HubLSide => 1,
        DoubleStarSite::LeafOnKSide => 2,
        DoubleStarSite::LeafOnLSide => 2 + k as usize,
    };
    Ok(Verdict::new(
        Question::Lpgst,
        Subject::twin_pair(vertex),
        if answer { Answer::Yes } else { Answer::No },
        Certificate::DoubleStar { k, l, site, polynomial, factorization, valuations, reason },
    ))
}
