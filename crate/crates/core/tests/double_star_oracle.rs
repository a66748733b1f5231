//! An exact LPGST oracle for `B_2(S_{k,l})` built only from the root
//! structure of the cubic factor `p`, independent of the closed-form rules.
//!
//! Integer relations `Σ m_λ (λ - d) = 0` over the support collapse onto one
//! variable per Galois orbit: integers stay single, a conjugate quadratic pair
//! contributes `m (λ + λ' - 2d)` with weight 2 in the coefficient sum, and the
//! three roots of an irreducible cubic contribute `m (s - 3d)` with weight 3,
//! where `s = k + l + 4` is their trace. For a primitive lattice `{m : c·m = 0}`
//! every member has even weighted sum `f·m` iff `f ≡ 0` or `f ≡ c/gcd(c)` (mod 2).

mod common;

use common::{gcd_of, spectrum};
use lpstlab::graph::{make_family, Family};
use lpstlab::spectra::support;
use lpstlab::transfer::{lpgst_double_star, DoubleStarSite};

fn p_at(k: i64, l: i64, x: i64) -> i64 {
    x * (x - k - 1) * (x - l - 1) - (x - 1) * (x - k - 1) - (x - 1) * (x - l - 1)
}

fn integer_roots(k: i64, l: i64) -> Vec<i64> {
    let c0 = k + l + 2;
    (1..=c0).filter(|d| c0 % d == 0).flat_map(|d| [d, -d]).filter(|&x| p_at(k, l, x) == 0).collect()
}

/// Exact LPGST decision for the twin copies of vertex `v` of `S_{k,l}`.
fn oracle(k: usize, l: usize, v: usize) -> bool {
    let g = make_family(&Family::DoubleStar(k, l)).unwrap();
    let sup = support(&spectrum(&g), v).unwrap();
    let d = g.degree(v) as i64;
    let values = sup.eigenvalues();
    if values.iter().any(|x| (x - d as f64).abs() < 1e-7) {
        return false;
    }
    let roots = integer_roots(k as i64, l as i64);
    let trace = (k + l + 4) as i64;
    let (mut c, mut f) = (Vec::new(), Vec::new());
    let mut irrational = Vec::new();
    for &x in &values {
        if (x - x.round()).abs() < 1e-6 {
            c.push(x.round() as i64 - d);
            f.push(1);
        } else {
            irrational.push(x);
        }
    }
    match (irrational.len(), roots.as_slice()) {
        (0, _) => {}
        (3, []) => {
            c.push(trace - 3 * d);
            f.push(3);
        }
        (2, [r]) => {
            let pair = trace - r;
            assert!((irrational[0] + irrational[1] - pair as f64).abs() < 1e-9);
            c.push(pair - 2 * d);
            f.push(2);
        }
        // a proper subset of a Galois orbit can only carry zero coefficients
        (1 | 2, _) => {}
        (n, r) => panic!("unexpected support shape: {n} irrational values, integer roots {r:?}"),
    }
    let g = gcd_of(c.iter().copied());
    f.iter().all(|x| x % 2 == 0) || f.iter().zip(&c).all(|(fi, ci)| (fi - ci / g).rem_euclid(2) == 0)
}

#[test]
fn closed_form_matches_exact_oracle() {
    let mut yes = 0;
    for k in 1..=8 {
        for l in 1..=8 {
            for (site, v) in [
                (DoubleStarSite::HubKSide, 0),
                (DoubleStarSite::HubLSide, 1),
                (DoubleStarSite::LeafOnKSide, 2),
                (DoubleStarSite::LeafOnLSide, 2 + k),
            ] {
                let closed = lpgst_double_star(k as u64, l as u64, site).unwrap().is_yes();
                assert_eq!(closed, oracle(k, l, v), "S_{{{k},{l}}} {site:?}");
                yes += closed as usize;
            }
        }
    }
    assert!(yes > 10);
}

#[test]
fn p4_endpoints_transfer_under_both_readings() {
    assert!(oracle(1, 1, 2));
    assert!(lpgst_double_star(1, 1, DoubleStarSite::LeafOnLSide).unwrap().is_yes());
    assert!(lpstlab::transfer::lpgst_path(4, 1).unwrap().is_yes());
}
