//! Analytic verdicts against the dense walk on assembled graphs.

mod common;

use common::{blown_spectrum, spectrum};
use lpstlab::graph::{
    blow_up, blowup_coords, cartesian_product, catalog, direct_product, disjoint_union, join, make_family, twin_sets,
    are_false_twins, Family, Graph,
};
use lpstlab::spectra::{adjacency, blowup_spectral, decompose, laplacian, support};
use lpstlab::transfer::{
    blowup_period, is_periodic, lpgst_blowup2, lpst_blowup2, lpst_cartesian_factors, lpst_direct_factors, lpst_join,
    strong_cospectrality_blowup, strong_cospectrality_numeric, Answer, RegularFactor,
};
use lpstlab::walk::{amplitude, fidelity, fidelity_trace};

fn graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = catalog().into_iter().map(|(f, g)| (f.to_string(), g)).collect();
    for f in [9, 10, 11, 12].map(Family::Cycle).into_iter().chain([9, 10, 12].map(Family::Path)).chain([6, 7].map(Family::Complete)) {
        out.push((f.to_string(), make_family(&f).unwrap()));
    }
    let k2 = make_family(&Family::Complete(2)).unwrap();
    out.push(("K_2 + K_1".into(), disjoint_union(&k2, &make_family(&Family::Complete(1)).unwrap())));
    out
}

#[test]
fn lpst_verdicts_match_the_walk() {
    let mut yes = 0;
    for (name, g) in graphs() {
        let sd = spectrum(&g);
        let order = g.vertex_count();
        let blown = blown_spectrum(&g, 2);
        for u in 0..order {
            let sup = support(&sd, u).unwrap();
            let d = g.degree(u);
            if sup.contains_integer(d as i64) {
                continue;
            }
            let lpst = lpst_blowup2(&sup, d).unwrap();
            let (a, b) = (u, order + u);
            if lpst.is_yes() {
                yes += 1;
                let tau = lpst.time().unwrap();
                let amp = amplitude(&blown, a, b, tau);
                assert!(amp.norm_sqr() >= 1.0 - 1e-8, "{name} u={u}");
                // the phase factor of transfer between twin copies is 1
                assert!(amp.arg().abs() < 1e-4, "{name} u={u}: phase {}", amp.arg());
                let period = blowup_period(&sup, d, 2).unwrap().period().unwrap();
                assert!((tau - period / 2.0).abs() < 1e-12, "{name} u={u}: tau {tau}, period {period}");
            } else if sup.integer_support {
                let period = blowup_period(&sup, d, 2).unwrap().period().unwrap();
                let peak = fidelity_trace(&blown, a, b, period, 2049).peak().unwrap().1;
                assert!(peak < 1.0 - 1e-3, "{name} u={u}: sampled peak {peak}");
            }
        }
    }
    assert!(yes >= 10, "only {yes} transfer cases");
}

#[test]
fn cospectrality_and_implications() {
    for (name, g) in graphs() {
        let sd = spectrum(&g);
        let order = g.vertex_count();
        let blown = blown_spectrum(&g, 2);
        for u in 0..order {
            let sup = support(&sd, u).unwrap();
            let d = g.degree(u);
            let sc = strong_cospectrality_blowup(&sup, d, 2).unwrap();
            let numeric = strong_cospectrality_numeric(&blown, u, order + u).unwrap();
            assert_eq!(sc.answer, numeric.answer, "{name} u={u}");
            let lpst = lpst_blowup2(&sup, d).unwrap();
            let lpgst = lpgst_blowup2(&sup, d).unwrap();
            if lpst.is_yes() {
                assert!(lpgst.is_yes(), "{name} u={u}");
                assert!(is_periodic(&support(&blown, u).unwrap()).unwrap().is_yes(), "{name} u={u}");
            }
            if lpgst.is_yes() {
                assert!(sc.is_yes(), "{name} u={u}");
            }
            // for integer supports the two transfer notions coincide
            if sup.integer_support && sc.is_yes() {
                assert_eq!(lpst.answer, lpgst.answer, "{name} u={u}");
            }
        }
    }
}

#[test]
fn constructions_are_sound() {
    // joins against the assembled blow-up
    let o = |n| make_family(&Family::Empty(n)).unwrap();
    let k = |m| make_family(&Family::Complete(m)).unwrap();
    let pairs = [
        (k(1), o(1)), (k(1), o(3)), (k(1), o(4)), (o(2), o(1)), (o(3), k(1)),
        (make_family(&Family::Cycle(4)).unwrap(), o(1)),
        (make_family(&Family::Cycle(5)).unwrap(), o(3)),
        (make_family(&Family::Path(3)).unwrap(), o(2)),
        (disjoint_union(&k(2), &k(2)), o(1)),
        (disjoint_union(&k(2), &k(2)), o(2)),
        (make_family(&Family::Hypercube(2)).unwrap(), k(3)),
    ];
    let mut yes = 0;
    for (g, h) in &pairs {
        let sd = spectrum(g);
        let joined = join(g, h);
        let sdj = spectrum(&joined);
        for u in 0..g.vertex_count() {
            let v = lpst_join(&support(&sd, u).unwrap(), g.degree(u), g.vertex_count(), h.vertex_count(), g.is_connected(), g.degree(u) == 0)
                .unwrap();
            let direct = lpst_blowup2(&support(&sdj, u).unwrap(), joined.degree(u)).unwrap();
            if v.is_yes() {
                yes += 1;
                assert!(direct.is_yes());
                assert!((v.time().unwrap() - direct.time().unwrap()).abs() < 1e-15);
            }
            // the join criterion is exact when its precondition holds
            if g.vertex_count() == 1 || !support(&sd, u).unwrap().contains_integer(g.degree(u) as i64) {
                assert_eq!(v.is_yes(), direct.is_yes(), "join u={u}");
            }
        }
    }
    assert!(yes >= 5);

    // products
    let factors = [k(2), k(2), k(2), make_family(&Family::Cycle(4)).unwrap()];
    let spectra: Vec<_> = factors.iter().map(spectrum).collect();
    let rf: Vec<RegularFactor> = factors.iter().zip(&spectra).map(|(g, s)| RegularFactor::of(g, s)).collect();
    for set in [&[0, 1, 2][..], &[0][..], &[0, 3][..], &[0, 1, 3][..]] {
        let chosen: Vec<RegularFactor> = set.iter().map(|&i| rf[i]).collect();
        let v = lpst_cartesian_factors(&chosen).unwrap();
        let product = set[1..].iter().fold(factors[set[0]].clone(), |acc, &i| cartesian_product(&acc, &factors[i]));
        let direct = lpst_blowup2(&support(&spectrum(&product), 0).unwrap(), product.degree(0)).unwrap();
        if v.is_yes() {
            assert!(direct.is_yes(), "{set:?}");
            assert_eq!(v.time(), direct.time());
        }
    }
    for (a, b) in [(4, 6), (2, 4), (2, 2), (3, 3), (4, 4)] {
        let (ga, gb) = (k(a), k(b));
        let (sa, sb) = (decompose(&adjacency(&ga)).unwrap(), decompose(&adjacency(&gb)).unwrap());
        let v = lpst_direct_factors(&[RegularFactor::of(&ga, &sa), RegularFactor::of(&gb, &sb)]).unwrap();
        let product = direct_product(&ga, &gb);
        if product.edge_count() == 0 {
            continue;
        }
        let sdp = spectrum(&product);
        for u in 0..product.vertex_count() {
            let direct = lpst_blowup2(&support(&sdp, u).unwrap(), product.degree(u)).unwrap();
            if v.is_yes() {
                assert!(direct.is_yes(), "K_{a} x K_{b} u={u}");
            }
        }
        if v.answer == Answer::Yes {
            let blown = blown_spectrum(&product, 2);
            let n = product.vertex_count();
            assert!(fidelity(&blown, 0, n, v.time().unwrap()) >= 1.0 - 1e-8);
        }
    }
}

#[test]
fn graph_core_identities() {
    for (name, g) in graphs().into_iter().take(30) {
        let b1 = blow_up(&g, 1).unwrap();
        assert_eq!(b1.edge_set(), g.edge_set(), "{name}");
        for n in 2..=3 {
            let b = blow_up(&g, n).unwrap();
            assert_eq!(b.edge_count(), n * n * g.edge_count());
            let blocks = twin_sets(&b);
            let block_of = |x: usize| blocks.iter().position(|t| t.vertices.contains(&x)).unwrap();
            let order = g.vertex_count();
            for u in 0..order {
                let t_u: Vec<usize> = (0..n).map(|j| j * order + u).collect();
                assert!(t_u.iter().all(|&x| block_of(x) == block_of(u)), "{name}");
                for v in 0..order {
                    if v != u {
                        assert_eq!(block_of(u) == block_of(v), are_false_twins(&g, u, v), "{name} {u} {v}");
                    }
                }
            }
        }
    }
}

#[test]
fn join_commutes_with_blowup() {
    let gs = graphs();
    for (i, (_, g)) in gs.iter().enumerate().step_by(7) {
        for (_, h) in gs.iter().skip(i % 5).step_by(11) {
            let (m, n) = (g.vertex_count(), h.vertex_count());
            let left = blow_up(&join(g, h), 2).unwrap();
            let right = join(&blow_up(g, 2).unwrap(), &blow_up(h, 2).unwrap());
            // (j, x) of B_2(G ∨ H) corresponds to (j, x) of B_2(G) or (j, x - m) of B_2(H)
            let map = |idx: usize| {
                let (j, x) = blowup_coords(idx, m + n);
                if x < m { j * m + x } else { 2 * m + j * n + (x - m) }
            };
            let mapped: std::collections::BTreeSet<(usize, usize)> =
                left.edges().into_iter().map(|(a, b)| (map(a).min(map(b)), map(a).max(map(b)))).collect();
            assert_eq!(mapped, right.edge_set());
        }
    }
}

#[test]
fn products_match_kronecker_formulas() {
    let gs = graphs();
    for (_, g) in gs.iter().step_by(9) {
        for (_, h) in gs.iter().step_by(13) {
            let (lg, lh) = (laplacian(g), laplacian(h));
            let (m, n) = (g.vertex_count(), h.vertex_count());
            let ksum = lg.kronecker(&nalgebra::DMatrix::identity(n, n)) + nalgebra::DMatrix::identity(m, m).kronecker(&lh);
            assert_eq!(laplacian(&cartesian_product(g, h)), ksum);
            assert_eq!(adjacency(&direct_product(g, h)), adjacency(g).kronecker(&adjacency(h)));
        }
    }
}

#[test]
fn blowup_spectral_shortcut_matches_direct() {
    for (name, g) in graphs().into_iter().step_by(3) {
        let sd = spectrum(&g);
        for n in 2..=3 {
            let shortcut = blowup_spectral(&sd, &g.degrees(), n).unwrap();
            let direct = blown_spectrum(&g, n);
            assert_eq!(shortcut.eigenspaces.len(), direct.eigenspaces.len(), "{name} n={n}");
            for (a, b) in shortcut.eigenspaces.iter().zip(&direct.eigenspaces) {
                assert!((a.value - b.value).abs() < 1e-7, "{name} n={n}");
                assert_eq!(a.multiplicity, b.multiplicity);
                assert!((&a.projection - &b.projection).amax() < 1e-9, "{name} n={n} at {}", a.value);
            }
        }
    }
}
