//! Continuous-time quantum walk `U(t) = exp(-itL)`, synthesized from spectral data.

use std::io::{self, Write};

use nalgebra::{Complex, DMatrix};
use rayon::prelude::*;

use crate::spectra::{SpectralData, Support};

/// `Σ_λ exp(-iλt) E_λ`.
pub fn evolve(sd: &SpectralData, t: f64) -> DMatrix<Complex<f64>> {
    let n = sd.order;
    let mut u = DMatrix::<Complex<f64>>::zeros(n, n);
    for e in &sd.eigenspaces {
        let phase = Complex::from_polar(1.0, -e.value * t);
        u.zip_apply(&e.projection, |x, p| *x += phase * p);
    }
    u
}

/// The single entry `U(t)_{target,source}`, without forming the whole matrix.
pub fn amplitude(sd: &SpectralData, source: usize, target: usize, t: f64) -> Complex<f64> {
    sd.eigenspaces
        .iter()
        .map(|e| Complex::from_polar(e.projection[(target, source)], -e.value * t))
        .sum()
}

pub fn fidelity(sd: &SpectralData, source: usize, target: usize, t: f64) -> f64 {
    amplitude(sd, source, target, t).norm_sqr()
}

#[derive(Debug, Clone, PartialEq)]
pub struct FidelityTrace {
    pub source: usize,
    pub target: usize,
    pub times: Vec<f64>,
    pub fidelities: Vec<f64>,
    pub amplitudes: Vec<Complex<f64>>,
}

impl FidelityTrace {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Index and value of the largest sampled fidelity (first one on ties).
    pub fn peak(&self) -> Option<(usize, f64)> {
        self.fidelities.iter().copied().enumerate().fold(None, |best, (i, f)| match best {
            Some((_, b)) if b >= f => best,
            _ => Some((i, f)),
        })
    }

    /// CSV with header `t,fidelity,re,im` and 17 significant digits per float.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "t,fidelity,re,im")?;
        for ((t, f), a) in self.times.iter().zip(&self.fidelities).zip(&self.amplitudes) {
            writeln!(w, "{t:.16e},{f:.16e},{:.16e},{:.16e}", a.re, a.im)?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is ASCII")
    }
}

/// Samples `steps` evenly spaced times in `[0, t_max]`. Panics if `steps < 2`.
pub fn fidelity_trace(sd: &SpectralData, source: usize, target: usize, t_max: f64, steps: usize) -> FidelityTrace {
    assert!(steps >= 2, "fidelity_trace needs at least 2 steps");
    let times: Vec<f64> = (0..steps).map(|k| t_max * k as f64 / (steps - 1) as f64).collect();
    let amplitudes: Vec<Complex<f64>> = times.par_iter().map(|&t| amplitude(sd, source, target, t)).collect();
    let fidelities = amplitudes.iter().map(|a| a.norm_sqr()).collect();
    FidelityTrace { source, target, times, fidelities, amplitudes }
}

/// `U(t)_{(1,u),(0,u)}` in `B_n(G)` from the support of `u` in `G`:
/// `(1/n) Σ_j [exp(-inλ_j t) - exp(-in d_u t)] (E_j)_{uu}`.
pub fn blowup_amplitude(sup: &Support, d_u: usize, n: usize, t: f64) -> Complex<f64> {
    let nf = n as f64;
    let degree_phase = Complex::from_polar(1.0, -nf * d_u as f64 * t);
    let sum: Complex<f64> =
        sup.entries.iter().map(|e| (Complex::from_polar(1.0, -nf * e.eigenvalue * t) - degree_phase) * e.weight).sum();
    sum / nf
}

/// Coarse grid over `[0, t_max]` followed by golden-section refinement around
/// the best grid point. Evidence only: a high value is not a proof of pretty
/// good state transfer. Panics if `coarse_steps < 16`.
pub fn max_fidelity_search(
    sd: &SpectralData,
    source: usize,
    target: usize,
    t_max: f64,
    coarse_steps: usize,
    refine_iters: usize,
) -> (f64, f64) {
    assert!(coarse_steps >= 16, "max_fidelity_search needs at least 16 coarse steps");
    let trace = fidelity_trace(sd, source, target, t_max, coarse_steps);
    let (best, _) = trace.peak().expect("trace is non-empty");
    let h = t_max / (coarse_steps - 1) as f64;
    let f = |t: f64| fidelity(sd, source, target, t);
    let (mut a, mut b) = ((trace.times[best] - h).max(0.0), (trace.times[best] + h).min(t_max));
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let (mut c, mut d) = (b - r * (b - a), a + r * (b - a));
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..refine_iters {
        if b - a <= 1e-10 * t_max {
            break;
        }
        if fc >= fd {
            (b, d, fd) = (d, c, fc);
            c = b - r * (b - a);
            fc = f(c);
        } else {
            (a, c, fc) = (c, d, fd);
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    let mid = (a + b) / 2.0;
    [(trace.times[best], trace.fidelities[best]), (mid, f(mid))]
        .into_iter()
        .fold((0.0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blow_up, make_family, Family};
    use crate::spectra::{laplacian_spectrum, support};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn sd(f: Family) -> SpectralData {
        laplacian_spectrum(&make_family(&f).unwrap()).unwrap()
    }

    #[test]
    fn identity_and_unitarity() {
        let s = sd(Family::Cycle(5));
        let u0 = evolve(&s, 0.0);
        assert!((u0 - DMatrix::identity(5, 5)).norm() < 1e-9);
        for t in [0.3, 1.7, 4.0] {
            let prod = evolve(&s, t) * evolve(&s, -t);
            assert!((prod - DMatrix::identity(5, 5)).norm() < 1e-9);
            let u = evolve(&s, t);
            for c in 0..5 {
                assert!((u.column(c).norm() - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn k2_transfer() {
        let u = evolve(&sd(Family::Complete(2)), FRAC_PI_2);
        assert!((u[(0, 1)].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sign_convention_only_conjugates() {
        let s = sd(Family::Path(4));
        for t in [0.4, 2.2] {
            let minus = evolve(&s, t);
            let plus = evolve(&s, -t);
            for (a, b) in minus.iter().zip(plus.iter()) {
                assert!((a.conj() - b).norm() < 1e-12);
                assert!((a.norm() - b.norm()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn c4_antipodal_trace() {
        let s = sd(Family::Cycle(4));
        let trace = fidelity_trace(&s, 0, 2, FRAC_PI_2, 33);
        assert_eq!(trace.len(), 33);
        assert!(trace.fidelities[32] >= 1.0 - 1e-10);
        assert!(trace.fidelities[0] < 1e-20);
        assert!(trace.fidelities.iter().all(|&f| f <= 1.0 + 1e-12));
        let csv = trace.to_csv();
        assert!(csv.starts_with("t,fidelity,re,im\n0.0000000000000000e0,"));
        assert_eq!(csv.lines().count(), 34);
    }

    #[test]
    fn no_transfer_in_b2_k3() {
        let g = blow_up(&make_family(&Family::Complete(3)).unwrap(), 2).unwrap();
        let s = laplacian_spectrum(&g).unwrap();
        let trace = fidelity_trace(&s, 0, 3, 2.0 * PI, 2048);
        assert!(trace.peak().unwrap().1 < 1.0 - 1e-3);
    }

    #[test]
    fn amplitude_closed_form() {
        let k2 = make_family(&Family::Complete(2)).unwrap();
        let sup = support(&laplacian_spectrum(&k2).unwrap(), 0).unwrap();
        assert_eq!(blowup_amplitude(&sup, 1, 2, 0.0), Complex::new(0.0, 0.0));
        let c4 = laplacian_spectrum(&blow_up(&k2, 2).unwrap()).unwrap();
        for t in [FRAC_PI_2 / 2.0, 0.9, 2.5] {
            let ours = blowup_amplitude(&sup, 1, 2, t);
            assert!((ours - amplitude(&c4, 0, 2, t)).norm() < 1e-10);
        }
        // LPST in C_4 happens at π/2; at π/4 the two copies are in equal superposition
        assert!((blowup_amplitude(&sup, 1, 2, FRAC_PI_2).norm() - 1.0).abs() < 1e-12);
        assert!((blowup_amplitude(&sup, 1, 2, FRAC_PI_2 / 2.0).norm() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn search_examples() {
        let (t, f) = max_fidelity_search(&sd(Family::Cycle(4)), 0, 2, PI, 64, 200);
        assert!(f >= 1.0 - 1e-9);
        assert!((t - FRAC_PI_2).abs() < 1e-4);
        let k3 = sd(Family::Complete(3));
        let (_, f) = max_fidelity_search(&k3, 0, 1, 2.0 * PI / 3.0, 64, 200);
        // |(1 - e^{-3it})/3|² = (2 - 2cos 3t)/9 peaks at 4/9
        assert!(f <= 8.0 / 9.0 + 1e-6);
        assert!((f - 4.0 / 9.0).abs() < 1e-9);
        let (t, f) = max_fidelity_search(&k3, 1, 1, 1.0, 16, 50);
        assert_eq!((t, f), (0.0, 1.0));
    }
}
