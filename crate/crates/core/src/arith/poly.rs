//! Dense integer polynomials, coefficients in ascending degree order.

use std::collections::BTreeSet;

pub type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn mul(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn sub(a: &[i64], b: &[i64]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n).map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0)).collect();
    trim(out)
}

pub fn eval(p: &[i64], x: i64) -> i128 {
    p.iter().rev().fold(0i128, |acc, &c| acc * x as i128 + c as i128)
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub fn rem_monic(a: &[i64], m: &[i64]) -> Poly {
    assert_eq!(m.last(), Some(&1), "modulus must be monic");
    let deg = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > deg {
        let lead = r.pop().unwrap();
        let shift = r.len() - deg;
        for (i, &c) in m[..deg].iter().enumerate() {
            r[shift + i] -= lead * c;
        }
    }
    r.resize(deg, 0);
    r
}

/// Exact quotient of `a` by the monic `m`; panics if the division leaves a remainder.
pub fn div_monic(a: &[i64], m: &[i64]) -> Poly {
    let deg = m.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0; a.len().saturating_sub(deg)];
    while r.len() > deg {
        let lead = r.pop().unwrap();
        let shift = r.len() - deg;
        q[shift] = lead;
        for (i, &c) in m[..deg].iter().enumerate() {
            r[shift + i] -= lead * c;
        }
    }
    assert!(r.iter().all(|&c| c == 0), "inexact polynomial division");
    trim(q)
}

/// The cyclotomic polynomial Φ_m, from `x^m - 1 = Π_{d | m} Φ_d`.
pub fn cyclotomic(m: usize) -> Poly {
    assert!(m >= 1);
    let mut p: Poly = vec![0; m + 1];
    p[0] = -1;
    p[m] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        p = div_monic(&p, &cyclotomic(d));
    }
    p
}

/// The cubic factor of the double-star characteristic polynomial,
/// `x(x-k-1)(x-l-1) - (x-1)(x-k-1) - (x-1)(x-l-1)`, expanded.
pub fn double_star_poly(k: u64, l: u64) -> Poly {
    let (k1, l1) = (k as i64 + 1, l as i64 + 1);
    let x = [0, 1];
    let x_minus = |c: i64| vec![-c, 1];
    let first = mul(&mul(&x, &x_minus(k1)), &x_minus(l1));
    let second = mul(&x_minus(1), &x_minus(k1));
    let third = mul(&x_minus(1), &x_minus(l1));
    sub(&sub(&first, &second), &third)
}

/// Integer roots of a polynomial with integer coefficients: zero (if the
/// constant term vanishes) plus every divisor of the lowest nonzero
/// coefficient that evaluates to zero.
pub fn integer_roots(p: &[i64]) -> BTreeSet<i64> {
    let mut roots = BTreeSet::new();
    let Some(low) = p.iter().position(|&c| c != 0) else {
        return roots;
    };
    if low > 0 {
        roots.insert(0);
    }
    let c = p[low].unsigned_abs();
    let mut d = 1u64;
    while d * d <= c {
        if c.is_multiple_of(d) {
            for q in [d, c / d] {
                for r in [q as i64, -(q as i64)] {
                    if eval(p, r) == 0 {
                        roots.insert(r);
                    }
                }
            }
        }
        d += 1;
    }
    roots
}

/// Outcome of the rational-root test on a monic integer cubic.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CubicFactorization {
    Irreducible,
    Reducible { roots: Vec<i64> },
}

impl CubicFactorization {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, CubicFactorization::Irreducible)
    }
}

/// A monic cubic over Z is irreducible over Q iff it has no rational root,
/// and rational roots of monic integer polynomials are integers dividing the
/// constant term.
pub fn cubic_irreducible_over_q(p: &[i64]) -> CubicFactorization {
    assert!(p.len() == 4 && p[3] == 1, "expected a monic cubic");
    let roots = integer_roots(p);
    if roots.is_empty() {
        CubicFactorization::Irreducible
    } else {
        CubicFactorization::Reducible { roots: roots.into_iter().collect() }
    }
}
