use std::f64::consts::PI;

use super::{integer_support, Answer, Certificate, Question, Site, Subject, TransferError, Verdict};
use crate::arith::gcd_all;
use crate::spectra::Support;

/// A vertex is periodic iff its support is integral; the minimum period is
/// `2π/g` with `g = gcd(σ_u ∖ {0})`.
pub fn is_periodic(sup: &Support) -> Result<Verdict, TransferError> {
    let subject = Subject::Vertex { vertex: Site::plain(sup.vertex) };
    let values = match integer_support(sup) {
        Ok(v) => v,
        Err(eigenvalue) => {
            return Ok(Verdict::new(Question::Periodic, subject, Answer::No, Certificate::NonIntegerSupport { eigenvalue }))
        }
    };
    let g = gcd_all(values);
    if g == 0 {
        return Err(TransferError::DegenerateGcd);
    }
    Ok(Verdict::new(Question::Periodic, subject, Answer::Yes, Certificate::Period { period: 2.0 * PI / g as f64, gcd: g }))
}

/// Periodicity of `(j,u)` in `B_n(G)`, from the support of `u` in `G`.
///
/// For `n >= 2` the support is `n·σ_u ∪ {n·d_u}`, so the minimum period is
/// `2π/(n·h)` with `h = gcd(σ_u ∖ {0} ∪ {d_u})`. For `n = 1` the graph is `G`
/// itself and the gcd excludes `d_u`.
pub fn blowup_period(sup: &Support, d_u: usize, n: usize) -> Result<Verdict, TransferError> {
    if n == 0 {
        return Err(TransferError::TooFewCopies { op: "blowup_period", min: 1, got: 0 });
    }
    let subject = Subject::Vertex { vertex: Site::copy(0, sup.vertex) };
    let values = match integer_support(sup) {
        Ok(v) => v,
        Err(eigenvalue) => {
            return Ok(Verdict::new(Question::Periodic, subject, Answer::No, Certificate::NonIntegerSupport { eigenvalue }))
        }
    };
    let h = if n == 1 { gcd_all(values) } else { gcd_all(values.into_iter().chain([d_u as i64])) };
    if h == 0 {
        return Err(TransferError::DegenerateGcd);
    }
    let gcd = h * n as u64;
    Ok(Verdict::new(Question::Periodic, subject, Answer::Yes, Certificate::Period { period: 2.0 * PI / gcd as f64, gcd }))
}
