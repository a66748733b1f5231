use std::f64::consts::PI;

use super::{integer_support, Answer, Certificate, Question, Subject, TransferError, Verdict};
use crate::arith::lattice::{integer_kernel, odd_sum_vector};
use crate::arith::{gcd_all, nu2, ValuationTable};
use crate::spectra::Support;

fn degree_in_support(question: Question, sup: &Support, d_u: usize) -> Option<Verdict> {
    sup.contains_integer(d_u as i64).then(|| {
        Verdict::precondition(
            question,
            Subject::twin_pair(sup.vertex),
            Answer::No,
            format!("d_u = {d_u} lies in the support, so (0,u) and (1,u) are not strongly cospectral"),
        )
    })
}

/// LPST between `(0,u)` and `(1,u)` in `B_2(G)`: holds iff `σ_u(G) ⊂ Z` and
/// `ν₂(d_u) < ν₂(λ)` for every nonzero `λ ∈ σ_u(G)`, at minimum time
/// `π/(2h)` with `h = gcd(σ_u ∖ {0} ∪ {d_u})`.
pub fn lpst_blowup2(sup: &Support, d_u: usize) -> Result<Verdict, TransferError> {
    let q = Question::Lpst;
    if let Some(v) = degree_in_support(q, sup, d_u) {
        return Ok(v);
    }
    let subject = Subject::twin_pair(sup.vertex);
    let values = match integer_support(sup) {
        Ok(v) => v,
        Err(eigenvalue) => return Ok(Verdict::new(q, subject, Answer::No, Certificate::NonIntegerSupport { eigenvalue })),
    };
    let d = d_u as i64;
    let valuations = ValuationTable::new(values.iter().copied().chain([d]));
    let vd = nu2(d);
    if let Some(&bad) = values.iter().find(|&&x| x != 0 && nu2(x) <= vd) {
        return Ok(Verdict::new(q, subject, Answer::No, Certificate::ValuationViolation { eigenvalue: bad, degree: d, valuations }));
    }
    let h = gcd_all(values.into_iter().chain([d]));
    if h == 0 {
        return Err(TransferError::DegenerateGcd);
    }
    let time = PI / (2.0 * h as f64);
    Ok(Verdict::new(q, subject, Answer::Yes, Certificate::TransferTime { time, gcd: h, valuations }))
}

/// LPGST between `(0,u)` and `(1,u)` in `B_2(G)` for integral supports: it
/// holds iff every integer vector `m` with `Σ m_j (λ_j - d_u) = 0` has even
/// coordinate sum. Parity is linear mod 2, so checking a basis of the
/// integer kernel suffices.
///
/// Non-integral supports are `undecided` here; paths and double stars are
/// settled by [`super::lpgst_path`] and [`super::lpgst_double_star`].
pub fn lpgst_blowup2(sup: &Support, d_u: usize) -> Result<Verdict, TransferError> {
    let q = Question::Lpgst;
    if let Some(v) = degree_in_support(q, sup, d_u) {
        return Ok(v);
    }
    let subject = Subject::twin_pair(sup.vertex);
    let values = match integer_support(sup) {
        Ok(v) => v,
        Err(_) => {
            return Ok(Verdict::precondition(
                q,
                subject,
                Answer::Undecided,
                "support has non-integer eigenvalues outside the path and double-star families",
            ))
        }
    };
    let d = d_u as i64;
    let row: Vec<i64> = values.iter().map(|&x| x - d).collect();
    let basis = integer_kernel(&[row], values.len())?;
    if let Some(m) = odd_sum_vector(&basis) {
        return Ok(Verdict::new(
            q,
            subject,
            Answer::No,
            Certificate::OddRelation { eigenvalues: values, degree: d, coefficients: m.clone() },
        ));
    }
    Ok(Verdict::new(q, subject, Answer::Yes, Certificate::ParityProof { eigenvalues: values, degree: d, basis }))
}
