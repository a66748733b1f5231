use super::{Answer, Certificate, Question, Site, Subject, TransferError, Verdict};
use crate::spectra::{support, SpectralData, Support};

/// Strong cospectrality of `(0,u)` and `(1,u)` in `B_n(G)`.
///
/// For `n >= 3` the copies of `u` form a twin set of size at least 3, which
/// rules out strong cospectrality. For `n = 2` the pair is strongly
/// cospectral iff `d_u ∉ σ_u(G)`, with `σ⁺ = 2σ_u(G)` and `σ⁻ = {2d_u}`.
pub fn strong_cospectrality_blowup(sup: &Support, d_u: usize, n: usize) -> Result<Verdict, TransferError> {
    if n < 2 {
        return Err(TransferError::TooFewCopies { op: "strong_cospectrality_blowup", min: 2, got: n });
    }
    let subject = Subject::twin_pair(sup.vertex);
    let q = Question::StronglyCospectral;
    if n >= 3 {
        return Ok(Verdict::new(q, subject, Answer::No, Certificate::TwinSetTooLarge { size: n }));
    }
    let d = d_u as i64;
    if sup.contains_integer(d) {
        return Ok(Verdict::new(q, subject, Answer::No, Certificate::DegreeInSupport { degree: d }));
    }
    let plus = sup.eigenvalues().into_iter().map(|x| 2.0 * x).collect();
    let minus = vec![2.0 * d_u as f64];
    Ok(Verdict::new(q, subject, Answer::Yes, Certificate::SignPartition { plus, minus }))
}

/// Strong cospectrality of `u` and `v` read directly off the projections:
/// `σ_u = σ_v` and `E_λ e_u = ±E_λ e_v` for every `λ` in the support.
pub fn strong_cospectrality_numeric(sd: &SpectralData, u: usize, v: usize) -> Result<Verdict, TransferError> {
    if u == v {
        return Err(TransferError::SameVertex);
    }
    let subject = Subject::Pair { source: Site::plain(u), target: Site::plain(v) };
    let q = Question::StronglyCospectral;
    let (su, sv) = (support(sd, u)?, support(sd, v)?);
    for (a, b) in [(&su, &sv), (&sv, &su)] {
        if let Some(e) = a.entries.iter().find(|e| !b.contains_value(e.eigenvalue)) {
            return Ok(Verdict::new(q, subject, Answer::No, Certificate::SupportMismatch { eigenvalue: e.eigenvalue }));
        }
    }
    let (mut plus, mut minus) = (Vec::new(), Vec::new());
    for entry in &su.entries {
        let e = &sd.find(entry.eigenvalue).expect("support value comes from sd").projection;
        let (cu, cv) = (e.column(u), e.column(v));
        let same = (cu - cv).norm();
        let opposite = (cu + cv).norm();
        if same < sd.tol.mat {
            plus.push(entry.eigenvalue);
        } else if opposite < sd.tol.mat {
            minus.push(entry.eigenvalue);
        } else {
            let deviation = same.min(opposite);
            return Ok(Verdict::new(q, subject, Answer::No, Certificate::ProjectionMismatch { eigenvalue: entry.eigenvalue, deviation }));
        }
    }
    Ok(Verdict::new(q, subject, Answer::Yes, Certificate::SignPartition { plus, minus }))
}
