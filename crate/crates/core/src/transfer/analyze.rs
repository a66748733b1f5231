use super::{
    blowup_period, lpgst_blowup2, lpgst_double_star, lpgst_path, lpst_blowup2, recognize_double_star, recognize_path,
    strong_cospectrality_blowup, strong_cospectrality_numeric, Answer, Certificate, Question, Site, Subject,
    TransferError, Verdict,
};
use crate::graph::{blowup_coords, Graph};
use crate::spectra::{support, SpectralData};

/// All four questions for the copies `(0,u)` and `(1,u)` of `B_n(g)`, given
/// the spectral data of `g` itself. For `n = 1` only periodicity of `u` is reported.
pub fn analyze_vertex(g: &Graph, sd: &SpectralData, n: usize, u: usize) -> Result<Vec<Verdict>, TransferError> {
    if u >= g.vertex_count() {
        return Err(TransferError::VertexOutOfRange(u));
    }
    let sup = support(sd, u)?;
    let d = g.degree(u);
    let periodic = match blowup_period(&sup, d, n) {
        Ok(v) => v,
        Err(TransferError::DegenerateGcd) => Verdict::precondition(
            Question::Periodic,
            Subject::Vertex { vertex: Site::copy(0, u) },
            Answer::Undecided,
            "support is {0}: the walk never leaves this vertex, so there is no minimum period",
        ),
        Err(e) => return Err(e),
    };
    if n == 1 {
        return Ok(vec![periodic]);
    }
    let cospectral = strong_cospectrality_blowup(&sup, d, n)?;
    if n >= 3 {
        let refuted = |q| Verdict { question: q, ..cospectral.clone() };
        return Ok(vec![periodic, cospectral.clone(), refuted(Question::Lpst), refuted(Question::Lpgst)]);
    }
    let lpst = lpst_blowup2(&sup, d)?;
    let mut lpgst = lpgst_blowup2(&sup, d)?;
    if lpgst.answer == Answer::Undecided {
        if let Some(position) = recognize_path(g) {
            lpgst = lpgst_path(g.vertex_count(), position[u])?;
        } else if let Some((k, l, sites)) = recognize_double_star(g) {
            lpgst = lpgst_double_star(k as u64, l as u64, sites[u])?;
        }
        lpgst.subject = Subject::twin_pair(u);
    }
    Ok(vec![periodic, cospectral, lpst, lpgst])
}

/// All four questions for an arbitrary pair of vertices of `B_n(g)`, given as
/// blow-up indices `j·|V(g)| + u`.
pub fn analyze_pair(g: &Graph, sd: &SpectralData, n: usize, a: usize, b: usize) -> Result<Vec<Verdict>, TransferError> {
    let order = g.vertex_count();
    for x in [a, b] {
        if x >= n * order {
            return Err(TransferError::VertexOutOfRange(x));
        }
    }
    if a == b {
        return Err(TransferError::SameVertex);
    }
    let ((j, u), (k, v)) = (blowup_coords(a, order), blowup_coords(b, order));
    let (source, target) = (Site::copy(j, u), Site::copy(k, v));
    let pair = Subject::Pair { source, target };
    if u == v {
        let mut verdicts = analyze_vertex(g, sd, n, u)?;
        for verdict in &mut verdicts {
            verdict.subject = match verdict.subject {
                Subject::Vertex { .. } => Subject::Vertex { vertex: source },
                _ => pair.clone(),
            };
        }
        return Ok(verdicts);
    }
    let mut periodic = analyze_vertex(g, sd, 1.max(n), u)?.remove(0);
    periodic.subject = Subject::Vertex { vertex: source };
    let cospectral = if n >= 3 {
        Verdict::new(Question::StronglyCospectral, pair.clone(), Answer::No, Certificate::TwinSetTooLarge { size: n })
    } else if n == 2 {
        let partner = Site::copy(1 - j, u);
        Verdict::new(Question::StronglyCospectral, pair.clone(), Answer::No, Certificate::OnlyTwinCopy { partner })
    } else {
        let mut v = strong_cospectrality_numeric(sd, u, v)?;
        v.subject = pair.clone();
        v
    };
    let follow = |q| match cospectral.answer {
        Answer::No => Verdict { question: q, ..cospectral.clone() },
        _ => Verdict::precondition(q, pair.clone(), Answer::Undecided, "transfer between distinct base vertices is outside the blow-up criteria"),
    };
    Ok(vec![periodic, cospectral.clone(), follow(Question::Lpst), follow(Question::Lpgst)])
}
