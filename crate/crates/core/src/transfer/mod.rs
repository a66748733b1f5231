//! Decision procedures for periodicity, strong cospectrality, LPST and LPGST
//! between the twin copies `(0,u)` and `(1,u)` of a blow-up, each returning a
//! [`Verdict`] with a machine-checkable certificate.

mod analyze;
mod blowup2;
mod constructions;
mod cospectral;
mod double_star;
mod path;
mod periodic;

pub use analyze::{analyze_pair, analyze_vertex};
pub use blowup2::{lpgst_blowup2, lpst_blowup2};
pub use constructions::{
    lpst_cartesian_factors, lpst_direct_factors, lpst_join, perturbation_plan, JoinBranch, RegularFactor,
};
pub use cospectral::{strong_cospectrality_blowup, strong_cospectrality_numeric};
pub use double_star::{double_star_site, lpgst_double_star, recognize_double_star, DoubleStarSite};
pub use path::{lpgst_path, path_support_indices, recognize_path, PathBranch, PathEvidence};
pub use periodic::{blowup_period, is_periodic};

use serde::Serialize;
use thiserror::Error;

use crate::arith::lattice::LatticeError;
use crate::arith::poly::CubicFactorization;
use crate::arith::ValuationTable;
use crate::graph::GraphError;
use crate::spectra::SpectraError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransferError {
    #[error("degenerate support: gcd of {{0}} (isolated vertex or K_1)")]
    DegenerateGcd,
    #[error("{op} needs at least {min} copies, got {got}")]
    TooFewCopies { op: &'static str, min: usize, got: usize },
    #[error("source and target must differ")]
    SameVertex,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("factor {0} is not regular")]
    NonRegularFactor(usize),
    #[error("blow-up size {0} is not a multiple of 4")]
    CopiesNotMultipleOfFour(usize),
    #[error("base vertex {0} has a non-integer eigenvalue support")]
    NonIntegerBaseSupport(usize),
    #[error("base vertices {0} and {1} are not false twins")]
    NotFalseTwins(usize, usize),
    #[error("matching edge ({0},{1}) leaves the twin block")]
    PairOutsideBlock(usize, usize),
    #[error("path needs at least 2 vertices and 1 <= u <= n, got n={n}, u={u}")]
    InvalidPathVertex { n: usize, u: usize },
    #[error("double star parameters must be positive")]
    InvalidDoubleStar,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Question {
    Periodic,
    StronglyCospectral,
    Lpst,
    Lpgst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Answer {
    Yes,
    No,
    Undecided,
}

/// A vertex, optionally addressed as copy `copy` of base vertex `vertex` in a blow-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Site {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub copy: Option<usize>,
    pub vertex: usize,
}

impl Site {
    pub fn plain(vertex: usize) -> Site {
        Site { copy: None, vertex }
    }

    pub fn copy(copy: usize, vertex: usize) -> Site {
        Site { copy: Some(copy), vertex }
    }
}

impl std::fmt::Display for Site {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.copy {
            Some(j) => write!(f, "({j},{})", self.vertex),
            None => write!(f, "{}", self.vertex),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Subject {
    Vertex { vertex: Site },
    Pair { source: Site, target: Site },
    Matching { pairs: Vec<[Site; 2]> },
    Product { factors: usize },
}

impl Subject {
    /// The twin copies `(0,u)` and `(1,u)`.
    pub fn twin_pair(u: usize) -> Subject {
        Subject::Pair { source: Site::copy(0, u), target: Site::copy(1, u) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductKind {
    Cartesian,
    Direct,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// Minimum period `2π/gcd`.
    Period { period: f64, gcd: u64 },
    NonIntegerSupport { eigenvalue: f64 },
    /// `σ⁺` (projections agree) and `σ⁻` (projections opposite).
    SignPartition { plus: Vec<f64>, minus: Vec<f64> },
    /// The pair lies in a twin set of this size (at least 3).
    TwinSetTooLarge { size: usize },
    /// In `B_2(G)` a copy of `u` can only be strongly cospectral with the other copy of `u`.
    OnlyTwinCopy { partner: Site },
    DegreeInSupport { degree: i64 },
    SupportMismatch { eigenvalue: f64 },
    ProjectionMismatch { eigenvalue: f64, deviation: f64 },
    /// Minimum transfer time `π/(2·gcd)`.
    TransferTime { time: f64, gcd: u64, valuations: ValuationTable },
    ValuationViolation { eigenvalue: i64, degree: i64, valuations: ValuationTable },
    /// Every integer relation `Σ m_j (λ_j - d) = 0` is an integer combination of `basis`, all of even sum.
    ParityProof { eigenvalues: Vec<i64>, degree: i64, basis: Vec<Vec<i64>> },
    /// `Σ m_j (λ_j - d) = 0` with `Σ m_j` odd.
    OddRelation { eigenvalues: Vec<i64>, degree: i64, coefficients: Vec<i64> },
    Path { n: usize, vertex: usize, branch: PathBranch, support: Vec<usize>, evidence: PathEvidence },
    DoubleStar {
        k: u64,
        l: u64,
        site: DoubleStarSite,
        polynomial: Vec<i64>,
        factorization: CubicFactorization,
        valuations: ValuationTable,
        reason: String,
    },
    Join {
        branch: JoinBranch,
        shifted: Vec<i64>,
        degree: i64,
        valuations: ValuationTable,
        #[serde(skip_serializing_if = "Option::is_none")]
        gcd: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        time: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        failure: Option<String>,
    },
    Product {
        product: ProductKind,
        degree: i64,
        valuations: Vec<ValuationTable>,
        #[serde(skip_serializing_if = "Option::is_none")]
        time: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        failure: Option<String>,
    },
    Perturbation { time: f64, pairs: Vec<[Site; 2]>, periodic: Vec<Site>, period: f64 },
    Precondition { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub question: Question,
    pub subject: Subject,
    pub answer: Answer,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn new(question: Question, subject: Subject, answer: Answer, certificate: Certificate) -> Verdict {
        Verdict { question, subject, answer, certificate }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    pub fn is_no(&self) -> bool {
        self.answer == Answer::No
    }

    /// The transfer time carried by a yes-certificate, if any.
    pub fn time(&self) -> Option<f64> {
        match &self.certificate {
            Certificate::TransferTime { time, .. } | Certificate::Perturbation { time, .. } => Some(*time),
            Certificate::Join { time, .. } | Certificate::Product { time, .. } => *time,
            _ => None,
        }
    }

    pub fn period(&self) -> Option<f64> {
        match &self.certificate {
            Certificate::Period { period, .. } => Some(*period),
            _ => None,
        }
    }

    fn precondition(question: Question, subject: Subject, answer: Answer, reason: impl Into<String>) -> Verdict {
        Verdict::new(question, subject, answer, Certificate::Precondition { reason: reason.into() })
    }
}

/// Integer eigenvalue support or the first non-integer member.
pub(crate) fn integer_support(sup: &crate::spectra::Support) -> Result<Vec<i64>, f64> {
    sup.entries.iter().map(|e| e.integer.ok_or(e.eigenvalue)).collect()
}
