use std::fmt;
use std::str::FromStr;

use super::{cartesian_product, direct_product, disjoint_union, join, Graph, GraphError};

/// The closed catalog of named graphs, plus the binary constructions that
/// combine them. Parsed from strings such as `star(3)`, `double-star(1,2)` or
/// `join(cone(union(complete(2),complete(2))),empty(1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// K_m
    Complete(usize),
    /// P_n, vertices in path order.
    Path(usize),
    /// C_n, n >= 3.
    Cycle(usize),
    /// Q_d on bit strings; `u ~ v` iff they differ in one bit.
    Hypercube(usize),
    /// K_{1,n}; vertex 0 is the centre.
    Star(usize),
    /// S_{k,l}: hubs 0 (with k leaves) and 1 (with l leaves), then the k
    /// leaves of hub 0, then the l leaves of hub 1.
    DoubleStar(usize, usize),
    /// O_n, no edges.
    Empty(usize),
    /// K_1 ∨ H with the apex at vertex 0.
    Cone(Box<Family>),
    Join(Box<Family>, Box<Family>),
    Union(Box<Family>, Box<Family>),
    Cartesian(Box<Family>, Box<Family>),
    Direct(Box<Family>, Box<Family>),
}

impl Family {
    /// Builds a leaf family from a name and its integer parameters.
    pub fn from_name(name: &str, params: &[i64]) -> Result<Family, GraphError> {
        let name = canonical_name(name).ok_or_else(|| GraphError::UnknownFamily(name.to_string()))?;
        let expected = if name == "double-star" { 2 } else { 1 };
        if matches!(name, "cone" | "join" | "union" | "cartesian" | "direct") {
            return Err(GraphError::InvalidParameter {
                family: name.into(),
                reason: "takes graph arguments, not integers".into(),
            });
        }
        if params.len() != expected {
            return Err(GraphError::InvalidParameter {
                family: name.into(),
                reason: format!("expected {expected} parameter(s), got {}", params.len()),
            });
        }
        let p = params
            .iter()
            .map(|&x| {
                usize::try_from(x).ok().filter(|&x| x > 0).ok_or_else(|| GraphError::InvalidParameter {
                    family: name.into(),
                    reason: format!("parameter {x} must be positive"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(match name {
            "complete" => Family::Complete(p[0]),
            "path" => Family::Path(p[0]),
            "cycle" => Family::Cycle(p[0]),
            "hypercube" => Family::Hypercube(p[0]),
            "star" => Family::Star(p[0]),
            "double-star" => Family::DoubleStar(p[0], p[1]),
            "empty" => Family::Empty(p[0]),
            _ => unreachable!(),
        })
    }
}

fn canonical_name(name: &str) -> Option<&'static str> {
    Some(match name.to_ascii_lowercase().as_str() {
        "complete" | "k" => "complete",
        "path" | "p" => "path",
        "cycle" | "c" => "cycle",
        "hypercube" | "cube" | "q" => "hypercube",
        "star" => "star",
        "double-star" | "doublestar" | "s" => "double-star",
        "empty" | "o" => "empty",
        "cone" => "cone",
        "join" => "join",
        "union" => "union",
        "cartesian" => "cartesian",
        "direct" => "direct",
        _ => return None,
    })
}

/// Builds a member of a named family, e.g. `make_family(&Family::Path(3))`.
pub fn make_family(family: &Family) -> Result<Graph, GraphError> {
    let invalid = |reason: &str| GraphError::InvalidParameter { family: family.to_string(), reason: reason.into() };
    match *family {
        Family::Complete(m) => {
            let edges = (0..m).flat_map(|u| ((u + 1)..m).map(move |v| (u, v)));
            Graph::new(m, edges)
        }
        Family::Path(n) => Graph::new(n, (1..n).map(|v| (v - 1, v))),
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("a cycle needs at least 3 vertices"));
            }
            Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Hypercube(d) => {
            if d > 16 {
                return Err(invalid("dimension too large"));
            }
            let n = 1usize << d;
            let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|(u, v)| u < v);
            Graph::new(n, edges)
        }
        Family::Star(n) => Graph::new(n + 1, (1..=n).map(|v| (0, v))),
        Family::DoubleStar(k, l) => {
            let leaves_k = (0..k).map(|i| (0, 2 + i));
            let leaves_l = (0..l).map(|i| (1, 2 + k + i));
            Graph::new(2 + k + l, std::iter::once((0, 1)).chain(leaves_k).chain(leaves_l))
        }
        Family::Empty(n) => Graph::empty(n),
        Family::Cone(ref h) => Ok(join(&Graph::empty(1)?, &make_family(h)?)),
        Family::Join(ref a, ref b) => Ok(join(&make_family(a)?, &make_family(b)?)),
        Family::Union(ref a, ref b) => Ok(disjoint_union(&make_family(a)?, &make_family(b)?)),
        Family::Cartesian(ref a, ref b) => Ok(cartesian_product(&make_family(a)?, &make_family(b)?)),
        Family::Direct(ref a, ref b) => Ok(direct_product(&make_family(a)?, &make_family(b)?)),
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(m) => write!(f, "complete({m})"),
            Family::Path(n) => write!(f, "path({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Hypercube(d) => write!(f, "hypercube({d})"),
            Family::Star(n) => write!(f, "star({n})"),
            Family::DoubleStar(k, l) => write!(f, "double-star({k},{l})"),
            Family::Empty(n) => write!(f, "empty({n})"),
            Family::Cone(h) => write!(f, "cone({h})"),
            Family::Join(a, b) => write!(f, "join({a},{b})"),
            Family::Union(a, b) => write!(f, "union({a},{b})"),
            Family::Cartesian(a, b) => write!(f, "cartesian({a},{b})"),
            Family::Direct(a, b) => write!(f, "direct({a},{b})"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0, text: s };
        let family = parser.family()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(family)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> GraphError {
        GraphError::InvalidParameter { family: self.text.to_string(), reason: format!("{reason} at offset {}", self.pos) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'-') {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn family(&mut self) -> Result<Family, GraphError> {
        let raw = self.word().to_string();
        let name = canonical_name(&raw).ok_or_else(|| GraphError::UnknownFamily(raw.clone()))?;
        if !self.eat(b'(') {
            return Err(self.error("expected `(`"));
        }
        let family = match name {
            "cone" => Family::Cone(Box::new(self.family()?)),
            "join" | "union" | "cartesian" | "direct" => {
                let a = Box::new(self.family()?);
                if !self.eat(b',') {
                    return Err(self.error("expected `,`"));
                }
                let b = Box::new(self.family()?);
                match name {
                    "join" => Family::Join(a, b),
                    "union" => Family::Union(a, b),
                    "cartesian" => Family::Cartesian(a, b),
                    _ => Family::Direct(a, b),
                }
            }
            _ => {
                let mut params = Vec::new();
                loop {
                    let tok = self.word().to_string();
                    let v: i64 = tok.parse().map_err(|_| self.error("expected an integer"))?;
                    params.push(v);
                    if !self.eat(b',') {
                        break;
                    }
                }
                Family::from_name(name, &params)?
            }
        };
        if !self.eat(b')') {
            return Err(self.error("expected `)`"));
        }
        Ok(family)
    }
}
