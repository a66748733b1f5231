//! Simple undirected graphs and the constructions used throughout the crate:
//! blow-ups, Cartesian and direct products, joins, disjoint unions and
//! matchings added inside twin sets.
//!
//! Every construction fixes a row-major vertex ordering so that matrix
//! identities (Kronecker sums and products) hold entry for entry:
//!
//! ```text
//! blow_up(g, n):            (j, u)  ->  j * |V(g)| + u
//! cartesian/direct(g, h):   (a, b)  ->  a * |V(h)| + b
//! join/union(g, h):         g keeps 0..m, h is shifted to m..m+n
//! ```

mod catalog;
mod edgelist;
mod family;

pub use catalog::{catalog, CATALOG_MAX_ORDER};
pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list};
pub use family::{make_family, Family};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0},{1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("blow-up needs at least one copy, got {0}")]
    InvalidCopies(usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}`: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("matching edge ({0},{1}) is already an edge of the graph")]
    MatchingEdgePresent(usize, usize),
    #[error("matching edges share vertex {0}")]
    MatchingSharedVertex(usize),
    #[error("edge list line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// An undirected simple graph on vertices `0..vertex_count`.
///
/// Edges are stored as normalised pairs `(min, max)`; parallel edges collapse
/// and self-loops are rejected at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![BTreeSet::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, v, vertex_count));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Graph { adjacency, labels: BTreeMap::new() })
    }

    /// The edgeless graph O_n.
    pub fn empty(vertex_count: usize) -> Result<Self, GraphError> {
        Graph::new(vertex_count, std::iter::empty())
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Self {
        self.labels = labels.into_iter().filter(|(v, _)| *v < self.vertex_count()).collect();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edge_set().into_iter().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn neighbors(&self, u: usize) -> &BTreeSet<usize> {
        &self.adjacency[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|n| n.contains(&v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(BTreeSet::len).collect()
    }

    pub fn label(&self, u: usize) -> Option<&str> {
        self.labels.get(&u).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Display name of a vertex: its label if any, else its index.
    pub fn display_name(&self, u: usize) -> String {
        self.label(u).map_or_else(|| u.to_string(), str::to_string)
    }

    /// Returns the common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adjacency.iter().all(|n| n.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0i64; n]; n];
        for (u, v) in self.edges() {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    /// Relabels vertices through `perm` (old index -> new index). Used to
    /// compare edge sets of constructions that order vertices differently.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let edges = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v]));
        Graph::new(self.vertex_count(), edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Index of the copy `(copy, base)` inside `blow_up(g, n)` where `g` has
/// `base_order` vertices.
pub fn blowup_index(copy: usize, base: usize, base_order: usize) -> usize {
    copy * base_order + base
}

/// Inverse of [`blowup_index`]: `(copy, base)`.
pub fn blowup_coords(index: usize, base_order: usize) -> (usize, usize) {
    (index / base_order, index % base_order)
}

/// The blow-up B_n(G): every vertex is replaced by an independent set of `n`
/// copies, and `(l,u) ~ (m,v)` iff `u ~ v`.
pub fn blow_up(g: &Graph, n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidCopies(n));
    }
    let order = g.vertex_count();
    let base_edges = g.edges();
    let mut edges = Vec::with_capacity(n * n * base_edges.len());
    for l in 0..n {
        for m in 0..n {
            for &(u, v) in &base_edges {
                edges.push((blowup_index(l, u, order), blowup_index(m, v, order)));
            }
        }
    }
    let labels = (0..n)
        .flat_map(|j| (0..order).map(move |u| (j, u)))
        .map(|(j, u)| (blowup_index(j, u, order), format!("({},{})", j, g.display_name(u))))
        .collect();
    Ok(Graph::new(n * order, edges)?.with_labels(labels))
}

/// The Cartesian product G□H with `(a,b) -> a*|V(H)| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (m, n) = (g.vertex_count(), h.vertex_count());
    let mut edges = Vec::new();
    for a in 0..m {
        for (b, b2) in h.edges() {
            edges.push((a * n + b, a * n + b2));
        }
    }
    for (a, a2) in g.edges() {
        for b in 0..n {
            edges.push((a * n + b, a2 * n + b));
        }
    }
    Graph::new(m * n, edges).expect("product of nonempty graphs is valid")
}

/// The direct (tensor) product G×H: `(a,b) ~ (a',b')` iff `a ~ a'` and `b ~ b'`.
pub fn direct_product(g: &Graph, h: &Graph) -> Graph {
    let n = h.vertex_count();
    let mut edges = Vec::new();
    for (a, a2) in g.edges() {
        for (b, b2) in h.edges() {
            edges.push((a * n + b, a2 * n + b2));
            edges.push((a * n + b2, a2 * n + b));
        }
    }
    Graph::new(g.vertex_count() * n, edges).expect("product of nonempty graphs is valid")
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let m = g.vertex_count();
    let edges = g.edges().into_iter().chain(h.edges().into_iter().map(|(u, v)| (u + m, v + m)));
    Graph::new(m + h.vertex_count(), edges).expect("union of valid graphs is valid")
}

/// The join G∨H: disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (m, n) = (g.vertex_count(), h.vertex_count());
    let cross = (0..m).flat_map(|u| (0..n).map(move |w| (u, m + w)));
    let edges = disjoint_union(g, h).edges().into_iter().chain(cross);
    Graph::new(m + n, edges).expect("join of valid graphs is valid")
}

/// How the members of a twin block relate to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    Singleton,
    /// Pairwise non-adjacent with equal open neighbourhoods.
    FalseTwins,
    /// Pairwise adjacent with equal closed neighbourhoods.
    TrueTwins,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinBlock {
    pub vertices: Vec<usize>,
    pub kind: TwinKind,
}

/// Partitions the vertices into maximal twin sets, where `u` and `v` are twins
/// iff `N(u) \ {v} = N(v) \ {u}`.
///
/// A vertex cannot have a false twin and a true twin at the same time, so the
/// twin relation is an equivalence and blocks are never mixed.
pub fn twin_sets(g: &Graph) -> Vec<TwinBlock> {
    let n = g.vertex_count();
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<TwinBlock> = Vec::new();
    for u in 0..n {
        if block_of[u] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        block_of[u] = id;
        let mut members = vec![u];
        for (v, slot) in block_of.iter_mut().enumerate().skip(u + 1) {
            if *slot == usize::MAX && are_twins(g, u, v) {
                *slot = id;
                members.push(v);
            }
        }
        let kind = match members.as_slice() {
            [_] => TwinKind::Singleton,
            [a, b, ..] if g.has_edge(*a, *b) => TwinKind::TrueTwins,
            _ => TwinKind::FalseTwins,
        };
        blocks.push(TwinBlock { vertices: members, kind });
    }
    blocks
}

pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let nu = g.neighbors(u).iter().filter(|&&x| x != v);
    let nv = g.neighbors(v).iter().filter(|&&x| x != u);
    nu.eq(nv)
}

pub fn are_false_twins(g: &Graph, u: usize, v: usize) -> bool {
    u != v && !g.has_edge(u, v) && are_twins(g, u, v)
}

/// A set of edges with pairwise disjoint endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for x in [u, v] {
                if !seen.insert(x) {
                    return Err(GraphError::MatchingSharedVertex(x));
                }
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }
}

/// Adds the matching edges to `g`; labels are preserved.
pub fn add_matching(g: &Graph, matching: &Matching) -> Result<Graph, GraphError> {
    let n = g.vertex_count();
    for &(u, v) in matching.edges() {
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u, v, n));
        }
        if g.has_edge(u, v) {
            return Err(GraphError::MatchingEdgePresent(u, v));
        }
    }
    let edges = g.edges().into_iter().chain(matching.edges().iter().copied());
    Ok(Graph::new(n, edges)?.with_labels(g.labels().clone()))
}
