//! Simple undirected graphs: construction, text input, named families and
//! random connected samples.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default number of G(n, p) draws before [`random_connected_gnp`] gives up.
pub const DEFAULT_RETRY_CAP: usize = 10_000;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`, so iteration
/// order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// The edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        Ok(Graph {
            n,
            edges: BTreeSet::new(),
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`, rejecting loops, duplicates and out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Serializes to the edge-list text format accepted by [`parse_edgelist`].
    pub fn to_edgelist(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::to_graph6(self))
    }
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-indexed endpoints. Blank lines and lines starting with `#` are
/// ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::malformed(1, "missing \"n m\" header"))?;
    let (n, declared) = parse_pair(hline, header)?;
    let mut g = Graph::empty(n).map_err(|_| Error::malformed(hline, "n must be at least 1"))?;

    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        g.add_edge(u, v)?;
    }
    if g.m() != declared {
        return Err(Error::EdgeCountMismatch {
            declared,
            found: g.m(),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut tokens = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = tokens.next().ok_or_else(|| {
            Error::malformed(line, format!("expected two integers, got {text:?}"))
        })?;
        tok.parse()
            .map_err(|_| Error::malformed(line, format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if tokens.next().is_some() {
        return Err(Error::malformed(
            line,
            format!("trailing tokens in {text:?}"),
        ));
    }
    Ok((a, b))
}

/// Named graph families with deterministic vertex labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Star on `n` vertices with centre 0.
    Star(usize),
    Complete(usize),
    /// `K_{a,b}`: parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
}

/// Family names without their size parameters; used to sweep a family over a
/// range of vertex counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Star,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
    ];

    /// The member of this family with `n` vertices. Complete bipartite graphs
    /// are split as evenly as possible, `K_{floor(n/2), ceil(n/2)}`.
    pub fn with_order(self, n: usize) -> Family {
        match self {
            FamilyKind::Path => Family::Path(n),
            FamilyKind::Cycle => Family::Cycle(n),
            FamilyKind::Star => Family::Star(n),
            FamilyKind::Complete => Family::Complete(n),
            FamilyKind::CompleteBipartite => Family::CompleteBipartite(n / 2, n - n / 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

pub fn generate_family(family: Family) -> Result<Graph> {
    let invalid = |msg: &str| Err(Error::InvalidParameter(format!("{family:?}: {msg}")));
    match family {
        Family::Path(n) => {
            if n == 0 {
                return invalid("needs at least one vertex");
            }
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return invalid("a cycle needs at least three vertices");
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Star(n) => {
            if n == 0 {
                return invalid("needs at least one vertex");
            }
            Graph::from_edges(n, (1..n).map(|v| (0, v)))
        }
        Family::Complete(n) => {
            if n == 0 {
                return invalid("needs at least one vertex");
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return invalid("both parts must be non-empty");
            }
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
    }
}

/// One G(n, p) draw: each pair `u < v` in lexicographic order is kept with
/// probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    check_gnp_params(n, p)?;
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.edges.insert((u, v));
            }
        }
    }
    Ok(g)
}

fn check_gnp_params(n: usize, p: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is outside (0, 1]"
        )));
    }
    Ok(())
}

/// Rejection-samples G(n, p) until the draw is connected, giving up after
/// `max_attempts` draws.
pub fn random_connected_gnp_with<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
    max_attempts: usize,
) -> Result<Graph> {
    check_gnp_params(n, p)?;
    for _ in 0..max_attempts {
        let g = gnp(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetryCapExhausted {
        n,
        p,
        attempts: max_attempts,
    })
}

/// Connected G(n, p) sample driven by a ChaCha8 stream seeded from `seed`.
pub fn random_connected_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_gnp_with(n, p, &mut rng, DEFAULT_RETRY_CAP)
}
