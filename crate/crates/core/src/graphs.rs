//! Finite simple graphs and the constructions the walk machinery runs on:
//! circulant (Cayley) graphs over `Z_n`, unitary Cayley graphs, a few named
//! families, edge-list file ingestion, and the symmetric arc space.
//!
//! Vertices are `0..n`. Graphs are simple (no loops, no multi-edges) and
//! undirected; each undirected edge `{u, v}` induces the two opposite arcs
//! `(u, v)` and `(v, u)` in the [`ArcSpace`], which is where discrete-time
//! walks live.

use std::collections::VecDeque;
use std::path::Path;

use ndarray::Array2;
use rand::Rng;

use crate::error::{Error, Result};
use crate::numtheory::gcd;
use crate::scalar::Real;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`, sorted lexicographically) and the
/// adjacency lists are sorted, so identical graphs compare equal and all
/// iteration orders are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list.
    ///
    /// # Errors
    ///
    /// Validation errors on: `n = 0`, an endpoint out of `0..n`, a loop
    /// `u = u`, or a duplicate edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("graph must have at least one vertex"));
        }
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::validation(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::validation(format!("loop at vertex {u} not allowed")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::validation(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The normalized edge list (`u < v`, lexicographically sorted).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of vertex `u`.
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Sorted neighbors of vertex `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// Whether `{u, v}` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Whether the graph is connected (single vertex counts as connected).
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Whether the graph is bipartite (checked on every component).
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `Some(k)` if every vertex has degree `k`, else `None`.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == k).then_some(k)
    }

    /// Dense adjacency matrix over the requested scalar.
    pub fn adjacency<T: Real>(&self) -> Array2<T> {
        let mut a = Array2::zeros((self.n, self.n));
        for &(u, v) in &self.edges {
            a[(u, v)] = T::one();
            a[(v, u)] = T::one();
        }
        a
    }

    /// Dense adjacency matrix in exact integer arithmetic.
    pub fn adjacency_i64(&self) -> Array2<i64> {
        let mut a = Array2::zeros((self.n, self.n));
        for &(u, v) in &self.edges {
            a[(u, v)] = 1;
            a[(v, u)] = 1;
        }
        a
    }

    /// Parses the plain edge-list format: a header line `n m` followed by
    /// `m` lines `u v` with `0 <= u, v < n`. Blank lines are ignored;
    /// anything else is a validation error.
    pub fn from_edge_list_str(text: &str) -> Result<Self> {
        let mut records = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = records
            .next()
            .ok_or_else(|| Error::validation("empty edge-list input"))?;
        let (n, m) = parse_pair(header)
            .ok_or_else(|| Error::validation(format!("bad header line {header:?}, expected 'n m'")))?;
        let mut edges = Vec::with_capacity(m);
        for line in records.by_ref().take(m) {
            let (u, v) = parse_pair(line)
                .ok_or_else(|| Error::validation(format!("bad edge line {line:?}, expected 'u v'")))?;
            edges.push((u, v));
        }
        if edges.len() < m {
            return Err(Error::validation(format!(
                "expected {m} edges, found only {}",
                edges.len()
            )));
        }
        if let Some(extra) = records.next() {
            return Err(Error::validation(format!(
                "unexpected trailing content {extra:?} after {m} edges"
            )));
        }
        Graph::new(n, edges)
    }

    /// Reads a graph from an edge-list file (see [`Graph::from_edge_list_str`]).
    pub fn from_edge_list_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Graph::from_edge_list_str(&text)
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// A circulant graph specification: the cycle group `Z_n` together with an
/// inverse-closed connection set `C` of nonzero residues. The graph has an
/// edge `{u, u + s mod n}` for every `u` and every `s` in `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    n: usize,
    connection: Vec<usize>,
}

impl CirculantSpec {
    /// Validates and normalizes a connection set (sorted, deduplicated).
    ///
    /// # Errors
    ///
    /// Validation errors on `n = 0`, a residue outside `1..n`, or a set
    /// that is not inverse-closed (`s` present but `n - s` missing).
    pub fn new(n: usize, connection: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("circulant order must be positive"));
        }
        let mut set: Vec<usize> = connection.into_iter().collect();
        set.sort_unstable();
        set.dedup();
        for &s in &set {
            if s == 0 || s >= n {
                return Err(Error::validation(format!(
                    "connection residue {s} outside 1..{n}"
                )));
            }
            if set.binary_search(&((n - s) % n)).is_err() {
                return Err(Error::validation(format!(
                    "connection set not inverse-closed: contains {s} but not {}",
                    n - s
                )));
            }
        }
        Ok(CirculantSpec { n, connection: set })
    }

    /// Group order `n`.
    pub fn order(&self) -> usize {
        self.n
    }

    /// The sorted connection set.
    pub fn connection(&self) -> &[usize] {
        &self.connection
    }
}

/// Builds the Cayley graph of `Z_n` with the given connection set.
///
/// # Errors
///
/// Validation error if the connection set does not generate `Z_n`
/// (i.e. the graph would be disconnected).
pub fn cayley(spec: &CirculantSpec) -> Result<Graph> {
    let n = spec.n;
    let mut edges = Vec::new();
    for u in 0..n {
        for &s in &spec.connection {
            let v = (u + s) % n;
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, edges)?;
    if !g.is_connected() {
        return Err(Error::validation(format!(
            "connection set {:?} does not generate Z_{n} (graph disconnected)",
            spec.connection
        )));
    }
    Ok(g)
}

/// The unitary Cayley graph on `Z_n`: connection set = units of `Z_n`
/// (residues coprime to `n`), so the graph is `phi(n)`-regular and always
/// connected.
///
/// # Errors
///
/// Validation error for `n < 2`.
pub fn unitary_cayley(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::validation(
            "unitary Cayley graph needs order at least 2",
        ));
    }
    let units = (1..n).filter(|&r| gcd(r as u64, n as u64) == 1);
    cayley(&CirculantSpec::new(n, units)?)
}

/// Named graph families accepted by [`named_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Cycle `C_n`, parameters `[n]`, `n >= 3`.
    Cycle,
    /// Complete graph `K_n`, parameters `[n]`, `n >= 2`.
    Complete,
    /// Complete bipartite `K_{a,b}`, parameters `[a, b]` or balanced `[m]`.
    CompleteBipartite,
    /// Complete tripartite `K_{a,b,c}`, parameters `[a, b, c]` or balanced `[m]`.
    CompleteTripartite,
    /// Hamming graph `H(s, t)` on `t^s` words, parameters `[s, t]`,
    /// `s >= 1`, `t >= 2`.
    Hamming,
}

/// Dispatches to the family constructors below with positional parameters.
///
/// # Errors
///
/// Validation error when the parameter count or values are invalid for
/// the family.
pub fn named_graph(family: Family, params: &[usize]) -> Result<Graph> {
    match (family, params) {
        (Family::Cycle, &[n]) => cycle(n),
        (Family::Complete, &[n]) => complete(n),
        (Family::CompleteBipartite, &[m]) => complete_bipartite(m, m),
        (Family::CompleteBipartite, &[a, b]) => complete_bipartite(a, b),
        (Family::CompleteTripartite, &[m]) => complete_tripartite(m, m, m),
        (Family::CompleteTripartite, &[a, b, c]) => complete_tripartite(a, b, c),
        (Family::Hamming, &[s, t]) => hamming(s, t),
        _ => Err(Error::validation(format!(
            "wrong parameter count {:?} for {:?}",
            params, family
        ))),
    }
}

/// Cycle graph `C_n` (`n >= 3`).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::validation("cycle needs at least 3 vertices"));
    }
    Graph::new(n, (0..n).map(|u| (u, (u + 1) % n)))
}

/// Complete graph `K_n` (`n >= 2`).
pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::validation("complete graph needs at least 2 vertices"));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Complete multipartite graph with the given part sizes: vertices are
/// grouped consecutively by part and joined iff they lie in different parts.
fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.contains(&0) {
        return Err(Error::validation("multipartite parts must be nonempty"));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    Graph::new(n, edges)
}

/// Complete bipartite graph `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&[a, b])
}

/// Complete tripartite graph `K_{a,b,c}`.
pub fn complete_tripartite(a: usize, b: usize, c: usize) -> Result<Graph> {
    complete_multipartite(&[a, b, c])
}

/// Hamming graph `H(s, t)`: vertices are words of length `s` over an
/// alphabet of size `t`, adjacent iff they differ in exactly one position.
/// Encodes words as base-`t` digit strings of the vertex index, so the
/// graph is `s * (t - 1)`-regular on `t^s` vertices.
pub fn hamming(s: usize, t: usize) -> Result<Graph> {
    if s < 1 || t < 2 {
        return Err(Error::validation(
            "hamming graph needs word length >= 1 and alphabet size >= 2",
        ));
    }
    let n = t
        .checked_pow(s as u32)
        .ok_or_else(|| Error::validation("hamming graph too large"))?;
    let mut edges = Vec::new();
    for u in 0..n {
        let mut place = 1;
        for _ in 0..s {
            let digit = (u / place) % t;
            for other in 0..t {
                if other != digit {
                    let v = u - digit * place + other * place;
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            place *= t;
        }
    }
    Graph::new(n, edges)
}

/// Draws a uniformly random inverse-closed connection set on `Z_n` that
/// generates the group, i.e. a random connected circulant graph. Each
/// symmetric residue pair `{s, n - s}` is included independently with
/// probability 1/2; draws are repeated until the result is connected
/// (nonempty sets on `Z_n` fail connectivity only on a measure-zero-ish
/// fraction of draws, so this terminates quickly).
pub fn random_circulant_spec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CirculantSpec> {
    if n < 2 {
        return Err(Error::validation("random circulant needs order at least 2"));
    }
    loop {
        let mut connection = Vec::new();
        for s in 1..=n / 2 {
            if rng.gen_bool(0.5) {
                connection.push(s);
                if s != n - s {
                    connection.push(n - s);
                }
            }
        }
        if connection.is_empty() {
            continue;
        }
        let spec = CirculantSpec::new(n, connection)?;
        if cayley(&spec).is_ok() {
            return Ok(spec);
        }
    }
}

/// The symmetric arc space of a graph: every undirected edge `{u, v}`
/// contributes the arcs `(u, v)` and `(v, u)`. Arcs are indexed in
/// lexicographic order of `(origin, terminus)`, and the space records the
/// inversion permutation `a -> a^{-1}` plus, for each vertex, the list of arcs
/// terminating there (the data the walk operators are built from).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSpace {
    arcs: Vec<(usize, usize)>,
    inv: Vec<usize>,
    in_arcs: Vec<Vec<usize>>,
}

impl ArcSpace {
    /// Number of arcs (= twice the number of edges).
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    /// True iff the graph had no edges (never the case for spaces built by
    /// [`arc_space`], which rejects edgeless graphs).
    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// The arc list in index order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Origin vertex of arc `a`.
    pub fn origin(&self, a: usize) -> usize {
        self.arcs[a].0
    }

    /// Terminus vertex of arc `a`.
    pub fn terminus(&self, a: usize) -> usize {
        self.arcs[a].1
    }

    /// Index of the reversed arc `a^{-1}`.
    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Arcs terminating at vertex `v`, in increasing index order.
    pub fn arcs_into(&self, v: usize) -> &[usize] {
        &self.in_arcs[v]
    }

    /// Index of the arc `(o, t)`, if present.
    pub fn arc_index(&self, o: usize, t: usize) -> Option<usize> {
        self.arcs.binary_search(&(o, t)).ok()
    }
}

/// Builds the symmetric arc space of a graph.
///
/// # Errors
///
/// Validation error if the graph has no edges (the walk needs at least
/// one arc).
pub fn arc_space(g: &Graph) -> Result<ArcSpace> {
    if g.edge_count() == 0 {
        return Err(Error::validation("graph has no edges, so no arcs"));
    }
    let mut arcs = Vec::with_capacity(2 * g.edge_count());
    for &(u, v) in g.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    arcs.sort_unstable();
    let inv = arcs
        .iter()
        .map(|&(o, t)| {
            arcs.binary_search(&(t, o))
                .expect("reverse arc present by construction")
        })
        .collect();
    let mut in_arcs = vec![Vec::new(); g.vertex_count()];
    for (idx, &(_, t)) in arcs.iter().enumerate() {
        in_arcs[t].push(idx);
    }
    Ok(ArcSpace {
        arcs,
        inv,
        in_arcs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_malformed_graphs() {
        assert!(Graph::new(0, []).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn basic_accessors() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.neighbors(0), &[1, 3]);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 2));
        assert!(g.is_connected());
        assert!(g.is_bipartite());
        assert_eq!(g.regularity(), Some(2));
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!disconnected.is_connected());
        let triangle = complete(3).unwrap();
        assert!(!triangle.is_bipartite());
        assert!(cycle(6).unwrap().is_bipartite());
        assert!(!cycle(5).unwrap().is_bipartite());
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.regularity(), None);
    }

    #[test]
    fn circulant_spec_validation() {
        assert!(CirculantSpec::new(6, [1, 5]).is_ok());
        assert!(CirculantSpec::new(6, [1]).is_err(), "not inverse-closed");
        assert!(CirculantSpec::new(6, [0, 1, 5]).is_err(), "zero residue");
        assert!(CirculantSpec::new(6, [1, 5, 6]).is_err(), "out of range");
        assert!(CirculantSpec::new(6, [3]).is_ok(), "self-inverse residue");
        let spec = CirculantSpec::new(8, [7, 1, 1]).unwrap();
        assert_eq!(spec.connection(), &[1, 7], "sorted and deduplicated");
    }

    #[test]
    fn cayley_matches_cycle_and_complete() {
        let c6 = cayley(&CirculantSpec::new(6, [1, 5]).unwrap()).unwrap();
        assert_eq!(c6, cycle(6).unwrap());
        let k5 = cayley(&CirculantSpec::new(5, [1, 2, 3, 4]).unwrap()).unwrap();
        assert_eq!(k5, complete(5).unwrap());
        // {2, 4} generates only the even residues of Z_6.
        assert!(cayley(&CirculantSpec::new(6, [2, 4]).unwrap()).is_err());
    }

    #[test]
    fn unitary_cayley_basics() {
        assert_eq!(unitary_cayley(2).unwrap(), complete(2).unwrap());
        assert_eq!(unitary_cayley(4).unwrap(), cycle(4).unwrap());
        assert_eq!(unitary_cayley(6).unwrap(), cycle(6).unwrap());
        let uc12 = unitary_cayley(12).unwrap();
        assert_eq!(uc12.vertex_count(), 12);
        assert_eq!(uc12.regularity(), Some(4), "phi(12) = 4");
        assert_eq!(uc12.edge_count(), 24);
        assert!(uc12.is_bipartite(), "even order means bipartite");
        assert!(!unitary_cayley(9).unwrap().is_bipartite());
        assert!(unitary_cayley(1).is_err());
    }

    #[test]
    fn unitary_cayley_of_prime_is_complete() {
        assert_eq!(unitary_cayley(7).unwrap(), complete(7).unwrap());
    }

    #[test]
    fn named_families() {
        assert_eq!(
            named_graph(Family::Cycle, &[5]).unwrap(),
            cycle(5).unwrap()
        );
        assert!(named_graph(Family::Cycle, &[2]).is_err());
        let k33 = named_graph(Family::CompleteBipartite, &[3]).unwrap();
        assert_eq!(k33.vertex_count(), 6);
        assert_eq!(k33.regularity(), Some(3));
        assert!(k33.is_bipartite());
        let k222 = named_graph(Family::CompleteTripartite, &[2]).unwrap();
        assert_eq!(k222.vertex_count(), 6);
        assert_eq!(k222.regularity(), Some(4));
        assert!(!k222.is_bipartite());
        assert!(named_graph(Family::Hamming, &[3]).is_err(), "arity");
    }

    #[test]
    fn hamming_graph_shape() {
        let h33 = hamming(3, 3).unwrap();
        assert_eq!(h33.vertex_count(), 27);
        assert_eq!(h33.regularity(), Some(6), "s(t-1) = 6");
        assert_eq!(h33.edge_count(), 27 * 6 / 2);
        assert!(h33.is_connected());
        // H(1, t) is the complete graph K_t.
        assert_eq!(hamming(1, 4).unwrap(), complete(4).unwrap());
        // H(s, 2) is the s-dimensional hypercube.
        let cube = hamming(3, 2).unwrap();
        assert_eq!(cube.vertex_count(), 8);
        assert_eq!(cube.regularity(), Some(3));
        assert!(cube.is_bipartite());
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::from_edge_list_str("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(Graph::from_edge_list_str("").is_err());
        assert!(Graph::from_edge_list_str("3\n0 1\n").is_err(), "bad header");
        assert!(Graph::from_edge_list_str("3 2\n0 1\n").is_err(), "too few");
        assert!(
            Graph::from_edge_list_str("3 1\n0 1\n1 2\n").is_err(),
            "trailing content"
        );
        assert!(
            Graph::from_edge_list_str("3 1\n0 7\n").is_err(),
            "endpoint out of range"
        );
    }

    #[test]
    fn arc_space_structure() {
        let g = cycle(3).unwrap();
        let arcs = arc_space(&g).unwrap();
        assert_eq!(arcs.len(), 6);
        assert_eq!(
            arcs.arcs(),
            &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
        );
        for a in 0..arcs.len() {
            let b = arcs.inverse(a);
            assert_ne!(a, b, "no arc is its own inverse in a simple graph");
            assert_eq!(arcs.inverse(b), a, "inversion is an involution");
            assert_eq!(arcs.origin(a), arcs.terminus(b));
            assert_eq!(arcs.terminus(a), arcs.origin(b));
        }
        assert_eq!(arcs.arcs_into(0), &[2, 4]);
        assert_eq!(arcs.arc_index(1, 2), Some(3));
        assert_eq!(arcs.arc_index(0, 0), None);
        let single = Graph::new(1, []).unwrap();
        assert!(arc_space(&single).is_err(), "edgeless graph has no arcs");
    }

    #[test]
    fn random_circulants_are_connected_and_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let specs: Vec<_> = (0..20)
            .map(|_| random_circulant_spec(10, &mut rng).unwrap())
            .collect();
        for spec in &specs {
            let g = cayley(spec).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.vertex_count(), 10);
        }
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        let replay: Vec<_> = (0..20)
            .map(|_| random_circulant_spec(10, &mut rng2).unwrap())
            .collect();
        assert_eq!(specs, replay, "same seed, same specs");
    }

    proptest! {
        #[test]
        fn arc_inversion_is_a_fixed_point_free_involution(
            n in 2usize..10,
            raw in proptest::collection::vec((0usize..10, 0usize..10), 1..20)
        ) {
            let edges: Vec<_> = raw.into_iter()
                .filter(|&(u, v)| u < n && v < n && u != v)
                .collect();
            let mut normalized: Vec<_> = edges.iter()
                .map(|&(u, v)| (u.min(v), u.max(v)))
                .collect();
            normalized.sort_unstable();
            normalized.dedup();
            prop_assume!(!normalized.is_empty());
            let g = Graph::new(n, normalized).unwrap();
            let arcs = arc_space(&g).unwrap();
            prop_assert_eq!(arcs.len(), 2 * g.edge_count());
            for a in 0..arcs.len() {
                prop_assert_ne!(arcs.inverse(a), a);
                prop_assert_eq!(arcs.inverse(arcs.inverse(a)), a);
            }
        }

        #[test]
        fn circulant_graphs_are_vertex_transitive_in_degree(
            n in 3usize..16,
            mask in 1u32..(1 << 7)
        ) {
            let connection: Vec<usize> = (1..=n / 2)
                .filter(|&s| mask & (1 << (s % 7)) != 0)
                .flat_map(|s| [s, n - s])
                .map(|s| s % n)
                .filter(|&s| s != 0)
                .collect();
            prop_assume!(!connection.is_empty());
            let spec = CirculantSpec::new(n, connection).unwrap();
            if let Ok(g) = cayley(&spec) {
                prop_assert!(g.regularity().is_some());
                prop_assert!(g.is_connected());
            }
        }
    }
}
