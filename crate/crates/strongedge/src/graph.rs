//! Immutable simple undirected graphs with contiguous vertex ids.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors from graph construction and edge queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge {0} is not in the graph")]
    EdgeNotInGraph(Edge),
}

/// An undirected edge with endpoints stored in canonical order `u() < v()`.
///
/// Equality, ordering and hashing all respect the canonical order, so
/// `Edge::new(3, 1) == Edge::new(1, 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order.
    ///
    /// Panics on `a == b`; loops are rejected with a proper error by
    /// [`Graph::build`] before any `Edge` is created.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop edge at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint other than `w`; `w` must be an endpoint.
    pub fn other(self, w: usize) -> usize {
        debug_assert!(self.touches(w));
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// The edge list is kept sorted and deduplicated, and the adjacency lists
/// are derived from it, so iteration order is deterministic everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from a vertex count and a list of endpoint pairs.
    ///
    /// Duplicate pairs (in either orientation) are collapsed. Loops and
    /// out-of-range endpoints are rejected.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for &(a, b) in pairs {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for w in [a, b] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            set.insert(Edge::new(a, b));
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in canonical (sorted) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Degeneracy of the graph together with the deletion order.
    ///
    /// Repeatedly removes a minimum-degree vertex (smallest id on ties);
    /// the returned `k` is the largest degree seen at removal time. A
    /// graph with no vertices has degeneracy 0 and an empty ordering.
    pub fn degeneracy(&self) -> (usize, Vec<usize>) {
        let n = self.n;
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let maxd = deg.iter().copied().max().unwrap_or(0);
        let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); maxd + 1];
        for v in 0..n {
            buckets[deg[v]].insert(v);
        }
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut k = 0;
        let mut cursor = 0;
        for _ in 0..n {
            while buckets[cursor].is_empty() {
                cursor += 1;
            }
            let v = *buckets[cursor].iter().next().unwrap();
            buckets[cursor].remove(&v);
            removed[v] = true;
            k = k.max(cursor);
            order.push(v);
            for &w in self.neighbors(v) {
                if !removed[w] {
                    buckets[deg[w]].remove(&w);
                    deg[w] -= 1;
                    buckets[deg[w]].insert(w);
                    cursor = cursor.min(deg[w]);
                }
            }
        }
        (k, order)
    }

    /// All edges `f != e` with an endpoint in `N(u) ∪ N(v)` where `e = uv`.
    ///
    /// These are exactly the edges that must receive a color different
    /// from `e` in a strong edge coloring. The relation is symmetric:
    /// `f ∈ conflict_set(e)` iff `e ∈ conflict_set(f)`.
    pub fn conflict_set(&self, e: Edge) -> Result<Vec<Edge>, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::EdgeNotInGraph(e));
        }
        let mut marked = vec![false; self.n];
        for w in [e.u, e.v] {
            for &x in self.neighbors(w) {
                marked[x] = true;
            }
        }
        let mut out = BTreeSet::new();
        for (x, _) in marked.iter().enumerate().filter(|&(_, &m)| m) {
            for &y in self.neighbors(x) {
                let f = Edge::new(x, y);
                if f != e {
                    out.insert(f);
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}
