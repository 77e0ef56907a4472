//! Structural checks: degeneracy summary, forests of 3+-vertices,
//! biconnectivity, and chordless / minimally 2-connected detection.

use crate::graph::{Edge, Graph};

/// Summary of the structural properties relevant to palette bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    pub degeneracy: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    /// The subgraph induced by vertices of degree >= 3 is acyclic.
    pub three_plus_forest: bool,
    /// Connected with no cut vertex; graphs on fewer than 3 vertices are
    /// reported as not biconnected.
    pub biconnected: bool,
    /// Every cycle is induced: no edge joins two vertices that lie on a
    /// common cycle avoiding that edge.
    pub chordless: bool,
    /// Equivalent to biconnected and chordless.
    pub minimally_two_connected: bool,
}

/// Computes the full structure report for a graph.
pub fn structure_report(g: &Graph) -> StructureReport {
    let (degeneracy, _) = g.degeneracy();
    let biconnected = is_biconnected(g);
    let chordless = is_chordless(g);
    StructureReport {
        degeneracy,
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        three_plus_forest: three_plus_forest(g),
        biconnected,
        chordless,
        minimally_two_connected: biconnected && chordless,
    }
}

/// True iff the subgraph induced by the 3+-vertices is a forest.
///
/// An empty or edgeless induced subgraph counts as a forest.
pub fn three_plus_forest(g: &Graph) -> bool {
    let big: Vec<bool> = (0..g.n()).map(|v| g.degree(v) >= 3).collect();
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        if big[u] && big[v] {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
    }
    true
}

/// Standard lowpoint DFS: connected and free of cut vertices.
pub fn is_biconnected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut next = vec![0usize; n];
    let mut stack = vec![0usize];
    let mut timer = 0usize;
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut visited = 1usize;
    let mut root_children = 0usize;
    while let Some(&v) = stack.last() {
        if next[v] < g.neighbors(v).len() {
            let w = g.neighbors(v)[next[v]];
            next[v] += 1;
            if disc[w] == usize::MAX {
                parent[w] = v;
                if v == 0 {
                    root_children += 1;
                }
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                visited += 1;
                stack.push(w);
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&p) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    visited == n && root_children < 2
}

/// True iff no edge of `g` is a chord of some cycle.
///
/// An edge `uv` is a chord of a cycle exactly when `g - uv` still contains
/// two internally vertex-disjoint `u`-`v` paths, checked per edge with two
/// augmenting rounds of a unit-vertex-capacity flow.
pub fn is_chordless(g: &Graph) -> bool {
    g.edges().iter().all(|&e| !edge_is_chord(g, e))
}

fn edge_is_chord(g: &Graph, e: Edge) -> bool {
    let (u, v) = e.endpoints();
    let mut net = FlowNet::new(2 * g.n());
    for w in 0..g.n() {
        net.add(2 * w, 2 * w + 1, 1);
    }
    for &f in g.edges() {
        if f == e {
            continue;
        }
        let (x, y) = f.endpoints();
        net.add(2 * x + 1, 2 * y, 1);
        net.add(2 * y + 1, 2 * x, 1);
    }
    let source = 2 * u + 1;
    let sink = 2 * v;
    net.augment(source, sink) && net.augment(source, sink)
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// One BFS augmenting round; returns whether a unit of flow was pushed.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut prev_arc = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        let mut queue = std::collections::VecDeque::new();
        seen[source] = true;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    prev_arc[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut x = sink;
        while x != source {
            let a = prev_arc[x];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            x = self.to[a ^ 1];
        }
        true
    }
}
