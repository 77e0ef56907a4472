//! Independent oracles shared by the integration suites. These re-derive
//! the conflict relation and coloring validity from the definition alone
//! (shared endpoint, or an endpoint of one edge adjacent to an endpoint
//! of the other) so they stay decoupled from the library's conflict-set
//! computation.

use strongedge::coloring::EdgeColoring;
use strongedge::graph::{Edge, Graph};

#[allow(dead_code)]
pub fn edges_conflict_oracle(g: &Graph, e: Edge, f: Edge) -> bool {
    if e == f {
        return false;
    }
    let (a, b) = e.endpoints();
    let (c, d) = f.endpoints();
    let shares = a == c || a == d || b == c || b == d;
    shares || g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)
}

/// Total and conflict-free, checked across all edge pairs.
#[allow(dead_code)]
pub fn coloring_valid_oracle(g: &Graph, coloring: &EdgeColoring) -> bool {
    let edges = g.edges();
    if edges.iter().any(|&e| coloring.color(e).is_none()) {
        return false;
    }
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if coloring.color(e) == coloring.color(f) && edges_conflict_oracle(g, e, f) {
                return false;
            }
        }
    }
    true
}

/// The nice-vertex condition, evaluated directly from the degrees:
/// at least `max(1, deg(w) - slack)` neighbors of degree <= `threshold`.
#[allow(dead_code)]
pub fn nice_condition_oracle(g: &Graph, w: usize, threshold: usize, slack: usize) -> bool {
    let d = g.degree(w);
    if d == 0 {
        return false;
    }
    let low = g
        .neighbors(w)
        .iter()
        .filter(|&&v| g.degree(v) <= threshold)
        .count();
    low >= 1.max(d.saturating_sub(slack))
}

/// Repeatedly delete any vertex of degree at most `d`; true iff the whole
/// graph can be peeled away. Independent route to the degeneracy value.
#[allow(dead_code)]
pub fn peels_to_empty(g: &Graph, d: usize) -> bool {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut count = 0;
    let mut progress = true;
    while progress {
        progress = false;
        for v in 0..n {
            if !removed[v] && deg[v] <= d {
                removed[v] = true;
                count += 1;
                progress = true;
                for &w in g.neighbors(v) {
                    if !removed[w] {
                        deg[w] -= 1;
                    }
                }
            }
        }
    }
    count == n
}
