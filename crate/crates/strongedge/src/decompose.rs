//! Star decomposition of the edge set.
//!
//! A graph is peeled into an ordered sequence of stars: each step picks a
//! "nice" vertex `w` of the current edge-remainder graph — one whose
//! low-degree neighbors are plentiful enough — and extracts every edge
//! from `w` to a low-degree neighbor. In degenerate mode with parameter
//! `k`, a vertex `w` is nice when at least `max(1, deg(w) - k)` of its
//! neighbors have degree at most `k`; in forest mode (for graphs whose
//! 3+-vertices induce a forest) the condition is `max(1, deg(w) - 1)`
//! neighbors of degree at most 2. Such a vertex always exists under the
//! respective precondition, every extracted star is non-empty, the star
//! centers are pairwise distinct, and the stars partition the edge set.
//! Coloring consumes the sequence in reverse order.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::graph::{Edge, Graph};

/// Errors from nice-vertex search and star-sequence construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("no nice vertex exists; the input violates the mode's precondition")]
    NoNiceVertex,
    #[error("graph has degeneracy {degeneracy}, exceeding requested k = {k}")]
    PreconditionViolated { k: usize, degeneracy: usize },
}

/// Peeling mode for the star sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarMode {
    /// Peel a k-degenerate graph; stars collect edges to vertices of
    /// degree at most `k`.
    Degenerate(usize),
    /// Peel a graph whose 3+-vertices induce a forest; stars collect
    /// edges to vertices of degree at most 2.
    Forest,
}

impl StarMode {
    /// `(threshold, slack)`: a neighbor is collectable when its degree is
    /// at most `threshold`, and `w` is nice when it has at least
    /// `max(1, deg(w) - slack)` collectable neighbors.
    fn params(self) -> (usize, usize) {
        match self {
            StarMode::Degenerate(k) => (k, k),
            StarMode::Forest => (2, 1),
        }
    }
}

/// One extracted star: `index` is 1-based position in the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarStep {
    pub index: usize,
    pub center: usize,
    /// Edges of the star, ascending by non-center endpoint.
    pub star_edges: Vec<Edge>,
}

/// The full ordered sequence of stars partitioning the edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDecomposition {
    pub steps: Vec<StarStep>,
    pub mode: StarMode,
}

impl StarDecomposition {
    pub fn edge_count(&self) -> usize {
        self.steps.iter().map(|s| s.star_edges.len()).sum()
    }

    /// Text trace, one line per step: `"i center: v1 v2 ..."` with the
    /// non-center endpoints in star order.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&format!("{} {}:", step.index, step.center));
            for e in &step.star_edges {
                out.push_str(&format!(" {}", e.other(step.center)));
            }
            out.push('\n');
        }
        out
    }
}

/// Smallest non-isolated vertex with at least `max(1, deg(w) - k)`
/// neighbors of degree at most `k`.
///
/// Exists in every k-degenerate graph with at least one edge;
/// `NoNiceVertex` therefore signals a violated precondition.
pub fn find_nice_vertex(g: &Graph, k: usize) -> Result<usize, DecomposeError> {
    if g.edge_count() == 0 {
        return Err(DecomposeError::NoEdges);
    }
    scan_nice(g, k, k).ok_or(DecomposeError::NoNiceVertex)
}

/// Forest variant: smallest non-isolated vertex with at least
/// `max(1, deg(w) - 1)` neighbors of degree at most 2.
pub fn find_nice_vertex_forest(g: &Graph) -> Result<usize, DecomposeError> {
    if g.edge_count() == 0 {
        return Err(DecomposeError::NoEdges);
    }
    scan_nice(g, 2, 1).ok_or(DecomposeError::NoNiceVertex)
}

fn scan_nice(g: &Graph, threshold: usize, slack: usize) -> Option<usize> {
    (0..g.n()).find(|&w| {
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
    })
}

/// Builds the full star sequence for `g` in the given mode.
///
/// Degenerate mode checks `degeneracy(g) <= k` up front; forest mode
/// instead surfaces a precondition violation as `NoNiceVertex` when the
/// peeling gets stuck.
pub fn build_star_sequence(g: &Graph, mode: StarMode) -> Result<StarDecomposition, DecomposeError> {
    if let StarMode::Degenerate(k) = mode {
        let (degeneracy, _) = g.degeneracy();
        if degeneracy > k {
            return Err(DecomposeError::PreconditionViolated { k, degeneracy });
        }
    }
    let (threshold, slack) = mode.params();
    let mut rem = Remainder::new(g);
    let mut steps = Vec::new();
    let mut centers = HashSet::new();
    while rem.edges_left > 0 {
        let center = rem
            .find_nice(threshold, slack)
            .ok_or(DecomposeError::NoNiceVertex)?;
        let star_edges = rem.extract_star(center, threshold);
        debug_assert!(!star_edges.is_empty());
        assert!(centers.insert(center), "star centers must be distinct");
        if let StarMode::Degenerate(k) = mode {
            assert!(
                rem.deg(center) <= k,
                "center degree must drop to at most k after extraction"
            );
        }
        steps.push(StarStep {
            index: steps.len() + 1,
            center,
            star_edges,
        });
    }
    Ok(StarDecomposition { steps, mode })
}

/// Mutable working copy of the edge-remainder graph; vertices of degree 0
/// are treated as absent.
struct Remainder {
    adj: Vec<BTreeSet<usize>>,
    edges_left: usize,
}

impl Remainder {
    fn new(g: &Graph) -> Self {
        Remainder {
            adj: (0..g.n())
                .map(|v| g.neighbors(v).iter().copied().collect())
                .collect(),
            edges_left: g.edge_count(),
        }
    }

    fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn find_nice(&self, threshold: usize, slack: usize) -> Option<usize> {
        (0..self.adj.len()).find(|&w| {
            let d = self.deg(w);
            if d == 0 {
                return false;
            }
            let low = self.adj[w]
                .iter()
                .filter(|&&v| self.deg(v) <= threshold)
                .count();
            low >= 1.max(d.saturating_sub(slack))
        })
    }

    fn extract_star(&mut self, center: usize, threshold: usize) -> Vec<Edge> {
        let targets: Vec<usize> = self.adj[center]
            .iter()
            .copied()
            .filter(|&v| self.deg(v) <= threshold)
            .collect();
        let mut star = Vec::with_capacity(targets.len());
        for v in targets {
            self.adj[center].remove(&v);
            self.adj[v].remove(&center);
            self.edges_left -= 1;
            star.push(Edge::new(center, v));
        }
        star
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &pairs).unwrap()
    }

    fn corona_cycle(n: usize) -> Graph {
        let mut pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        pairs.extend((0..n).map(|i| (i, n + i)));
        Graph::build(2 * n, &pairs).unwrap()
    }

    #[test]
    fn nice_vertex_c5() {
        assert_eq!(find_nice_vertex(&cycle(5), 2), Ok(0));
    }

    #[test]
    fn nice_vertex_p3() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_nice_vertex(&g, 1), Ok(1));
    }

    #[test]
    fn nice_vertex_k4() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_nice_vertex(&g, 3), Ok(0));
    }

    #[test]
    fn nice_vertex_no_edges() {
        let g = Graph::build(3, &[]).unwrap();
        assert_eq!(find_nice_vertex(&g, 1), Err(DecomposeError::NoEdges));
        assert_eq!(find_nice_vertex_forest(&g), Err(DecomposeError::NoEdges));
    }

    #[test]
    fn nice_vertex_forest_c5() {
        assert_eq!(find_nice_vertex_forest(&cycle(5)), Ok(0));
    }

    #[test]
    fn nice_vertex_forest_star_hub() {
        let g = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(find_nice_vertex_forest(&g), Ok(0));
    }

    #[test]
    fn nice_vertex_forest_corona_triangle_fails() {
        // Triangle vertices need two low-degree neighbors but have one
        // pendant each; pendants see only a 3-vertex. Nothing qualifies.
        assert_eq!(
            find_nice_vertex_forest(&corona_cycle(3)),
            Err(DecomposeError::NoNiceVertex)
        );
    }

    #[test]
    fn star_sequence_p3() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let d = build_star_sequence(&g, StarMode::Degenerate(1)).unwrap();
        assert_eq!(d.steps.len(), 1);
        assert_eq!(d.steps[0].center, 1);
        assert_eq!(
            d.steps[0].star_edges,
            vec![Edge::new(0, 1), Edge::new(1, 2)]
        );
    }

    #[test]
    fn star_sequence_c5_golden_trace() {
        let d = build_star_sequence(&cycle(5), StarMode::Degenerate(2)).unwrap();
        assert_eq!(d.trace(), "1 0: 1 4\n2 1: 2\n3 2: 3\n4 3: 4\n");
        assert_eq!(d.edge_count(), 5);
    }

    #[test]
    fn star_sequence_edgeless() {
        let g = Graph::build(4, &[]).unwrap();
        let d = build_star_sequence(&g, StarMode::Degenerate(1)).unwrap();
        assert!(d.steps.is_empty());
        let d = build_star_sequence(&g, StarMode::Forest).unwrap();
        assert!(d.steps.is_empty());
    }

    #[test]
    fn star_sequence_rejects_low_k() {
        let g = cycle(5);
        assert_eq!(
            build_star_sequence(&g, StarMode::Degenerate(1)),
            Err(DecomposeError::PreconditionViolated {
                k: 1,
                degeneracy: 2
            })
        );
    }

    #[test]
    fn star_sequence_forest_mode_propagates_failure() {
        assert_eq!(
            build_star_sequence(&corona_cycle(3), StarMode::Forest),
            Err(DecomposeError::NoNiceVertex)
        );
    }

    #[test]
    fn star_sequence_partitions_edges() {
        let g = corona_cycle(4);
        let d = build_star_sequence(&g, StarMode::Degenerate(2)).unwrap();
        let mut all: Vec<Edge> = d
            .steps
            .iter()
            .flat_map(|s| s.star_edges.iter().copied())
            .collect();
        all.sort_unstable();
        assert_eq!(all, g.edges());
        for step in &d.steps {
            assert!(step.star_edges.iter().all(|e| e.touches(step.center)));
        }
    }
}
