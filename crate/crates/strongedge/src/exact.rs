//! Exact strong chromatic index by backtracking on small graphs.
//!
//! The conflict relation between edges is rebuilt here from first
//! principles (shared endpoint or a cross-adjacent endpoint pair), so the
//! exact search is an independent check on the greedy pipeline.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::EdgeColoring;
use crate::graph::{Edge, Graph};

/// Size and time caps for the exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_edges: usize,
    pub time_budget: Duration,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_edges: 30,
            time_budget: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("graph has {edges} edges, above the search limit of {max_edges}")]
    TooLarge { edges: usize, max_edges: usize },
    #[error("time budget exceeded; result unknown")]
    TimeBudgetExceeded,
}

/// Two distinct edges conflict when they share an endpoint or some
/// endpoint of one is adjacent to an endpoint of the other.
fn edges_conflict(g: &Graph, e: Edge, f: Edge) -> bool {
    if e == f {
        return false;
    }
    let (a, b) = e.endpoints();
    let (c, d) = f.endpoints();
    a == c
        || a == d
        || b == c
        || b == d
        || g.has_edge(a, c)
        || g.has_edge(a, d)
        || g.has_edge(b, c)
        || g.has_edge(b, d)
}

fn conflict_lists(g: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    let m = edges.len();
    let mut lists = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            if edges_conflict(g, edges[i], edges[j]) {
                lists[i].push(j);
                lists[j].push(i);
            }
        }
    }
    lists
}

/// Size of a set of pairwise-conflicting edges: a lower bound on the
/// strong chromatic index. Exact (maximum) for graphs with at most 20
/// edges, greedy maximal otherwise.
pub fn strong_clique_lower_bound(g: &Graph) -> usize {
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    let lists = conflict_lists(g);
    if m <= 20 {
        let mut adj = vec![0u64; m];
        for (i, list) in lists.iter().enumerate() {
            for &j in list {
                adj[i] |= 1 << j;
            }
        }
        let mut best = 0;
        max_clique(&adj, (1u64 << m) - 1, 0, &mut best);
        best
    } else {
        // Greedy maximal clique: descending conflict degree, canonical
        // edge order on ties.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(lists[i].len()), i));
        let mut chosen: Vec<usize> = Vec::new();
        for i in order {
            if chosen.iter().all(|&j| lists[i].contains(&j)) {
                chosen.push(i);
            }
        }
        chosen.len()
    }
}

fn max_clique(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = size;
        return;
    }
    let v = cand.trailing_zeros() as usize;
    max_clique(adj, cand & adj[v], size + 1, best);
    max_clique(adj, cand & !(1u64 << v), size, best);
}

enum SearchOutcome {
    Found,
    Exhausted,
    Timeout,
}

struct Searcher {
    /// Per position: conflicting positions that come earlier in the order.
    earlier: Vec<Vec<usize>>,
    colors: Vec<usize>,
    q: usize,
    deadline: Instant,
    ticks: u64,
}

impl Searcher {
    fn solve(&mut self, pos: usize, used: usize) -> SearchOutcome {
        if pos == self.colors.len() {
            return SearchOutcome::Found;
        }
        self.ticks += 1;
        if self.ticks.is_multiple_of(1024) && Instant::now() >= self.deadline {
            return SearchOutcome::Timeout;
        }
        // New color indices only as current-max + 1.
        let cap = self.q.min(used + 1);
        'colors: for c in 0..cap {
            for &j in &self.earlier[pos] {
                if self.colors[j] == c {
                    continue 'colors;
                }
            }
            self.colors[pos] = c;
            match self.solve(pos + 1, used.max(c + 1)) {
                SearchOutcome::Exhausted => {}
                other => return other,
            }
        }
        SearchOutcome::Exhausted
    }
}

fn search_with_deadline(
    g: &Graph,
    q: usize,
    deadline: Instant,
) -> Result<Option<EdgeColoring>, ExactError> {
    let m = g.edge_count();
    if m == 0 {
        return Ok(Some(EdgeColoring::new()));
    }
    if q == 0 {
        return Ok(None);
    }
    if Instant::now() >= deadline {
        return Err(ExactError::TimeBudgetExceeded);
    }
    let lists = conflict_lists(g);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(lists[i].len()), i));
    let mut position_of = vec![0usize; m];
    for (pos, &i) in order.iter().enumerate() {
        position_of[i] = pos;
    }
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .map(|&i| {
            let pos = position_of[i];
            let mut e: Vec<usize> = lists[i]
                .iter()
                .map(|&j| position_of[j])
                .filter(|&p| p < pos)
                .collect();
            e.sort_unstable();
            e
        })
        .collect();
    let mut searcher = Searcher {
        earlier,
        colors: vec![usize::MAX; m],
        q,
        deadline,
        ticks: 0,
    };
    match searcher.solve(0, 0) {
        SearchOutcome::Timeout => Err(ExactError::TimeBudgetExceeded),
        SearchOutcome::Exhausted => Ok(None),
        SearchOutcome::Found => {
            let mut coloring = EdgeColoring::new();
            for (pos, &i) in order.iter().enumerate() {
                coloring.set(g.edges()[i], searcher.colors[pos]);
            }
            Ok(Some(coloring))
        }
    }
}

/// Decision search: a valid strong edge coloring with at most `q` colors,
/// or a definite "no". A timeout is an error, distinct from "no".
pub fn is_strongly_colorable(
    g: &Graph,
    q: usize,
    limits: &SearchLimits,
) -> Result<Option<EdgeColoring>, ExactError> {
    let m = g.edge_count();
    if m > limits.max_edges {
        return Err(ExactError::TooLarge {
            edges: m,
            max_edges: limits.max_edges,
        });
    }
    search_with_deadline(g, q, Instant::now() + limits.time_budget)
}

/// Smallest number of colors in any strong edge coloring, with a witness.
///
/// Starts at the strong-clique lower bound and increments; the whole
/// search shares one wall-clock budget.
pub fn exact_strong_chromatic_index(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<(usize, EdgeColoring), ExactError> {
    let m = g.edge_count();
    if m > limits.max_edges {
        return Err(ExactError::TooLarge {
            edges: m,
            max_edges: limits.max_edges,
        });
    }
    let deadline = Instant::now() + limits.time_budget;
    let mut q = strong_clique_lower_bound(g);
    loop {
        match search_with_deadline(g, q, deadline)? {
            Some(witness) => return Ok((q, witness)),
            None => q += 1,
        }
    }
}
