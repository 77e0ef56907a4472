//! Greedy strong edge coloring with guaranteed palette sizes.
//!
//! The greedy colorer walks the star sequence in reverse, assigning each
//! edge the smallest color not used by an already-colored edge in its
//! conflict set. For a k-degenerate graph with maximum degree `delta >= k`
//! this needs at most `(4k-2)*delta - 2k^2 + 1` colors; when the
//! 3+-vertices induce a forest, at most `4*delta - 3`. The same walk works
//! when each edge has its own color list of at least the palette-bound
//! size (smallest list value is picked instead of smallest index).

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::decompose::{self, DecomposeError, StarDecomposition, StarMode};
use crate::formats::FormatError;
use crate::graph::{Edge, Graph};
use crate::structure;

/// Errors from palette arithmetic, coloring, and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("palette bound undefined for k = {k}, delta = {delta} (need 1 <= k <= delta)")]
    KExceedsDelta { k: usize, delta: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("palette exhausted while coloring edge {0}")]
    PaletteExhausted(Edge),
    #[error("color list for edge {edge} has {actual} colors, need at least {needed}")]
    ListTooSmall {
        edge: Edge,
        needed: usize,
        actual: usize,
    },
    #[error("coloring assigns a color to edge {0}, which is not in the graph")]
    UnknownEdge(Edge),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
}

/// Coloring mode selected by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMode {
    /// Degenerate mode with `k = degeneracy(g)`.
    DegenerateAuto,
    /// Degenerate mode with an explicit `k >= degeneracy(g)`.
    Degenerate(usize),
    /// For graphs whose 3+-vertices induce a forest.
    Forest,
}

/// How a palette was sized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaletteMode {
    Degenerate(usize),
    Forest,
    ExplicitLists,
}

/// A palette: the number of colors the greedy run was allowed to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Palette {
    pub size: usize,
    pub mode: PaletteMode,
}

/// Total or partial assignment of colors to edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    assignment: BTreeMap<Edge, usize>,
}

impl EdgeColoring {
    pub fn new() -> Self {
        EdgeColoring::default()
    }

    pub fn set(&mut self, e: Edge, color: usize) {
        self.assignment.insert(e, color);
    }

    pub fn color(&self, e: Edge) -> Option<usize> {
        self.assignment.get(&e).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.assignment.values().collect::<BTreeSet<_>>().len()
    }

    /// Colored edges in canonical edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.assignment.iter().map(|(&e, &c)| (e, c))
    }
}

/// Per-edge allowed color sets for list coloring.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColorLists {
    lists: BTreeMap<Edge, BTreeSet<usize>>,
}

impl ColorLists {
    pub fn new() -> Self {
        ColorLists::default()
    }

    pub fn insert(&mut self, e: Edge, colors: impl IntoIterator<Item = usize>) {
        self.lists.insert(e, colors.into_iter().collect());
    }

    pub fn get(&self, e: Edge) -> Option<&BTreeSet<usize>> {
        self.lists.get(&e)
    }
}

/// Verification outcome for a (possibly partial) coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringReport {
    pub valid: bool,
    /// Same-colored conflicting pairs, each listed once, lexicographic.
    pub violations: Vec<(Edge, Edge)>,
    pub uncolored: Vec<Edge>,
}

/// Published palette-size bounds evaluated at `(k, delta)`.
///
/// `chang_narayanan` (10Δ-10) and `luo_yu` (8Δ-4) apply to 2-degenerate
/// graphs only and are reported just for `k = 2`; `debski` is
/// (4k-1)Δ - k(2k+1) + 1, `yu` is (4k-2)Δ - 2k² + k + 1, and
/// `greedy_guarantee` is the (4k-2)Δ - 2k² + 1 bound this crate's greedy
/// coloring is guaranteed to meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundTable {
    pub k: usize,
    pub delta: usize,
    pub chang_narayanan: Option<usize>,
    pub luo_yu: Option<usize>,
    pub debski: usize,
    pub yu: usize,
    pub greedy_guarantee: usize,
}

/// Guaranteed palette size for the given mode at maximum degree `delta`.
pub fn palette_bound(mode: StarMode, delta: usize) -> Result<usize, ColoringError> {
    match mode {
        StarMode::Degenerate(k) => {
            if k < 1 || k > delta {
                return Err(ColoringError::KExceedsDelta { k, delta });
            }
            Ok((4 * k - 2) * delta - 2 * k * k + 1)
        }
        StarMode::Forest => {
            if delta < 1 {
                return Err(ColoringError::KExceedsDelta { k: 1, delta });
            }
            Ok(4 * delta - 3)
        }
    }
}

/// Evaluates all published bounds at `(k, delta)`.
pub fn bound_table(k: usize, delta: usize) -> Result<BoundTable, ColoringError> {
    if k < 1 || k > delta {
        return Err(ColoringError::KExceedsDelta { k, delta });
    }
    Ok(BoundTable {
        k,
        delta,
        chang_narayanan: (k == 2).then(|| 10 * delta - 10),
        luo_yu: (k == 2).then(|| 8 * delta - 4),
        debski: (4 * k - 1) * delta - k * (2 * k + 1) + 1,
        yu: (4 * k - 2) * delta - 2 * k * k + k + 1,
        greedy_guarantee: (4 * k - 2) * delta - 2 * k * k + 1,
    })
}

fn resolve_mode(g: &Graph, mode: ColorMode) -> Result<StarMode, ColoringError> {
    match mode {
        ColorMode::DegenerateAuto => Ok(StarMode::Degenerate(g.degeneracy().0)),
        ColorMode::Degenerate(k) => {
            let (degeneracy, _) = g.degeneracy();
            if degeneracy > k {
                return Err(ColoringError::PreconditionViolated(format!(
                    "graph has degeneracy {degeneracy}, exceeding requested k = {k}"
                )));
            }
            Ok(StarMode::Degenerate(k))
        }
        ColorMode::Forest => {
            if !structure::three_plus_forest(g) {
                return Err(ColoringError::PreconditionViolated(
                    "the 3+-vertices of the graph do not induce a forest".into(),
                ));
            }
            Ok(StarMode::Forest)
        }
    }
}

fn palette_mode(mode: StarMode) -> PaletteMode {
    match mode {
        StarMode::Degenerate(k) => PaletteMode::Degenerate(k),
        StarMode::Forest => PaletteMode::Forest,
    }
}

/// Greedy strong edge coloring in reverse star order.
///
/// Returns the coloring (always verifier-valid), the palette it stayed
/// within, and the star decomposition that drove it.
pub fn greedy_strong_coloring(
    g: &Graph,
    mode: ColorMode,
) -> Result<(EdgeColoring, Palette, StarDecomposition), ColoringError> {
    let star_mode = resolve_mode(g, mode)?;
    if g.edge_count() == 0 {
        return Ok((
            EdgeColoring::new(),
            Palette {
                size: 0,
                mode: palette_mode(star_mode),
            },
            StarDecomposition {
                steps: Vec::new(),
                mode: star_mode,
            },
        ));
    }
    let bound = palette_bound(star_mode, g.max_degree())?;
    let decomposition = decompose::build_star_sequence(g, star_mode)?;
    let mut coloring = EdgeColoring::new();
    for step in decomposition.steps.iter().rev() {
        for &e in &step.star_edges {
            let used = used_conflict_colors(g, &coloring, e);
            let color = (0..bound)
                .find(|c| !used.contains(c))
                .ok_or(ColoringError::PaletteExhausted(e))?;
            coloring.set(e, color);
        }
    }
    let report = verify_strong_coloring(g, &coloring)?;
    assert!(report.valid, "greedy coloring failed verification");
    Ok((
        coloring,
        Palette {
            size: bound,
            mode: palette_mode(star_mode),
        },
        decomposition,
    ))
}

/// List variant: each edge takes the smallest value in its own list that
/// is unused in its conflict set.
///
/// Every list must have at least `palette_bound(mode, delta)` colors;
/// under that precondition the coloring always completes.
pub fn greedy_list_strong_coloring(
    g: &Graph,
    lists: &ColorLists,
    mode: ColorMode,
) -> Result<EdgeColoring, ColoringError> {
    let star_mode = resolve_mode(g, mode)?;
    if g.edge_count() == 0 {
        return Ok(EdgeColoring::new());
    }
    let bound = palette_bound(star_mode, g.max_degree())?;
    for &e in g.edges() {
        let actual = lists.get(e).map_or(0, BTreeSet::len);
        if actual < bound {
            return Err(ColoringError::ListTooSmall {
                edge: e,
                needed: bound,
                actual,
            });
        }
    }
    let decomposition = decompose::build_star_sequence(g, star_mode)?;
    let mut coloring = EdgeColoring::new();
    for step in decomposition.steps.iter().rev() {
        for &e in &step.star_edges {
            let used = used_conflict_colors(g, &coloring, e);
            let list = lists.get(e).expect("list presence checked above");
            let color = list
                .iter()
                .copied()
                .find(|c| !used.contains(c))
                .ok_or(ColoringError::PaletteExhausted(e))?;
            coloring.set(e, color);
        }
    }
    let report = verify_strong_coloring(g, &coloring)?;
    assert!(report.valid, "greedy list coloring failed verification");
    Ok(coloring)
}

fn used_conflict_colors(g: &Graph, coloring: &EdgeColoring, e: Edge) -> BTreeSet<usize> {
    g.conflict_set(e)
        .expect("edge from the decomposition is in the graph")
        .into_iter()
        .filter_map(|f| coloring.color(f))
        .collect()
}

/// Checks a coloring against the strong-coloring conflict rule.
///
/// Partial colorings are allowed: uncolored edges are reported and only
/// colored pairs are checked. A coloring touching an edge outside the
/// graph is an error, not a violation.
pub fn verify_strong_coloring(
    g: &Graph,
    coloring: &EdgeColoring,
) -> Result<ColoringReport, ColoringError> {
    for (e, _) in coloring.iter() {
        if !g.contains_edge(e) {
            return Err(ColoringError::UnknownEdge(e));
        }
    }
    let uncolored: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| coloring.color(e).is_none())
        .collect();
    let mut violations = Vec::new();
    for &e in g.edges() {
        let Some(ce) = coloring.color(e) else {
            continue;
        };
        for f in g.conflict_set(e).expect("edge is in graph") {
            if f > e && coloring.color(f) == Some(ce) {
                violations.push((e, f));
            }
        }
    }
    violations.sort_unstable();
    Ok(ColoringReport {
        valid: violations.is_empty() && uncolored.is_empty(),
        violations,
        uncolored,
    })
}

/// Parses a coloring file: one `u v c` line per edge, `#` comments.
pub fn parse_coloring(text: &[u8]) -> Result<EdgeColoring, FormatError> {
    let s = std::str::from_utf8(text).map_err(|e| FormatError::MalformedInput {
        position: e.valid_up_to(),
        reason: "input is not valid UTF-8".into(),
    })?;
    let malformed =
        |position: usize, reason: String| FormatError::MalformedInput { position, reason };
    let mut coloring = EdgeColoring::new();
    let mut pos = 0usize;
    for raw in s.split('\n') {
        let line_start = pos;
        pos += raw.len() + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(malformed(
                line_start,
                format!("expected 'u v c', found '{line}'"),
            ));
        }
        let mut nums = [0usize; 3];
        for (slot, t) in nums.iter_mut().zip(&tokens) {
            *slot = t
                .parse()
                .map_err(|_| malformed(line_start, format!("invalid number '{t}'")))?;
        }
        let [u, v, c] = nums;
        if u == v {
            return Err(malformed(line_start, format!("loop edge at vertex {u}")));
        }
        let e = Edge::new(u, v);
        if coloring.color(e).is_some() {
            return Err(malformed(line_start, format!("duplicate edge {e}")));
        }
        coloring.set(e, c);
    }
    Ok(coloring)
}

/// Serializes a coloring as sorted `u v c` lines.
pub fn serialize_coloring(coloring: &EdgeColoring) -> String {
    let mut out = String::new();
    for (e, c) in coloring.iter() {
        out.push_str(&format!("{} {} {}\n", e.u(), e.v(), c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &pairs).unwrap()
    }

    #[test]
    fn palette_bound_examples() {
        assert_eq!(palette_bound(StarMode::Degenerate(2), 2), Ok(5));
        assert_eq!(palette_bound(StarMode::Degenerate(1), 5), Ok(9));
        assert_eq!(palette_bound(StarMode::Forest, 2), Ok(5));
        assert_eq!(
            palette_bound(StarMode::Degenerate(3), 2),
            Err(ColoringError::KExceedsDelta { k: 3, delta: 2 })
        );
    }

    #[test]
    fn bound_table_k2_delta3() {
        let t = bound_table(2, 3).unwrap();
        assert_eq!(t.chang_narayanan, Some(20));
        assert_eq!(t.luo_yu, Some(20));
        assert_eq!(t.debski, 12);
        assert_eq!(t.yu, 13);
        assert_eq!(t.greedy_guarantee, 11);
    }

    #[test]
    fn bound_table_k1_delta4() {
        let t = bound_table(1, 4).unwrap();
        assert_eq!(t.chang_narayanan, None);
        assert_eq!(t.luo_yu, None);
        assert_eq!(t.debski, 10);
        assert_eq!(t.yu, 8);
        assert_eq!(t.greedy_guarantee, 7);
    }

    #[test]
    fn bound_table_k3_delta3() {
        let t = bound_table(3, 3).unwrap();
        assert_eq!(t.greedy_guarantee, 13);
    }

    #[test]
    fn greedy_c5_uses_five_colors() {
        let (coloring, palette, _) =
            greedy_strong_coloring(&cycle(5), ColorMode::DegenerateAuto).unwrap();
        assert_eq!(palette.size, 5);
        assert_eq!(palette.mode, PaletteMode::Degenerate(2));
        assert_eq!(coloring.colors_used(), 5);
        // Reverse star order fixes the exact assignment.
        assert_eq!(coloring.color(Edge::new(3, 4)), Some(0));
        assert_eq!(coloring.color(Edge::new(2, 3)), Some(1));
        assert_eq!(coloring.color(Edge::new(1, 2)), Some(2));
        assert_eq!(coloring.color(Edge::new(0, 1)), Some(3));
        assert_eq!(coloring.color(Edge::new(0, 4)), Some(4));
    }

    #[test]
    fn greedy_p3() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let (coloring, palette, _) = greedy_strong_coloring(&g, ColorMode::DegenerateAuto).unwrap();
        assert_eq!(palette.size, 3);
        assert_eq!(coloring.color(Edge::new(0, 1)), Some(0));
        assert_eq!(coloring.color(Edge::new(1, 2)), Some(1));
        assert_eq!(coloring.colors_used(), 2);
    }

    #[test]
    fn greedy_edgeless() {
        let g = Graph::build(4, &[]).unwrap();
        let (coloring, palette, decomposition) =
            greedy_strong_coloring(&g, ColorMode::DegenerateAuto).unwrap();
        assert!(coloring.is_empty());
        assert_eq!(coloring.colors_used(), 0);
        assert_eq!(palette.size, 0);
        assert!(decomposition.steps.is_empty());
    }

    #[test]
    fn greedy_rejects_k_above_delta() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            greedy_strong_coloring(&g, ColorMode::Degenerate(3)),
            Err(ColoringError::KExceedsDelta { k: 3, delta: 2 })
        );
    }

    #[test]
    fn greedy_forest_mode_on_c5() {
        let (coloring, palette, _) = greedy_strong_coloring(&cycle(5), ColorMode::Forest).unwrap();
        assert_eq!(palette.size, 5);
        assert_eq!(coloring.colors_used(), 5);
    }

    #[test]
    fn list_coloring_relabeled_c5() {
        let g = cycle(5);
        let mut lists = ColorLists::new();
        for &e in g.edges() {
            lists.insert(e, 10..15);
        }
        let coloring = greedy_list_strong_coloring(&g, &lists, ColorMode::DegenerateAuto).unwrap();
        let used: BTreeSet<usize> = coloring.iter().map(|(_, c)| c).collect();
        assert_eq!(used, (10..15).collect());
    }

    #[test]
    fn list_coloring_disjoint_lists() {
        // With pairwise disjoint lists every edge takes its own minimum.
        let g = cycle(5);
        let mut lists = ColorLists::new();
        for (i, &e) in g.edges().iter().enumerate() {
            lists.insert(e, 5 * i..5 * (i + 1));
        }
        let coloring = greedy_list_strong_coloring(&g, &lists, ColorMode::DegenerateAuto).unwrap();
        for (i, &e) in g.edges().iter().enumerate() {
            assert_eq!(coloring.color(e), Some(5 * i));
        }
    }

    #[test]
    fn list_coloring_too_small() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let mut lists = ColorLists::new();
        for &e in g.edges() {
            lists.insert(e, 0..2);
        }
        assert_eq!(
            greedy_list_strong_coloring(&g, &lists, ColorMode::Degenerate(1)),
            Err(ColoringError::ListTooSmall {
                edge: Edge::new(0, 1),
                needed: 3,
                actual: 2
            })
        );
    }

    #[test]
    fn verify_c5_all_distinct() {
        let g = cycle(5);
        let mut coloring = EdgeColoring::new();
        for (i, &e) in g.edges().iter().enumerate() {
            coloring.set(e, i);
        }
        let report = verify_strong_coloring(&g, &coloring).unwrap();
        assert!(report.valid);
    }

    #[test]
    fn verify_c5_repeated_colors() {
        let g = cycle(5);
        let mut coloring = EdgeColoring::new();
        // cyclic edge order 01, 12, 23, 34, 04 gets colors 0 1 2 0 1
        for (e, c) in [
            (Edge::new(0, 1), 0),
            (Edge::new(1, 2), 1),
            (Edge::new(2, 3), 2),
            (Edge::new(3, 4), 0),
            (Edge::new(0, 4), 1),
        ] {
            coloring.set(e, c);
        }
        let report = verify_strong_coloring(&g, &coloring).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .contains(&(Edge::new(0, 1), Edge::new(3, 4))));
        assert!(report
            .violations
            .contains(&(Edge::new(0, 4), Edge::new(1, 2))));
        assert_eq!(report.violations.len(), 2);
    }

    #[test]
    fn verify_c6_three_colors() {
        // Opposite edges of a 6-cycle do not conflict, so three colors do.
        let g = cycle(6);
        let mut coloring = EdgeColoring::new();
        for i in 0..6 {
            coloring.set(Edge::new(i, (i + 1) % 6), i % 3);
        }
        let report = verify_strong_coloring(&g, &coloring).unwrap();
        assert!(report.valid);
    }

    #[test]
    fn verify_partial_reports_uncolored() {
        let g = cycle(5);
        let mut coloring = EdgeColoring::new();
        coloring.set(Edge::new(0, 1), 0);
        let report = verify_strong_coloring(&g, &coloring).unwrap();
        assert!(!report.valid);
        assert!(report.violations.is_empty());
        assert_eq!(report.uncolored.len(), 4);
    }

    #[test]
    fn verify_unknown_edge() {
        let g = cycle(5);
        let mut coloring = EdgeColoring::new();
        coloring.set(Edge::new(0, 2), 0);
        assert_eq!(
            verify_strong_coloring(&g, &coloring),
            Err(ColoringError::UnknownEdge(Edge::new(0, 2)))
        );
    }

    #[test]
    fn coloring_file_round_trip() {
        let text = b"# comment\n0 1 3\n1 2 0\n";
        let coloring = parse_coloring(text).unwrap();
        assert_eq!(coloring.color(Edge::new(0, 1)), Some(3));
        assert_eq!(serialize_coloring(&coloring), "0 1 3\n1 2 0\n");
    }

    #[test]
    fn coloring_file_rejects_duplicates() {
        assert!(parse_coloring(b"0 1 3\n1 0 2\n").is_err());
    }
}
