//! Graph families for tests, benchmarks, and reproduction runs.
//!
//! Random families are driven by [`SplitMix64`]; the generator algorithm
//! is part of the external contract (see the README) so that seeds give
//! identical graphs everywhere.

use thiserror::Error;

use crate::graph::Graph;
use crate::structure;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("bad generator spec: {0}")]
    BadSpec(String),
}

fn bad(reason: impl Into<String>) -> GenError {
    GenError::BadSpec(reason.into())
}

/// splitmix64: state advances by 0x9E3779B97F4A7C15 and the output is the
/// standard two-round xor-multiply finalizer. `pick(n)` reduces the next
/// output modulo `n`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish index in `0..n`; `n` must be positive.
    pub fn pick(&mut self, n: usize) -> usize {
        assert!(n > 0, "pick from empty range");
        (self.next_u64() % n as u64) as usize
    }
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Cycle on `n >= 3` vertices with one pendant edge per cycle vertex.
    CoronaCycle(usize),
    /// Each vertex of a 5-cycle blown up into an independent set of size
    /// `t >= 1`, adjacent sets completely joined. Part `p` occupies ids
    /// `p*t..(p+1)*t`.
    C5Blowup(usize),
    /// Adjacent centers with `a` and `b` pendant leaves (`a, b >= 1`).
    DoubleStar(usize, usize),
    /// Two hubs joined by three internally disjoint paths with the given
    /// edge counts (each `>= 2`).
    Theta(usize, usize, usize),
    /// Vertices added one at a time, each joined to `min(k, i)` distinct
    /// earlier vertices chosen by the seeded generator; k-degenerate by
    /// construction.
    RandomKDegenerate { n: usize, k: usize },
    /// Random tree skeleton padded with pendants, subdivisions, and
    /// leaf-to-leaf cycle edges so the 3+-vertices induce a forest
    /// (checked, regenerated on failure).
    RandomThreePlusForest { n: usize },
}

/// A family plus the seed used by the random kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(kind: GenKind, seed: u64) -> Self {
        GenSpec { kind, seed }
    }

    /// Parses CLI spec strings such as `cycle:5`, `double_star:2,3`,
    /// `theta:2,2,2`, `random_k_degenerate:n=30,k=2,seed=7`. The seed
    /// defaults to 0 when not given.
    pub fn parse(s: &str) -> Result<GenSpec, GenError> {
        Self::parse_with_seed(s, 0)
    }

    /// Like [`GenSpec::parse`] with a caller-supplied default seed; an
    /// explicit `seed=` in the spec string wins.
    pub fn parse_with_seed(s: &str, default_seed: u64) -> Result<GenSpec, GenError> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let positional = |count: usize| -> Result<Vec<usize>, GenError> {
            let vals: Vec<usize> = args
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| bad(format!("invalid number '{t}' in '{s}'")))
                })
                .collect::<Result<_, _>>()?;
            if vals.len() != count {
                return Err(bad(format!(
                    "'{name}' needs {count} parameter(s), found {}",
                    vals.len()
                )));
            }
            Ok(vals)
        };
        let kind = match name {
            "cycle" => GenKind::Cycle(positional(1)?[0]),
            "corona_cycle" => GenKind::CoronaCycle(positional(1)?[0]),
            "c5_blowup" => GenKind::C5Blowup(positional(1)?[0]),
            "double_star" => {
                let v = positional(2)?;
                GenKind::DoubleStar(v[0], v[1])
            }
            "theta" => {
                let v = positional(3)?;
                GenKind::Theta(v[0], v[1], v[2])
            }
            "random_k_degenerate" | "random_three_plus_forest" => {
                let mut n = None;
                let mut k = None;
                let mut seed = None;
                for part in args.split(',').filter(|p| !p.trim().is_empty()) {
                    let (key, value) = part
                        .split_once('=')
                        .ok_or_else(|| bad(format!("expected key=value, found '{part}'")))?;
                    let value = value.trim();
                    match key.trim() {
                        "n" => n = Some(value.parse().map_err(|_| bad("invalid n"))?),
                        "k" => k = Some(value.parse().map_err(|_| bad("invalid k"))?),
                        "seed" => seed = Some(value.parse().map_err(|_| bad("invalid seed"))?),
                        other => return Err(bad(format!("unknown parameter '{other}'"))),
                    }
                }
                let n = n.ok_or_else(|| bad(format!("'{name}' needs n=")))?;
                let kind = if name == "random_k_degenerate" {
                    let k = k.ok_or_else(|| bad("'random_k_degenerate' needs k="))?;
                    GenKind::RandomKDegenerate { n, k }
                } else {
                    if k.is_some() {
                        return Err(bad("'random_three_plus_forest' takes no k="));
                    }
                    GenKind::RandomThreePlusForest { n }
                };
                return Ok(GenSpec::new(kind, seed.unwrap_or(default_seed)));
            }
            other => return Err(bad(format!("unknown family '{other}'"))),
        };
        Ok(GenSpec::new(kind, default_seed))
    }
}

/// Builds the graph described by `spec`. Deterministic in `(kind, seed)`.
pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    match spec.kind {
        GenKind::Cycle(n) => cycle(n),
        GenKind::CoronaCycle(n) => corona_cycle(n),
        GenKind::C5Blowup(t) => c5_blowup(t),
        GenKind::DoubleStar(a, b) => double_star(a, b),
        GenKind::Theta(a, b, c) => theta(a, b, c),
        GenKind::RandomKDegenerate { n, k } => random_k_degenerate(n, k, spec.seed),
        GenKind::RandomThreePlusForest { n } => random_three_plus_forest(n, spec.seed),
    }
}

fn cycle_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::build(n, &cycle_pairs(n)).unwrap())
}

fn corona_cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(bad(format!("corona_cycle needs n >= 3, got {n}")));
    }
    let mut pairs = cycle_pairs(n);
    pairs.extend((0..n).map(|i| (i, n + i)));
    Ok(Graph::build(2 * n, &pairs).unwrap())
}

fn c5_blowup(t: usize) -> Result<Graph, GenError> {
    if t < 1 {
        return Err(bad("c5_blowup needs t >= 1"));
    }
    let mut pairs = Vec::with_capacity(5 * t * t);
    for p in 0..5 {
        let q = (p + 1) % 5;
        for i in 0..t {
            for j in 0..t {
                pairs.push((p * t + i, q * t + j));
            }
        }
    }
    Ok(Graph::build(5 * t, &pairs).unwrap())
}

fn double_star(a: usize, b: usize) -> Result<Graph, GenError> {
    if a < 1 || b < 1 {
        return Err(bad("double_star needs a, b >= 1"));
    }
    let mut pairs = vec![(0, 1)];
    pairs.extend((0..a).map(|i| (0, 2 + i)));
    pairs.extend((0..b).map(|i| (1, 2 + a + i)));
    Ok(Graph::build(2 + a + b, &pairs).unwrap())
}

fn theta(a: usize, b: usize, c: usize) -> Result<Graph, GenError> {
    if a < 2 || b < 2 || c < 2 {
        return Err(bad("theta needs all path lengths >= 2"));
    }
    let mut pairs = Vec::new();
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len - 1 {
            pairs.push((prev, next));
            prev = next;
            next += 1;
        }
        pairs.push((prev, 1));
    }
    Ok(Graph::build(next, &pairs).unwrap())
}

fn random_k_degenerate(n: usize, k: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 || k < 1 {
        return Err(bad("random_k_degenerate needs n >= 1 and k >= 1"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut pairs = Vec::new();
    for i in 1..n {
        let t = k.min(i);
        // Partial Fisher-Yates over the existing vertices.
        let mut pool: Vec<usize> = (0..i).collect();
        for j in 0..t {
            let swap_with = j + rng.pick(i - j);
            pool.swap(j, swap_with);
            pairs.push((pool[j], i));
        }
    }
    let g = Graph::build(n, &pairs).unwrap();
    debug_assert!(g.degeneracy().0 <= k);
    Ok(g)
}

fn random_three_plus_forest(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(bad("random_three_plus_forest needs n >= 1"));
    }
    for attempt in 0..64 {
        let g = build_three_plus_candidate(n, seed.wrapping_add(attempt));
        if structure::three_plus_forest(&g) {
            return Ok(g);
        }
    }
    Err(bad(
        "random_three_plus_forest failed to produce a valid graph",
    ))
}

fn build_three_plus_candidate(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let skeleton = (n / 3).max(1);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..skeleton {
        pairs.push((rng.pick(i), i));
    }
    // Pad to n vertices: pendants hang off the tree skeleton, subdivision
    // vertices split an existing edge. Either way the new vertex has
    // degree at most 2 and skeleton vertices gain no new skeleton
    // neighbors, so the 3+-vertices stay inside the tree.
    let mut pendants: Vec<usize> = Vec::new();
    for fresh in skeleton..n {
        if pairs.is_empty() || rng.pick(2) == 0 {
            pairs.push((rng.pick(skeleton), fresh));
            pendants.push(fresh);
        } else {
            let split = rng.pick(pairs.len());
            let (x, y) = pairs.swap_remove(split);
            pairs.push((x, fresh));
            pairs.push((fresh, y));
        }
    }
    // Close a few pendant pairs into cycles through 2-vertices.
    let mut degree_one = pendants;
    while degree_one.len() >= 2 {
        let u = degree_one.swap_remove(rng.pick(degree_one.len()));
        let w = degree_one.swap_remove(rng.pick(degree_one.len()));
        if rng.pick(2) == 0 {
            pairs.push((u, w));
        }
    }
    Graph::build(n, &pairs).unwrap()
}
