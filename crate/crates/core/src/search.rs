//! Exact maximization of the number of colors in a coloring of `K_n` that
//! has no rainbow copy of a pattern.
//!
//! Colorings are enumerated as restricted-growth strings over the edges in
//! index order, so every set partition of the edge set is visited at most
//! once. A branch is cut when
//!
//! * the edge just colored completes a rainbow copy (copies are checked at
//!   their largest edge, the moment they become fully colored),
//! * the colors used plus the number of uncolored edges that could still
//!   receive a brand new color cannot beat the incumbent, or
//! * with symmetry breaking on, the partial coloring is not the canonical
//!   member of its orbit under the host permutations considered.
//!
//! Symmetry breaking places a vertex of maximum color degree at 0 and then,
//! once all edges at vertices `0..k` are colored (for `k` up to the
//! configured depth), requires that prefix to be lexicographically minimal
//! under every permutation fixing 0 and preserving `{1..k}`.

use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{Construction, EdgeColoring};
use crate::error::{invalid, Result};
use crate::graph::{enumerate_embeddings, permutations, EdgeIndex, PatternGraph};
use crate::rainbow::{count_rainbow, find_rainbow, RainbowWitness};

/// Largest host order the search accepts.
pub const MAX_SEARCH_N: usize = 8;

/// Default number of leading vertices covered by symmetry breaking.
pub const DEFAULT_SYMMETRY_VERTICES: usize = 2;

const NO_LEVEL: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    #[serde(serialize_with = "serialize_secs")]
    pub max_time: Option<Duration>,
    /// Edge depth at which the tree is split into parallel subtrees.
    pub parallel_depth: usize,
    pub threads: usize,
}

fn serialize_secs<S: serde::Serializer>(d: &Option<Duration>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_some(&d.as_secs_f64()),
        None => s.serialize_none(),
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: Some(1_000_000_000),
            max_time: None,
            parallel_depth: 8,
            threads: 1,
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            max_nodes: None,
            ..Default::default()
        }
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = Some(nodes);
        self
    }

    pub fn with_max_time(mut self, time: Duration) -> Self {
        self.max_time = Some(time);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_parallel_depth(mut self, depth: usize) -> Self {
        self.parallel_depth = depth;
        self
    }

    fn check(&self) -> Result<()> {
        if self.max_nodes == Some(0) || self.max_time == Some(Duration::ZERO) {
            return Err(invalid("budget caps must be positive"));
        }
        if self.threads == 0 {
            return Err(invalid("thread count must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Complete,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    /// Most colors found in a coloring with no rainbow copy. Exact when
    /// `status` is complete, a lower bound otherwise.
    pub max_colors: usize,
    /// A coloring with `max_colors` colors and no rainbow copy. `None` only
    /// when `max_colors` is 0.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
    pub status: SearchStatus,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn serialize_witness<S: serde::Serializer>(w: &Option<EdgeColoring>, s: S) -> std::result::Result<S::Ok, S::Error> {
    w.as_ref().map(EdgeColoring::to_certificate).serialize(s)
}

impl SearchResult {
    pub fn is_complete(&self) -> bool {
        self.status == SearchStatus::Complete
    }

    pub fn anti_ramsey(&self) -> usize {
        self.max_colors + 1
    }
}

/// Pattern tables for one `(pattern, n)` pair.
struct Tables {
    m: usize,
    ends: Vec<(usize, usize)>,
    /// Copies whose largest edge is `e`, as their remaining edges.
    completing: Vec<Vec<[u8; 3]>>,
    /// Copies whose second largest edge is `e`: (largest edge, other edges).
    pending: Vec<Vec<(u8, [u8; 3])>>,
    others: usize,
    /// Last edge of vertex 0's star.
    star_end: usize,
    symmetry: bool,
    levels: Vec<SymmetryLevel>,
    level_at: Vec<u8>,
}

/// Permutations checked once the prefix of `len` edges is colored.
struct SymmetryLevel {
    len: usize,
    /// Flattened images of the prefix edges, `len` entries per permutation.
    maps: Vec<u8>,
}

impl Tables {
    fn new(pattern: &PatternGraph, n: usize, symmetry_vertices: usize) -> Result<Self> {
        if n > MAX_SEARCH_N {
            return Err(invalid(format!("search supports n <= {MAX_SEARCH_N}, got {n}")));
        }
        let embeddings = enumerate_embeddings(pattern, n)?;
        let index = EdgeIndex::new(n);
        let m = index.num_edges();
        let others = pattern.num_edges() - 1;
        let mut completing = vec![Vec::new(); m];
        let mut pending = vec![Vec::new(); m];
        for emb in embeddings.iter() {
            let mut edges = emb.edge_images.clone();
            edges.sort_unstable();
            let largest = *edges.last().unwrap();
            let mut rest = [0u8; 3];
            for (slot, &e) in rest.iter_mut().zip(&edges[..others]) {
                *slot = e as u8;
            }
            completing[largest].push(rest);
            if others > 0 {
                pending[edges[others - 1]].push((largest as u8, rest));
            }
        }

        let symmetry = symmetry_vertices > 0;
        let mut levels = Vec::new();
        let mut level_at = vec![NO_LEVEL; m];
        let mut len = 0;
        for k in 1..=symmetry_vertices.min(n.saturating_sub(2)) {
            len += n - k;
            level_at[len - 1] = levels.len() as u8;
            levels.push(SymmetryLevel::new(&index, k, len));
        }

        Ok(Tables {
            m,
            ends: index.pairs(),
            completing,
            pending,
            others,
            star_end: n.saturating_sub(2),
            symmetry,
            levels,
            level_at,
        })
    }
}

impl SymmetryLevel {
    /// Permutations fixing 0 that map `{1..k}` onto itself, i.e. those that
    /// preserve the set of edges touching `0..k`.
    fn new(index: &EdgeIndex, k: usize, len: usize) -> Self {
        let n = index.n();
        let mut maps = Vec::new();
        let inner: Vec<Vec<usize>> = permutations(k - 1).collect();
        let outer: Vec<Vec<usize>> = permutations(n - k).collect();
        for a in &inner {
            for b in &outer {
                let perm: Vec<usize> = std::iter::once(0)
                    .chain(a.iter().map(|&x| x + 1))
                    .chain(b.iter().map(|&x| x + k))
                    .collect();
                if perm.iter().enumerate().all(|(i, &p)| i == p) {
                    continue;
                }
                for (u, v) in index.pairs().into_iter().take(len) {
                    let (x, y) = (perm[u], perm[v]);
                    let image = index.index_unchecked(x.min(y), x.max(y));
                    debug_assert!(image < len);
                    maps.push(image as u8);
                }
            }
        }
        SymmetryLevel { len, maps }
    }

    /// Whether the colored prefix is no larger than any of its images.
    fn is_minimal(&self, colors: &[u8]) -> bool {
        let len = self.len;
        let mut image = [0u8; 32];
        for map in self.maps.chunks_exact(len) {
            for (e, &target) in map.iter().enumerate() {
                image[target as usize] = colors[e];
            }
            let mut relabel = [u8::MAX; 32];
            let mut next = 0u8;
            for i in 0..len {
                let c = image[i] as usize;
                if relabel[c] == u8::MAX {
                    relabel[c] = next;
                    next += 1;
                }
                let r = relabel[c];
                if r < colors[i] {
                    return false;
                }
                if r > colors[i] {
                    break;
                }
            }
        }
        true
    }
}

struct Shared {
    best: AtomicU32,
    nodes: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(budget: &SearchBudget, best: u32, start: Instant) -> Self {
        Shared {
            best: AtomicU32::new(best),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            exhausted: AtomicBool::new(false),
            max_nodes: budget.max_nodes,
            deadline: budget.max_time.map(|t| start + t),
        }
    }

    fn exhaust(&self) {
        self.exhausted.store(true, Ordering::Relaxed);
        self.stop.store(true, Ordering::Relaxed);
    }
}

struct Worker<'a> {
    t: &'a Tables,
    shared: &'a Shared,
    colors: Vec<u8>,
    used: u32,
    color_count: [u8; 32],
    vertex_count: Vec<[u8; 32]>,
    vertex_mask: Vec<u32>,
    /// Edge at which each edge was found unable to take a fresh color.
    blocked_at: Vec<u8>,
    blocked_ahead: u32,
    best: u32,
    witness: Option<Vec<u8>>,
    stop_on_find: bool,
    split_at: Option<usize>,
    frontier: Vec<Vec<u8>>,
}

impl<'a> Worker<'a> {
    fn new(t: &'a Tables, shared: &'a Shared, n: usize) -> Self {
        Worker {
            t,
            shared,
            colors: vec![0; t.m],
            used: 0,
            color_count: [0; 32],
            vertex_count: vec![[0; 32]; n],
            vertex_mask: vec![0; n],
            blocked_at: vec![NO_LEVEL; t.m],
            blocked_ahead: 0,
            best: shared.best.load(Ordering::Relaxed),
            witness: None,
            stop_on_find: false,
            split_at: None,
            frontier: Vec::new(),
        }
    }

    #[inline]
    fn current_best(&self) -> u32 {
        self.best.max(self.shared.best.load(Ordering::Relaxed))
    }

    #[inline]
    fn tick(&mut self) -> bool {
        let total = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.shared.max_nodes.is_some_and(|cap| total > cap) {
            self.shared.exhaust();
            return false;
        }
        if total & 0xfff == 0 {
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.shared.exhaust();
                    return false;
                }
            }
        }
        true
    }

    fn assign(&mut self, e: usize, c: u8) {
        let (u, v) = self.t.ends[e];
        self.colors[e] = c;
        let ci = c as usize;
        if self.color_count[ci] == 0 {
            self.used += 1;
        }
        self.color_count[ci] += 1;
        for w in [u, v] {
            if self.vertex_count[w][ci] == 0 {
                self.vertex_mask[w] |= 1 << ci;
            }
            self.vertex_count[w][ci] += 1;
        }
        if self.blocked_at[e] != NO_LEVEL {
            self.blocked_ahead -= 1;
        }
    }

    fn unassign(&mut self, e: usize) {
        let (u, v) = self.t.ends[e];
        let ci = self.colors[e] as usize;
        self.color_count[ci] -= 1;
        if self.color_count[ci] == 0 {
            self.used -= 1;
        }
        for w in [u, v] {
            self.vertex_count[w][ci] -= 1;
            if self.vertex_count[w][ci] == 0 {
                self.vertex_mask[w] &= !(1 << ci);
            }
        }
        if self.blocked_at[e] != NO_LEVEL {
            self.blocked_ahead += 1;
        }
    }

    #[inline]
    fn distinct_with(&self, rest: &[u8; 3], extra: Option<u8>) -> bool {
        let mut mask = 0u32;
        let mut count = 0;
        for &r in &rest[..self.t.others] {
            mask |= 1 << self.colors[r as usize];
            count += 1;
        }
        if let Some(c) = extra {
            mask |= 1 << c;
            count += 1;
        }
        mask.count_ones() == count
    }

    fn completes_rainbow(&self, e: usize) -> bool {
        let c = self.colors[e];
        self.t.completing[e].iter().any(|rest| self.distinct_with(rest, Some(c)))
    }

    fn degree_ok(&self, e: usize) -> bool {
        if !self.t.symmetry || e <= self.t.star_end {
            return true;
        }
        let d0 = self.vertex_mask[0].count_ones();
        let (u, v) = self.t.ends[e];
        self.vertex_mask[u].count_ones() <= d0 && self.vertex_mask[v].count_ones() <= d0
    }

    fn symmetry_ok(&self, e: usize) -> bool {
        match self.t.level_at[e] {
            NO_LEVEL => true,
            level => self.t.levels[level as usize].is_minimal(&self.colors),
        }
    }

    fn apply_pending(&mut self, e: usize) {
        let t = self.t;
        for &(f, ref rest) in &t.pending[e] {
            let f = f as usize;
            if self.blocked_at[f] == NO_LEVEL && self.distinct_with(rest, None) {
                self.blocked_at[f] = e as u8;
                self.blocked_ahead += 1;
            }
        }
    }

    fn undo_pending(&mut self, e: usize) {
        let t = self.t;
        for &(f, _) in &t.pending[e] {
            let f = f as usize;
            if self.blocked_at[f] == e as u8 {
                self.blocked_at[f] = NO_LEVEL;
                self.blocked_ahead -= 1;
            }
        }
    }

    /// Colors that could still appear below a node whose last colored edge is `e`.
    #[inline]
    fn potential(&self, e: usize) -> u32 {
        self.used + (self.t.m - e - 1) as u32 - self.blocked_ahead
    }

    fn replay(&mut self, prefix: &[u8]) {
        for (e, &c) in prefix.iter().enumerate() {
            self.assign(e, c);
            self.apply_pending(e);
        }
    }

    fn dfs(&mut self, e: usize) {
        if e == self.t.m {
            self.leaf();
            return;
        }
        if self.split_at == Some(e) {
            self.frontier.push(self.colors[..e].to_vec());
            return;
        }
        let best = self.current_best();
        let rest = (self.t.m - e - 1) as u32;
        if self.used + 1 + rest <= best {
            return;
        }
        // m <= 28, so color ids fit the 32-bit masks
        let fresh = self.used as u8;
        let reuse = if self.used + rest <= best { 0 } else { fresh };
        for c in std::iter::once(fresh).chain(0..reuse) {
            if self.shared.stop.load(Ordering::Relaxed) || !self.tick() {
                return;
            }
            self.assign(e, c);
            if !self.completes_rainbow(e) && self.degree_ok(e) && self.symmetry_ok(e) {
                self.apply_pending(e);
                if self.potential(e) > self.current_best() {
                    self.dfs(e + 1);
                }
                self.undo_pending(e);
            }
            self.unassign(e);
        }
    }

    fn leaf(&mut self) {
        if self.used > self.current_best() {
            self.best = self.used;
            self.witness = Some(self.colors.clone());
            self.shared.best.fetch_max(self.used, Ordering::Relaxed);
            if self.stop_on_find {
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
    }
}

/// Branch-and-bound search for one `(pattern, n)` pair.
pub struct Search<'p> {
    pattern: &'p PatternGraph,
    n: usize,
    budget: SearchBudget,
    symmetry_vertices: usize,
    seed: bool,
}

struct RawOutcome {
    best: u32,
    witness: Option<Vec<u8>>,
    nodes: u64,
    exhausted: bool,
}

impl<'p> Search<'p> {
    pub fn new(pattern: &'p PatternGraph, n: usize) -> Result<Self> {
        if n < pattern.num_vertices() {
            return Err(invalid(format!(
                "K_{n} is too small for {} ({} vertices)",
                pattern.name(),
                pattern.num_vertices()
            )));
        }
        if n > MAX_SEARCH_N {
            return Err(invalid(format!("search supports n <= {MAX_SEARCH_N}, got {n}")));
        }
        Ok(Search {
            pattern,
            n,
            budget: SearchBudget::default(),
            symmetry_vertices: DEFAULT_SYMMETRY_VERTICES,
            seed: true,
        })
    }

    pub fn budget(mut self, budget: SearchBudget) -> Self {
        self.budget = budget;
        self
    }

    /// Number of leading vertices covered by symmetry breaking; 0 turns it off.
    pub fn symmetry_vertices(mut self, k: usize) -> Self {
        self.symmetry_vertices = k;
        self
    }

    /// Whether to start from the best rainbow-free construction.
    pub fn seeded(mut self, seed: bool) -> Self {
        self.seed = seed;
        self
    }

    /// The best rainbow-free construction on `K_n`, if any.
    fn incumbent(&self) -> Result<Option<EdgeColoring>> {
        let mut best: Option<EdgeColoring> = None;
        let mut candidates = vec![EdgeColoring::from_fn(self.n, |_, _| 0)?];
        for c in Construction::all_for(self.n) {
            candidates.push(c.build(self.n)?);
        }
        for c in candidates {
            if best.as_ref().is_some_and(|b| b.num_colors() >= c.num_colors()) {
                continue;
            }
            if count_rainbow(&c, self.pattern)? == 0 {
                best = Some(c);
            }
        }
        Ok(best)
    }

    fn run(&self, tables: &Tables, start_best: u32, stop_on_find: bool, start: Instant) -> RawOutcome {
        let shared = Shared::new(&self.budget, start_best, start);
        let parallel = self.budget.threads > 1 && self.budget.parallel_depth > 0 && self.budget.parallel_depth < tables.m;
        if !parallel {
            let mut w = Worker::new(tables, &shared, self.n);
            w.stop_on_find = stop_on_find;
            w.dfs(0);
            return RawOutcome {
                best: w.best.max(start_best),
                witness: w.witness,
                nodes: shared.nodes.load(Ordering::Relaxed),
                exhausted: shared.exhausted.load(Ordering::Relaxed),
            };
        }

        let mut root = Worker::new(tables, &shared, self.n);
        root.split_at = Some(self.budget.parallel_depth);
        root.dfs(0);
        let frontier = std::mem::take(&mut root.frontier);
        let found: Mutex<Vec<(usize, u32, Vec<u8>)>> = Mutex::new(Vec::new());
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.budget.threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            frontier.par_iter().enumerate().for_each(|(i, prefix)| {
                if shared.stop.load(Ordering::Relaxed) {
                    return;
                }
                let mut w = Worker::new(tables, &shared, self.n);
                w.stop_on_find = stop_on_find;
                w.replay(prefix);
                w.dfs(prefix.len());
                if let Some(witness) = w.witness {
                    found.lock().unwrap().push((i, w.best, witness));
                }
            });
        });
        let mut found = found.into_inner().unwrap();
        // highest value, then earliest subtree
        found.sort_by_key(|&(i, best, _)| (std::cmp::Reverse(best), i));
        let best = shared.best.load(Ordering::Relaxed);
        RawOutcome {
            best,
            witness: found.into_iter().next().map(|(_, _, w)| w),
            nodes: shared.nodes.load(Ordering::Relaxed),
            exhausted: shared.exhausted.load(Ordering::Relaxed),
        }
    }

    /// Maximum number of colors with no rainbow copy.
    pub fn max_colors(&self) -> Result<SearchResult> {
        self.budget.check()?;
        let start = Instant::now();
        let tables = Tables::new(self.pattern, self.n, self.symmetry_vertices)?;
        let seed = if self.seed { self.incumbent()? } else { None };
        let seed_colors = seed.as_ref().map_or(0, |s| s.num_colors() as u32);
        let raw = self.run(&tables, seed_colors, false, start);

        let mut nodes = raw.nodes;
        let mut witness = match raw.witness {
            Some(colors) if raw.best > seed_colors => Some(EdgeColoring::from_colors(self.n, colors.into_iter().map(u32::from).collect())?),
            _ => seed,
        };
        let parallel = self.budget.threads > 1;
        if parallel && !raw.exhausted && raw.best > seed_colors {
            // Sequential runs report the first optimum in enumeration order;
            // recover the same one here.
            let sequential = Search {
                budget: SearchBudget {
                    threads: 1,
                    max_nodes: None,
                    max_time: None,
                    ..self.budget.clone()
                },
                ..*self
            };
            let again = sequential.run(&tables, raw.best - 1, true, Instant::now());
            nodes += again.nodes;
            if let Some(colors) = again.witness {
                witness = Some(EdgeColoring::from_colors(self.n, colors.into_iter().map(u32::from).collect())?);
            }
        }
        let max_colors = witness.as_ref().map_or(0, EdgeColoring::num_colors);
        debug_assert!(raw.exhausted || max_colors as u32 == raw.best.max(seed_colors));
        Ok(SearchResult {
            max_colors,
            witness,
            nodes_explored: nodes,
            status: if raw.exhausted {
                SearchStatus::BudgetExhausted
            } else {
                SearchStatus::Complete
            },
            elapsed: start.elapsed(),
        })
    }

    /// A coloring with exactly `r` colors and no rainbow copy, if one exists.
    pub fn decide(&self, r: usize) -> Result<Decision> {
        self.budget.check()?;
        if r == 0 {
            return Err(invalid("color count must be at least 1"));
        }
        let tables = Tables::new(self.pattern, self.n, self.symmetry_vertices)?;
        if r > tables.m {
            return Ok(Decision::No);
        }
        let start = Instant::now();
        let found = match self.incumbent()? {
            Some(seed) if seed.num_colors() >= r => Some(seed),
            _ => {
                let raw = self.run(&tables, r as u32 - 1, true, start);
                match raw.witness {
                    Some(colors) => Some(EdgeColoring::from_colors(self.n, colors.into_iter().map(u32::from).collect())?),
                    None if raw.exhausted => return Ok(Decision::Indeterminate),
                    None => None,
                }
            }
        };
        let Some(mut coloring) = found else {
            return Ok(Decision::No);
        };
        // merging two classes never creates a rainbow copy
        while coloring.num_colors() > r {
            coloring = coloring.merge_colors(0, 1)?;
        }
        debug_assert_eq!(count_rainbow(&coloring, self.pattern)?, 0);
        Ok(Decision::Yes(coloring))
    }
}

/// Answer to "is there a coloring with exactly `r` colors and no rainbow copy".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(EdgeColoring),
    No,
    /// The budget ran out first.
    Indeterminate,
}

impl Decision {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Decision::Yes(_) => Some(true),
            Decision::No => Some(false),
            Decision::Indeterminate => None,
        }
    }
}

/// See [`Search::max_colors`].
pub fn max_colors_no_rainbow(n: usize, pattern: &PatternGraph, budget: &SearchBudget) -> Result<SearchResult> {
    Search::new(pattern, n)?.budget(budget.clone()).max_colors()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiRamsey {
    pub value: usize,
    /// False when the search ran out of budget; `value` is then only a
    /// candidate.
    pub is_final: bool,
    pub search: SearchResult,
}

/// `AR(n, pattern)` computed by exhaustive search.
pub fn anti_ramsey(n: usize, pattern: &PatternGraph, budget: &SearchBudget) -> Result<AntiRamsey> {
    let search = max_colors_no_rainbow(n, pattern, budget)?;
    Ok(AntiRamsey {
        value: search.anti_ramsey(),
        is_final: search.is_complete(),
        search,
    })
}

/// See [`Search::decide`].
pub fn decide(n: usize, pattern: &PatternGraph, r: usize, budget: &SearchBudget) -> Result<Decision> {
    Search::new(pattern, n)?.budget(budget.clone()).decide(r)
}

/// Outcome of checking a lower-bound certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub pattern: String,
    pub n: usize,
    pub claimed_colors: usize,
    pub num_colors: usize,
    pub color_count_ok: bool,
    pub rainbow_free: bool,
    pub witness: Option<RainbowWitness>,
    pub passed: bool,
    /// Failed checks, if any.
    pub failures: Vec<String>,
}

/// Checks that `c` uses exactly `claimed` colors and has no rainbow copy of
/// `pattern`; a pass shows `AR(n, pattern) > claimed`.
pub fn verify_certificate(c: &EdgeColoring, pattern: &PatternGraph, claimed: usize) -> Result<CertificateReport> {
    let witness = find_rainbow(c, pattern)?;
    let color_count_ok = c.num_colors() == claimed;
    let rainbow_free = witness.is_none();
    let mut failures = Vec::new();
    if !color_count_ok {
        failures.push(format!("color count: claimed {claimed}, coloring uses {}", c.num_colors()));
    }
    if let Some(w) = &witness {
        failures.push(format!("rainbow {} on vertices {:?}", pattern.name(), w.embedding.map));
    }
    Ok(CertificateReport {
        pattern: pattern.name().to_string(),
        n: c.n(),
        claimed_colors: claimed,
        num_colors: c.num_colors(),
        color_count_ok,
        rainbow_free,
        witness,
        passed: failures.is_empty(),
        failures,
    })
}
