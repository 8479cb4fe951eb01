//! Pattern catalog, edge indexing of complete host graphs and embedding tables.
//!
//! Host graphs are always complete graphs `K_n` on vertices `0..n`. Their
//! edges are numbered in lexicographic order of the pair `(u, v)`, `u < v`,
//! so vertex 0's star comes first, then the remaining edges at vertex 1, and
//! so on.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{invalid, Error, Result};

/// Largest host order for which embedding tables are built.
pub const MAX_HOST_ORDER: usize = 12;

/// A small target graph with no isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternGraph {
    name: &'static str,
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    aut_count: u64,
}

impl PatternGraph {
    fn new(name: &'static str, edges: &[(usize, usize)]) -> Self {
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let num_vertices = edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
        let aut_count = count_automorphisms(num_vertices, &edges);
        PatternGraph {
            name,
            num_vertices,
            edges,
            aut_count,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Order of the automorphism group.
    pub fn aut_count(&self) -> u64 {
        self.aut_count
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

fn count_automorphisms(num_vertices: usize, edges: &[(usize, usize)]) -> u64 {
    let mut adj = vec![vec![false; num_vertices]; num_vertices];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    permutations(num_vertices)
        .filter(|p| edges.iter().all(|&(u, v)| adj[p[u]][p[v]]))
        .count() as u64
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next: Option<Vec<usize>> = Some((0..k).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut p = current.clone();
        // standard next-permutation step
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            next = Some(p);
        }
        Some(current)
    })
}

static CATALOG: OnceLock<Vec<PatternGraph>> = OnceLock::new();

/// The nineteen graphs with at most four edges and no isolated vertices.
///
/// Vertex 0 is the star center of `K13`, `K14` and `Y`, and the vertex of the
/// triangle carrying the pendant edge in `Q`.
pub fn catalog() -> &'static [PatternGraph] {
    CATALOG.get_or_init(|| {
        vec![
            PatternGraph::new("P2", &[(0, 1)]),
            PatternGraph::new("P3", &[(0, 1), (1, 2)]),
            PatternGraph::new("2P2", &[(0, 1), (2, 3)]),
            PatternGraph::new("P4", &[(0, 1), (1, 2), (2, 3)]),
            PatternGraph::new("P3+P2", &[(0, 1), (1, 2), (3, 4)]),
            PatternGraph::new("K13", &[(0, 1), (0, 2), (0, 3)]),
            PatternGraph::new("Y", &[(0, 1), (0, 2), (0, 3), (1, 4)]),
            PatternGraph::new("K13+P2", &[(0, 1), (0, 2), (0, 3), (4, 5)]),
            PatternGraph::new("C3", &[(0, 1), (1, 2), (2, 0)]),
            PatternGraph::new("Q", &[(0, 1), (1, 2), (2, 0), (0, 3)]),
            PatternGraph::new("3P2", &[(0, 1), (2, 3), (4, 5)]),
            PatternGraph::new("P3+2P2", &[(0, 1), (1, 2), (3, 4), (5, 6)]),
            PatternGraph::new("C3+P2", &[(0, 1), (1, 2), (2, 0), (3, 4)]),
            PatternGraph::new("P4+P2", &[(0, 1), (1, 2), (2, 3), (4, 5)]),
            PatternGraph::new("P5", &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            PatternGraph::new("2P3", &[(0, 1), (1, 2), (3, 4), (4, 5)]),
            PatternGraph::new("K14", &[(0, 1), (0, 2), (0, 3), (0, 4)]),
            PatternGraph::new("C4", &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            PatternGraph::new("4P2", &[(0, 1), (2, 3), (4, 5), (6, 7)]),
        ]
    })
}

fn canonical_name(name: &str) -> String {
    let cleaned: String = name
        .chars()
        .filter(|c| !c.is_whitespace() && *c != ',' && *c != '_')
        .map(|c| c.to_ascii_uppercase())
        .collect();
    let mut parts: Vec<&str> = cleaned.split('+').collect();
    parts.sort_unstable();
    parts.join("+")
}

/// Looks up a catalog pattern by name. Matching ignores case, whitespace and
/// commas (`K1,3` is `K13`) and the order of `+`-separated components.
pub fn lookup(name: &str) -> Result<&'static PatternGraph> {
    let wanted = canonical_name(name);
    catalog()
        .iter()
        .find(|p| canonical_name(p.name) == wanted)
        .ok_or_else(|| Error::UnknownPattern {
            name: name.to_string(),
            known: catalog().iter().map(|p| p.name).collect::<Vec<_>>().join(", "),
        })
}

/// Lexicographic numbering of the edges of `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeIndex {
    n: usize,
}

impl EdgeIndex {
    pub fn new(n: usize) -> Self {
        EdgeIndex { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn index_of(&self, u: usize, v: usize) -> Result<usize> {
        if u == v || u >= self.n || v >= self.n {
            return Err(invalid(format!("no edge ({u}, {v}) in K_{}", self.n)));
        }
        Ok(self.index_unchecked(u.min(v), u.max(v)))
    }

    #[inline]
    pub(crate) fn index_unchecked(&self, u: usize, v: usize) -> usize {
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    pub fn pair_of(&self, index: usize) -> Result<(usize, usize)> {
        if index >= self.num_edges() {
            return Err(invalid(format!("edge index {index} out of range for K_{}", self.n)));
        }
        let mut rest = index;
        for u in 0..self.n {
            let row = self.n - u - 1;
            if rest < row {
                return Ok((u, u + 1 + rest));
            }
            rest -= row;
        }
        unreachable!()
    }

    /// All pairs in index order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| (u + 1..self.n).map(move |v| (u, v))).collect()
    }
}

/// Index of edge `{u, v}` in `K_n`.
pub fn edge_index(n: usize, u: usize, v: usize) -> Result<usize> {
    EdgeIndex::new(n).index_of(u, v)
}

/// One copy of a pattern inside `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Embedding {
    /// Host vertex of each pattern vertex.
    pub map: Vec<usize>,
    /// Host edge index of each pattern edge, in pattern edge order.
    pub edge_images: Vec<usize>,
}

type TableKey = (&'static str, usize);

fn embedding_cache() -> &'static Mutex<HashMap<TableKey, Arc<[Embedding]>>> {
    static CACHE: OnceLock<Mutex<HashMap<TableKey, Arc<[Embedding]>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_host(pattern: &PatternGraph, n: usize) -> Result<()> {
    if n < pattern.num_vertices {
        return Err(invalid(format!(
            "K_{n} is too small for {} ({} vertices)",
            pattern.name, pattern.num_vertices
        )));
    }
    if n > MAX_HOST_ORDER {
        return Err(invalid(format!("host order {n} exceeds the supported maximum {MAX_HOST_ORDER}")));
    }
    Ok(())
}

/// Every copy of `pattern` in `K_n`, one embedding per copy.
///
/// The representative of each copy is its lexicographically smallest vertex
/// map and the list is sorted by map. Results are cached per `(pattern, n)`.
pub fn enumerate_embeddings(pattern: &PatternGraph, n: usize) -> Result<Arc<[Embedding]>> {
    check_host(pattern, n)?;
    let key = (pattern.name, n);
    if let Some(hit) = embedding_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let table: Arc<[Embedding]> = build_embeddings(pattern, n).into();
    embedding_cache().lock().unwrap().entry(key).or_insert(table.clone());
    Ok(table)
}

fn build_embeddings(pattern: &PatternGraph, n: usize) -> Vec<Embedding> {
    let index = EdgeIndex::new(n);
    let k = pattern.num_vertices;
    let mut seen: HashSet<u128> = HashSet::new();
    let mut out = Vec::new();
    let mut map = Vec::with_capacity(k);
    let mut used = vec![false; n];

    // Injective maps are generated in lexicographic order, so the first map
    // reaching a given edge set is that copy's smallest representative.
    fn rec(
        pattern: &PatternGraph,
        index: &EdgeIndex,
        map: &mut Vec<usize>,
        used: &mut [bool],
        seen: &mut HashSet<u128>,
        out: &mut Vec<Embedding>,
    ) {
        if map.len() == pattern.num_vertices {
            let edge_images: Vec<usize> = pattern
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (map[a], map[b]);
                    index.index_unchecked(x.min(y), x.max(y))
                })
                .collect();
            let key = edge_images.iter().fold(0u128, |acc, &e| acc | (1u128 << e));
            if seen.insert(key) {
                out.push(Embedding {
                    map: map.clone(),
                    edge_images,
                });
            }
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                map.push(v);
                rec(pattern, index, map, used, seen, out);
                map.pop();
                used[v] = false;
            }
        }
    }

    rec(pattern, &index, &mut map, &mut used, &mut seen, &mut out);
    debug_assert!(k == 0 || !out.is_empty());
    out
}

/// For each host edge, the positions (into [`enumerate_embeddings`]) of the
/// embeddings whose image uses that edge.
pub fn embeddings_by_edge(pattern: &PatternGraph, n: usize) -> Result<Vec<Vec<usize>>> {
    let embeddings = enumerate_embeddings(pattern, n)?;
    let mut buckets = vec![Vec::new(); EdgeIndex::new(n).num_edges()];
    for (pos, emb) in embeddings.iter().enumerate() {
        for &e in &emb.edge_images {
            buckets[e].push(pos);
        }
    }
    Ok(buckets)
}
