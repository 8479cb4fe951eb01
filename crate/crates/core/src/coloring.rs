//! Edge colorings of complete graphs and the extremal constructions.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{lookup, EdgeIndex, PatternGraph};

/// A total edge coloring of `K_n` in restricted-growth normal form: color
/// ids are `0..num_colors` and first occurrences increase along edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    colors: Vec<u32>,
    num_colors: usize,
}

/// Renumbers colors in place to restricted-growth form; returns the count.
pub(crate) fn normalize_in_place(colors: &mut [u32]) -> usize {
    let mut relabel: Vec<(u32, u32)> = Vec::new();
    for c in colors.iter_mut() {
        let new = match relabel.iter().find(|(old, _)| old == c) {
            Some(&(_, new)) => new,
            None => {
                let new = relabel.len() as u32;
                relabel.push((*c, new));
                new
            }
        };
        *c = new;
    }
    relabel.len()
}

/// Checks totality and normalizes. This is the only way raw color data
/// becomes an [`EdgeColoring`].
pub fn validate(n: usize, assignment: &[Option<u32>]) -> Result<EdgeColoring> {
    if n < 2 {
        return Err(Error::MalformedColoring(format!("host order {n} has no edges")));
    }
    let index = EdgeIndex::new(n);
    if assignment.len() != index.num_edges() {
        return Err(Error::MalformedColoring(format!(
            "expected {} edge colors for K_{n}, got {}",
            index.num_edges(),
            assignment.len()
        )));
    }
    let mut colors = Vec::with_capacity(assignment.len());
    for (e, c) in assignment.iter().enumerate() {
        match c {
            Some(c) => colors.push(*c),
            None => {
                let (u, v) = index.pair_of(e)?;
                return Err(Error::MalformedColoring(format!("edge ({u}, {v}) has no color")));
            }
        }
    }
    let num_colors = normalize_in_place(&mut colors);
    Ok(EdgeColoring { n, colors, num_colors })
}

impl EdgeColoring {
    /// Builds a coloring from one color per edge in index order.
    pub fn from_colors(n: usize, colors: Vec<u32>) -> Result<Self> {
        let raw: Vec<Option<u32>> = colors.into_iter().map(Some).collect();
        validate(n, &raw)
    }

    /// Builds a coloring from `color(u, v)`.
    pub fn from_fn(n: usize, mut color: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        let raw: Vec<u32> = EdgeIndex::new(n).pairs().into_iter().map(|(u, v)| color(u, v)).collect();
        Self::from_colors(n, raw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Colors in edge index order.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_of(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn color(&self, u: usize, v: usize) -> Result<u32> {
        Ok(self.colors[EdgeIndex::new(self.n).index_of(u, v)?])
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(invalid(format!("vertex {v} out of range for K_{}", self.n)));
        }
        Ok(())
    }

    /// Colors on the edges at `v`.
    pub fn color_set_at(&self, v: usize) -> Result<BTreeSet<u32>> {
        self.check_vertex(v)?;
        let index = EdgeIndex::new(self.n);
        Ok((0..self.n)
            .filter(|&w| w != v)
            .map(|w| self.colors[index.index_unchecked(v.min(w), v.max(w))])
            .collect())
    }

    /// Number of distinct colors at `v`.
    pub fn color_degree(&self, v: usize) -> Result<usize> {
        Ok(self.color_set_at(v)?.len())
    }

    /// Vertices joined to `v` by an edge of color `a`.
    pub fn color_neighborhood(&self, v: usize, a: u32) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        let index = EdgeIndex::new(self.n);
        Ok((0..self.n)
            .filter(|&w| w != v && self.colors[index.index_unchecked(v.min(w), v.max(w))] == a)
            .collect())
    }

    /// Recolors every `b` edge with `a`.
    pub fn merge_colors(&self, a: u32, b: u32) -> Result<Self> {
        let used = self.num_colors as u32;
        if a == b || a >= used || b >= used {
            return Err(invalid(format!("cannot merge colors {a} and {b} of a {used}-coloring")));
        }
        let colors = self.colors.iter().map(|&c| if c == b { a } else { c }).collect();
        Self::from_colors(self.n, colors)
    }

    /// The coloring `c'` with `c'(perm[u], perm[v]) = c(u, v)`, renormalized.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(invalid("vertex permutation is not a bijection"));
        }
        let index = EdgeIndex::new(self.n);
        let mut colors = vec![0; self.colors.len()];
        for (e, (u, v)) in index.pairs().into_iter().enumerate() {
            let (a, b) = (perm[u], perm[v]);
            colors[index.index_unchecked(a.min(b), a.max(b))] = self.colors[e];
        }
        Self::from_colors(self.n, colors)
    }

    /// Renames colors through `rename[c]` without renormalizing. The result
    /// is a raw color vector since arbitrary ids are not normal form.
    pub fn renamed_colors(&self, rename: &[u32]) -> Vec<u32> {
        self.colors.iter().map(|&c| rename[c as usize]).collect()
    }

    pub fn to_certificate(&self) -> Certificate {
        let edges = EdgeIndex::new(self.n)
            .pairs()
            .into_iter()
            .zip(&self.colors)
            .map(|((u, v), &c)| [u as u64, v as u64, c as u64])
            .collect();
        Certificate { n: self.n, edges }
    }

    pub fn from_certificate(cert: &Certificate) -> Result<Self> {
        let index = EdgeIndex::new(cert.n);
        if cert.n < 2 || cert.n > 64 {
            return Err(Error::MalformedColoring(format!("unsupported host order {}", cert.n)));
        }
        let mut raw: Vec<Option<u32>> = vec![None; index.num_edges()];
        for &[u, v, c] in &cert.edges {
            let e = index
                .index_of(u as usize, v as usize)
                .map_err(|_| Error::MalformedColoring(format!("bad edge ({u}, {v})")))?;
            let c = u32::try_from(c).map_err(|_| Error::MalformedColoring(format!("color {c} too large")))?;
            if raw[e].replace(c).is_some() {
                return Err(Error::MalformedColoring(format!("edge ({u}, {v}) listed twice")));
            }
        }
        validate(cert.n, &raw)
    }

    /// Certificate JSON, one edge per line.
    pub fn to_json(&self) -> String {
        self.to_certificate().to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cert: Certificate = serde_json::from_str(text)?;
        Self::from_certificate(&cert)
    }
}

impl fmt::Display for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{} [", self.n)?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_char(' ')?;
            }
            write!(f, "{c}")?;
        }
        f.write_char(']')
    }
}

/// Wire form of a coloring: `{"n": .., "edges": [[u, v, color], ..]}` with
/// every edge listed once, `u < v`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub edges: Vec<[u64; 3]>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\"n\": {}, \"edges\": [", self.n);
        for (i, [u, v, c]) in self.edges.iter().enumerate() {
            out.push_str(if i == 0 { "\n  " } else { ",\n  " });
            let _ = write!(out, "[{u}, {v}, {c}]");
        }
        out.push_str("\n]}\n");
        out
    }
}

fn need(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(invalid(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// A rainbow maximal matching `(0,1), (2,3), ...`; every other edge gets
/// one shared extra color.
pub fn c_matching(n: usize) -> Result<EdgeColoring> {
    need(n, 2, "c_matching")?;
    let extra = (n / 2) as u32;
    EdgeColoring::from_fn(n, |u, v| if u % 2 == 0 && v == u + 1 { (u / 2) as u32 } else { extra })
}

/// A rainbow star at vertex 0; every other edge gets one shared extra color.
pub fn c_star(n: usize) -> Result<EdgeColoring> {
    need(n, 3, "c_star")?;
    EdgeColoring::from_fn(n, |u, v| if u == 0 { v as u32 - 1 } else { n as u32 - 1 })
}

/// Edge `{i, j}` gets color `min(i, j)`.
pub fn c_min(n: usize) -> Result<EdgeColoring> {
    need(n, 2, "c_min")?;
    EdgeColoring::from_fn(n, |u, _| u as u32)
}

/// A rainbow clique on `0..k`; every other edge gets one shared extra color.
pub fn rainbow_clique_plus_one(n: usize, k: usize) -> Result<EdgeColoring> {
    if k < 3 || n <= k {
        return Err(invalid(format!("clique+1 needs 3 <= k < n, got k = {k}, n = {n}")));
    }
    let index = EdgeIndex::new(k);
    let extra = index.num_edges() as u32;
    EdgeColoring::from_fn(n, |u, v| if v < k { index.index_unchecked(u, v) as u32 } else { extra })
}

/// A rainbow 4-cycle `0-1-2-3-0`; every other edge gets one shared extra color.
pub fn rainbow_c4_plus_one(n: usize) -> Result<EdgeColoring> {
    need(n, 5, "rainbow_c4_plus_one")?;
    EdgeColoring::from_fn(n, |u, v| match (u, v) {
        (0, 1) => 0,
        (1, 2) => 1,
        (2, 3) => 2,
        (0, 3) => 3,
        _ => 4,
    })
}

/// The six-color coloring of `K_5` with no rainbow `C3+P2`: vertex 0 is the
/// hub with a rainbow star, `(1,2)` and `(3,4)` share a fifth color and the
/// rest share a sixth.
pub fn c3p2_special_k5() -> EdgeColoring {
    EdgeColoring::from_fn(5, |u, v| match (u, v) {
        (0, v) => v as u32 - 1,
        (1, 2) | (3, 4) => 4,
        _ => 5,
    })
    .expect("K_5 coloring is total")
}

/// The named constructions, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Construction {
    Matching,
    Star,
    Min,
    CliquePlusOne(usize),
    C4PlusOne,
    C3P2K5,
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Ok(match lower.as_str() {
            "matching" => Construction::Matching,
            "star" => Construction::Star,
            "min" => Construction::Min,
            "c4+1" => Construction::C4PlusOne,
            "c3p2-k5" => Construction::C3P2K5,
            other => match other.strip_prefix("clique+1:").map(str::parse) {
                Some(Ok(k)) => Construction::CliquePlusOne(k),
                _ => return Err(Error::UnknownConstruction(s.to_string())),
            },
        })
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Matching => f.write_str("matching"),
            Construction::Star => f.write_str("star"),
            Construction::Min => f.write_str("min"),
            Construction::CliquePlusOne(k) => write!(f, "clique+1:{k}"),
            Construction::C4PlusOne => f.write_str("c4+1"),
            Construction::C3P2K5 => f.write_str("c3p2-k5"),
        }
    }
}

impl Construction {
    pub fn build(self, n: usize) -> Result<EdgeColoring> {
        match self {
            Construction::Matching => c_matching(n),
            Construction::Star => c_star(n),
            Construction::Min => c_min(n),
            Construction::CliquePlusOne(k) => rainbow_clique_plus_one(n, k),
            Construction::C4PlusOne => rainbow_c4_plus_one(n),
            Construction::C3P2K5 if n == 5 => Ok(c3p2_special_k5()),
            Construction::C3P2K5 => Err(invalid(format!("c3p2-k5 is defined on K_5 only, got n = {n}"))),
        }
    }

    /// Number of colors the construction uses on `K_n`.
    pub fn documented_colors(self, n: usize) -> usize {
        match self {
            Construction::Matching if n == 2 => 1,
            Construction::Matching => n / 2 + 1,
            Construction::Star => n,
            Construction::Min => n - 1,
            Construction::CliquePlusOne(k) => k * (k - 1) / 2 + 1,
            Construction::C4PlusOne => 5,
            Construction::C3P2K5 => 6,
        }
    }

    /// Patterns the construction has no rainbow copy of.
    pub fn targets(self) -> Vec<&'static PatternGraph> {
        let names: &[&str] = match self {
            Construction::Matching => &["K13", "Y", "K13+P2"],
            Construction::Star => &["3P2", "P3+2P2", "C3+P2", "P4+P2", "P5", "2P3"],
            Construction::Min => &["C3", "Q"],
            Construction::CliquePlusOne(3) => &["Y"],
            Construction::CliquePlusOne(4) => &["2P3"],
            Construction::CliquePlusOne(_) => &[],
            Construction::C4PlusOne => &["K13+P2"],
            Construction::C3P2K5 => &["C3+P2"],
        };
        names.iter().map(|n| lookup(n).expect("catalog name")).collect()
    }

    /// Every construction that is defined on `K_n`, in a fixed order.
    pub fn all_for(n: usize) -> Vec<Construction> {
        let mut out = Vec::new();
        if n >= 2 {
            out.push(Construction::Matching);
            out.push(Construction::Min);
        }
        if n >= 3 {
            out.push(Construction::Star);
        }
        out.extend((3..n).map(Construction::CliquePlusOne));
        if n >= 5 {
            out.push(Construction::C4PlusOne);
        }
        if n == 5 {
            out.push(Construction::C3P2K5);
        }
        out
    }
}
