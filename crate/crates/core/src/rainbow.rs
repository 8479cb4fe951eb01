//! Rainbow (multicolored) copies of patterns.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{invalid, Result};
use crate::graph::{embeddings_by_edge, enumerate_embeddings, EdgeIndex, Embedding, PatternGraph};

/// Marker for an edge without a color in a [`PartialColoring`].
pub const UNCOLORED: u32 = u32::MAX;

/// A copy of a pattern whose edges carry pairwise distinct colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowWitness {
    pub embedding: Embedding,
    /// Color of each pattern edge's image.
    pub colors: Vec<u32>,
}

#[inline]
pub(crate) fn all_distinct(colors: &[u32]) -> bool {
    match *colors {
        [] | [_] => true,
        [a, b] => a != b,
        [a, b, c] => a != b && a != c && b != c,
        [a, b, c, d] => a != b && a != c && a != d && b != c && b != d && c != d,
        _ => {
            let mut sorted = colors.to_vec();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        }
    }
}

fn colors_of(c: &EdgeColoring, emb: &Embedding) -> Vec<u32> {
    emb.edge_images.iter().map(|&e| c.color_of(e)).collect()
}

/// The first rainbow copy in embedding order, if any.
pub fn find_rainbow(c: &EdgeColoring, pattern: &PatternGraph) -> Result<Option<RainbowWitness>> {
    let embeddings = enumerate_embeddings(pattern, c.n())?;
    Ok(embeddings.iter().find_map(|emb| {
        let colors = colors_of(c, emb);
        all_distinct(&colors).then(|| RainbowWitness {
            embedding: emb.clone(),
            colors,
        })
    }))
}

/// Number of rainbow copies.
pub fn count_rainbow(c: &EdgeColoring, pattern: &PatternGraph) -> Result<usize> {
    let embeddings = enumerate_embeddings(pattern, c.n())?;
    Ok(embeddings.iter().filter(|emb| all_distinct(&colors_of(c, emb))).count())
}

/// An edge coloring under construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    n: usize,
    colors: Vec<u32>,
}

impl PartialColoring {
    pub fn new(n: usize) -> Self {
        PartialColoring {
            n,
            colors: vec![UNCOLORED; EdgeIndex::new(n).num_edges()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, edge: usize, color: u32) {
        self.colors[edge] = color;
    }

    pub fn clear(&mut self, edge: usize) {
        self.colors[edge] = UNCOLORED;
    }

    pub fn get(&self, edge: usize) -> Option<u32> {
        match self.colors[edge] {
            UNCOLORED => None,
            c => Some(c),
        }
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != UNCOLORED)
    }
}

impl From<&EdgeColoring> for PartialColoring {
    fn from(c: &EdgeColoring) -> Self {
        PartialColoring {
            n: c.n(),
            colors: c.colors().to_vec(),
        }
    }
}

/// Whether some fully colored copy through `edge` is rainbow. Copies with
/// an uncolored edge are skipped.
pub fn has_rainbow_touching(partial: &PartialColoring, pattern: &PatternGraph, edge: usize) -> Result<bool> {
    if edge >= partial.colors.len() || partial.colors[edge] == UNCOLORED {
        return Err(invalid(format!("edge {edge} is not colored")));
    }
    let embeddings = enumerate_embeddings(pattern, partial.n)?;
    let buckets = embeddings_by_edge(pattern, partial.n)?;
    Ok(buckets[edge].iter().any(|&pos| {
        let colors: Vec<u32> = embeddings[pos].edge_images.iter().map(|&e| partial.colors[e]).collect();
        !colors.contains(&UNCOLORED) && all_distinct(&colors)
    }))
}
