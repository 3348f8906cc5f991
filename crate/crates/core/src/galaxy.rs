//! Galaxies: `K2`, or a spine path `x_1 ... x_n` (`n >= 3`) with `a_{i-1}`
//! pendant leaves hanging off each internal spine vertex `x_i`.
//!
//! Recognition uses the caterpillar characterization (a tree whose
//! non-leaf vertices induce a path); the integration tests check it
//! against a brute-force search over all pendant sequences.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::labeling::Labeling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalaxyError {
    #[error("a pendant sequence needs at least one entry (spine of length >= 3)")]
    EmptySequence,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a galaxy")]
    NotAGalaxy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GalaxyKind {
    K2,
    Spine,
}

/// A witness that a graph is a galaxy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GalaxyDecomposition {
    pub kind: GalaxyKind,
    /// Spine vertices `x_1 ... x_n`. For `K2` the two vertices.
    pub spine: Vec<Vertex>,
    /// `a_1 ... a_{n-2}`; empty for `K2`.
    pub pendant_counts: Vec<usize>,
    /// `pendants[i]` holds the leaves attached to spine vertex `i + 1`
    /// (0-based), sorted.
    pub pendants: Vec<Vec<Vertex>>,
}

impl GalaxyDecomposition {
    pub fn spine_len(&self) -> usize {
        self.spine.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.spine.len() + self.pendant_counts.iter().sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() - 1
    }

    /// Flips the spine if the reversed pendant sequence is smaller.
    fn canonicalize(&mut self) {
        let reversed: Vec<usize> = self.pendant_counts.iter().rev().copied().collect();
        if reversed < self.pendant_counts {
            self.spine.reverse();
            self.pendants.reverse();
            self.pendant_counts = reversed;
        }
    }
}

/// Builds `T[A]` for `A = pendant_counts`.
///
/// Vertex layout: spine `x_1..x_n` as `0..n`, then the pendants of `x_2`,
/// `x_3`, ... in order. Edge layout: spine edges `(x_i, x_{i+1})` first,
/// then pendant edges grouped by spine vertex.
pub fn build_galaxy(pendant_counts: &[usize]) -> Result<(Graph, GalaxyDecomposition), GalaxyError> {
    if pendant_counts.is_empty() {
        return Err(GalaxyError::EmptySequence);
    }
    let n = pendant_counts.len() + 2;
    let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (i - 1, i)).collect();
    let mut pendants = Vec::with_capacity(n - 2);
    let mut next = n;
    for (i, &count) in pendant_counts.iter().enumerate() {
        let block: Vec<Vertex> = (next..next + count).collect();
        edges.extend(block.iter().map(|&y| (i + 1, y)));
        next += count;
        pendants.push(block);
    }
    let graph = Graph::with_vertices(next, edges).expect("T[A] is simple");
    let mut decomposition = GalaxyDecomposition {
        kind: GalaxyKind::Spine,
        spine: (0..n).collect(),
        pendant_counts: pendant_counts.to_vec(),
        pendants,
    };
    decomposition.canonicalize();
    Ok((graph, decomposition))
}

/// True iff `h` is `K2` or a caterpillar on at least three vertices.
pub fn is_galaxy(h: &Graph) -> Result<bool, GalaxyError> {
    if !h.is_connected() {
        return Err(GalaxyError::Disconnected);
    }
    let n = h.vertex_count();
    if n == 2 {
        return Ok(h.edge_count() == 1);
    }
    if n < 3 || !h.is_tree() {
        return Ok(false);
    }
    // Deleting the leaves of a tree leaves a subtree; it is a path iff no
    // remaining vertex keeps more than two non-leaf neighbours.
    Ok(h.vertices()
        .filter(|&x| h.degree(x) >= 2)
        .all(|x| h.neighbors(x).filter(|&y| h.degree(y) >= 2).count() <= 2))
}

/// Finds a spine and pendant sequence for a galaxy.
///
/// The spine runs between the smallest-index peripheral vertex and the
/// smallest-index vertex at maximum distance from it, then is flipped if
/// that makes the pendant sequence lexicographically smaller.
pub fn decompose_galaxy(h: &Graph) -> Result<GalaxyDecomposition, GalaxyError> {
    if !matches!(is_galaxy(h), Ok(true)) {
        return Err(GalaxyError::NotAGalaxy);
    }
    if h.vertex_count() == 2 {
        return Ok(GalaxyDecomposition {
            kind: GalaxyKind::K2,
            spine: vec![0, 1],
            pendant_counts: Vec::new(),
            pendants: Vec::new(),
        });
    }
    let (diam, peripherals) = h.diameter_and_peripherals().map_err(|_| GalaxyError::NotAGalaxy)?;
    let start = peripherals.as_slice()[0];
    let dist = h.distances_from(start);
    let end = h.vertices().find(|&y| dist[y] == Some(diam)).ok_or(GalaxyError::NotAGalaxy)?;
    let spine = h.shortest_path(start, end).map_err(|_| GalaxyError::NotAGalaxy)?;

    let mut on_spine = vec![false; h.vertex_count()];
    for &x in &spine {
        on_spine[x] = true;
    }
    let mut pendants: Vec<Vec<Vertex>> = spine[1..spine.len() - 1]
        .iter()
        .map(|&x| h.neighbors(x).filter(|&y| !on_spine[y]).collect())
        .collect();
    for block in &mut pendants {
        block.sort_unstable();
        if block.iter().any(|&y| h.degree(y) != 1) {
            return Err(GalaxyError::NotAGalaxy);
        }
    }
    let covered = spine.len() + pendants.iter().map(Vec::len).sum::<usize>();
    if covered != h.vertex_count() {
        return Err(GalaxyError::NotAGalaxy);
    }
    let mut decomposition = GalaxyDecomposition {
        kind: GalaxyKind::Spine,
        spine,
        pendant_counts: pendants.iter().map(Vec::len).collect(),
        pendants,
    };
    decomposition.canonicalize();
    Ok(decomposition)
}

/// A bijective labeling under which every vertex of the galaxy `h` has an
/// interval spectrum.
///
/// Labels are handed out left to right along the spine: the edge into
/// each internal spine vertex, then its pendant edges, then the edge out.
/// Each internal spine vertex therefore sees one consecutive block and
/// every other vertex is a leaf.
pub fn galaxy_labeling(h: &Graph) -> Result<Labeling, GalaxyError> {
    let decomposition = decompose_galaxy(h)?;
    Ok(labeling_for(h, &decomposition))
}

pub(crate) fn labeling_for(h: &Graph, decomposition: &GalaxyDecomposition) -> Labeling {
    let mut labels = vec![0u32; h.edge_count()];
    let mut next = 1u32;
    let mut assign = |x: Vertex, y: Vertex| {
        let e = h.edge_between(x, y).expect("decomposition edges exist in the graph");
        labels[e] = next;
        next += 1;
    };
    let spine = &decomposition.spine;
    assign(spine[0], spine[1]);
    for i in 1..spine.len() - 1 {
        for &y in &decomposition.pendants[i - 1] {
            assign(spine[i], y);
        }
        assign(spine[i], spine[i + 1]);
    }
    Labeling::from_permutation(labels)
}
