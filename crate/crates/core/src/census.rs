//! Catalogs of small connected graphs up to isomorphism.
//!
//! Canonical forms come from colour refinement plus individualization:
//! refine degree classes until stable, branch on every vertex of the first
//! smallest non-singleton class, and keep the least adjacency code over
//! all discrete leaves. Graphs on `n` vertices are generated from those on
//! `n - 1` by attaching a new vertex to every nonempty neighbour subset,
//! which reaches every connected graph because each one has a vertex whose
//! removal keeps it connected.

use std::collections::HashSet;

use crate::graph::{Graph, Vertex};

/// Largest vertex count the canonical codes can hold.
pub const MAX_CENSUS_VERTICES: usize = 16;

/// Upper-triangle adjacency bits in graph6 order under a vertex ordering.
type Code = u128;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn refine(adj: &[u32], colors: &mut Vec<u32>) {
    let n = adj.len();
    let mut classes = count_distinct(colors);
    loop {
        let mut signatures: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        signatures.sort();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (signatures[i].0 != signatures[i - 1].0 || signatures[i].1 != signatures[i - 1].1) {
                rank += 1;
            }
            colors[signatures[i].2] = rank;
        }
        let now = rank as usize + 1;
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

fn code_for(adj: &[u32], colors: &[u32]) -> Code {
    let n = adj.len();
    let mut order = vec![0; n];
    for (v, &c) in colors.iter().enumerate() {
        order[c as usize] = v;
    }
    let mut code: Code = 0;
    for j in 1..n {
        for i in 0..j {
            code <<= 1;
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

fn search(adj: &[u32], colors: Vec<u32>, best: &mut Option<Code>) {
    let n = adj.len();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let Some(target) = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c)) else {
        let code = code_for(adj, &colors);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] as usize == target) {
        let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
        next[v] -= 1;
        refine(adj, &mut next);
        search(adj, next, best);
    }
}

/// Adjacency code that is equal for two graphs iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> u128 {
    let n = g.vertex_count();
    assert!(n <= MAX_CENSUS_VERTICES, "canonical codes support at most 16 vertices");
    let adj = adjacency_masks(g);
    let mut colors: Vec<u32> = (0..n).map(|v| adj[v].count_ones()).collect();
    refine(&adj, &mut colors);
    let mut best = None;
    search(&adj, colors, &mut best);
    best.unwrap_or(0)
}

fn graph_from_code(n: usize, code: Code) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::with_vertices(n, edges).expect("code describes a simple graph")
}

/// The isomorphic copy of `g` in canonical vertex order.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.vertex_count(), canonical_code(g))
}

/// All connected graphs on exactly `n` vertices, one per isomorphism
/// class, each in canonical form, sorted by canonical code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_up_to(n).pop().unwrap_or_default()
}

/// `result[k]` holds the connected graphs on `k + 1` vertices, for
/// `k + 1 <= max_n`.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= MAX_CENSUS_VERTICES, "census supports at most 16 vertices");
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return levels;
    }
    levels.push(vec![Graph::with_vertices(1, []).expect("K1")]);
    for n in 2..=max_n {
        let prev = levels.last().expect("previous level");
        let mut seen: HashSet<Code> = HashSet::new();
        for g in prev {
            for subset in 1u32..(1 << (n - 1)) {
                let mut edges = g.edges().to_vec();
                edges.extend((0..n - 1).filter(|&v| subset >> v & 1 == 1).map(|v| (v, n - 1)));
                let candidate = Graph::with_vertices(n, edges).expect("new vertex adds fresh edges");
                seen.insert(canonical_code(&candidate));
            }
        }
        let mut codes: Vec<Code> = seen.into_iter().collect();
        codes.sort_unstable();
        levels.push(codes.into_iter().map(|c| graph_from_code(n, c)).collect());
    }
    levels
}
