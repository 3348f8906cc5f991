//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! Everything here works straight from the definitions (sets of labels,
//! permutation search for isomorphism, explicit path enumeration) and does
//! not call into the code paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use spectra_core::graph::Vertex;
use spectra_core::{parse_graph6, Graph, Labeling};

pub const CORPUS: &str = include_str!("../../data/corpus.g6");

pub fn corpus() -> Vec<Graph> {
    CORPUS.lines().map(|l| parse_graph6(l).expect("corpus line parses")).collect()
}

pub fn lab(g: &Graph, labels: &[u32]) -> Labeling {
    Labeling::new(g, labels.to_vec()).expect("valid labeling")
}

/// Label set at `x` over the edges of `g` accepted by `keep`.
pub fn label_set(g: &Graph, labels: &[u32], x: Vertex, keep: impl Fn(Vertex, Vertex) -> bool) -> BTreeSet<u32> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| (u == x || v == x) && keep(u, v))
        .map(|(e, _)| labels[e])
        .collect()
}

/// A nonempty set is an interval iff it equals `{min, ..., max}`.
pub fn is_interval_set(s: &BTreeSet<u32>) -> bool {
    match (s.first(), s.last()) {
        (Some(&lo), Some(&hi)) => (lo..=hi).all(|v| s.contains(&v)),
        _ => false,
    }
}

pub fn oracle_u(g: &Graph, labels: &[u32]) -> Vec<Vertex> {
    g.vertices().filter(|&x| is_interval_set(&label_set(g, labels, x, |_, _| true))).collect()
}

/// All permutations of `1..=m` in lexicographic order (Heap-free recursion).
pub fn all_permutations(m: usize) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=m as u32).collect(), &mut out);
    out
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Backtracking search for a vertex bijection preserving adjacency.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let (adj_a, adj_b) = (adjacency_matrix(a), adjacency_matrix(b));
    let n = a.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(i: usize, map: &mut Vec<usize>, used: &mut Vec<bool>, a: &[Vec<bool>], b: &[Vec<bool>], ga: &Graph, gb: &Graph) -> bool {
        let n = map.len();
        if i == n {
            return true;
        }
        for t in 0..n {
            if used[t] || ga.degree(i) != gb.degree(t) {
                continue;
            }
            if (0..i).any(|j| a[i][j] != b[t][map[j]]) {
                continue;
            }
            map[i] = t;
            used[t] = true;
            if extend(i + 1, map, used, a, b, ga, gb) {
                return true;
            }
            used[t] = false;
        }
        map[i] = usize::MAX;
        false
    }
    extend(0, &mut map, &mut used, &adj_a, &adj_b, a, b)
}

/// `T[A]` written out from the definition: spine `x_1..x_n`, then
/// `a_{i-1}` leaves on each `x_i`, `2 <= i <= n-1`.
pub fn t_of(a: &[usize]) -> Graph {
    let n = a.len() + 2;
    let mut edges = Vec::new();
    for i in 0..n - 1 {
        edges.push((i, i + 1));
    }
    let mut next = n;
    for (k, &count) in a.iter().enumerate() {
        for _ in 0..count {
            edges.push((k + 1, next));
            next += 1;
        }
    }
    Graph::with_vertices(next, edges).unwrap()
}

/// All sequences of `len` nonnegative integers summing to `total`.
pub fn compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Galaxy test straight from the definition: `K2`, or isomorphic to some
/// `T[A]` with the same vertex and edge counts.
pub fn oracle_is_galaxy(h: &Graph) -> bool {
    let (v, e) = (h.vertex_count(), h.edge_count());
    if v == 2 && e == 1 {
        return true;
    }
    (3..=v)
        .flat_map(|n| compositions(v - n, n - 2))
        .filter(|a| a.len() + 1 + a.iter().sum::<usize>() == e)
        .any(|a| isomorphic(h, &t_of(&a)))
}

/// Gradient-path test from the definition. Returns the satisfied
/// conditions `(ascending, descending)` or `None` if `path` is not a simple
/// path of interval vertices.
pub fn oracle_gradient_conditions(g: &Graph, labels: &[u32], path: &[Vertex]) -> Option<(bool, bool)> {
    let u: BTreeSet<Vertex> = oracle_u(g, labels).into_iter().collect();
    let distinct: BTreeSet<_> = path.iter().collect();
    if path.len() < 2 || distinct.len() != path.len() || !path.iter().all(|x| u.contains(x)) {
        return None;
    }
    let induced = |x: Vertex| label_set(g, labels, x, |a, b| u.contains(&a) && u.contains(&b));
    let (mut asc, mut desc) = (true, true);
    for w in path.windows(2) {
        let e = g.edges().iter().position(|&(a, b)| (a, b) == (w[0], w[1]) || (b, a) == (w[0], w[1]))?;
        let l = labels[e];
        let (s0, s1) = (induced(w[0]), induced(w[1]));
        asc &= s0.last() == Some(&l) && s1.first() == Some(&l);
        desc &= s0.first() == Some(&l) && s1.last() == Some(&l);
    }
    Some((asc, desc))
}

/// Every simple path (as a vertex sequence with at least one edge) in `g`.
pub fn all_simple_paths(g: &Graph) -> Vec<Vec<Vertex>> {
    fn rec(g: &Graph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let last = *path.last().unwrap();
        for y in g.neighbors(last).collect::<Vec<_>>() {
            if path.contains(&y) {
                continue;
            }
            path.push(y);
            out.push(path.clone());
            rec(g, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        rec(g, &mut vec![s], &mut out);
    }
    out.sort();
    out
}
