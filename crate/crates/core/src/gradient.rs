//! Gradient paths inside the interval-induced subgraph.
//!
//! A path `x_0 ... x_{k+1}` through interval vertices is ascending when each
//! edge label equals the largest label at `x_i` and the smallest label at
//! `x_{i+1}`, descending for the mirror condition. Spectra here are taken
//! in the induced subgraph, i.e. only over edges between interval vertices.
//!
//! A single edge whose two endpoints both have singleton induced spectra
//! satisfies both conditions. Such a path is recorded as `Ascending` when
//! written from the smaller vertex index to the larger one and `Descending`
//! otherwise, with `tie_broken` set.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::labeling::{interval_flags, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Ascending,
    Descending,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Self::Ascending => Self::Descending,
            Self::Descending => Self::Ascending,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradientPath {
    pub vertices: Vec<Vertex>,
    #[serde(rename = "labels")]
    pub edge_labels: Vec<u32>,
    pub direction: Direction,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub tie_broken: bool,
}

impl GradientPath {
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edge_labels = self.edge_labels.clone();
        edge_labels.reverse();
        Self { vertices, edge_labels, direction: self.direction.reversed(), tie_broken: self.tie_broken }
    }

    pub fn sorted_vertices(&self) -> Vec<Vertex> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    pub fn as_ascending(&self) -> Self {
        match self.direction {
            Direction::Ascending => self.clone(),
            Direction::Descending => self.reversed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradientError {
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("no vertex has an interval spectrum")]
    NotInLambda,
    #[error("more than {} gradient paths; output truncated", paths.len())]
    TruncatedOutput { paths: Vec<GradientPath> },
    #[error("not a gradient path: {0}")]
    InvalidPath(String),
    #[error("{count} maximal gradient paths contain the given path")]
    NonUniqueContainer { count: usize },
}

/// Interval membership and induced spectrum bounds for one labeling.
struct Context<'a> {
    g: &'a Graph,
    f: &'a Labeling,
    in_u: Vec<bool>,
    /// `(min, max)` of the induced spectrum; `None` without interval neighbours.
    bounds: Vec<Option<(u32, u32)>>,
    /// Interval neighbours of each interval vertex, ascending.
    neighbors: Vec<Vec<Vertex>>,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, f: &'a Labeling) -> Self {
        let in_u = interval_flags(g, f.labels());
        let mut bounds = vec![None; g.vertex_count()];
        let mut neighbors = vec![Vec::new(); g.vertex_count()];
        for x in g.vertices().filter(|&x| in_u[x]) {
            for &(y, e) in g.incident(x) {
                if in_u[y] {
                    let l = f.label(e);
                    let b: &mut Option<(u32, u32)> = &mut bounds[x];
                    *b = Some(b.map_or((l, l), |(lo, hi)| (lo.min(l), hi.max(l))));
                    neighbors[x].push(y);
                }
            }
            neighbors[x].sort_unstable();
        }
        Self { g, f, in_u, bounds, neighbors }
    }

    fn is_member(&self) -> bool {
        self.in_u.iter().any(|&b| b)
    }

    fn label(&self, x: Vertex, y: Vertex) -> Option<u32> {
        self.g.edge_between(x, y).map(|e| self.f.label(e))
    }

    fn least(&self, x: Vertex) -> Option<u32> {
        self.bounds[x].map(|b| b.0)
    }

    fn greatest(&self, x: Vertex) -> Option<u32> {
        self.bounds[x].map(|b| b.1)
    }

    /// Condition (a) on one edge: label is max at `x`, min at `y`.
    fn rises(&self, x: Vertex, y: Vertex, label: u32) -> bool {
        self.greatest(x) == Some(label) && self.least(y) == Some(label)
    }

    /// Condition (b) on one edge: label is min at `x`, max at `y`.
    fn falls(&self, x: Vertex, y: Vertex, label: u32) -> bool {
        self.least(x) == Some(label) && self.greatest(y) == Some(label)
    }

    /// Direction of `vertices` as a gradient path, or why it is not one.
    fn classify(&self, vertices: &[Vertex]) -> Result<GradientPath, String> {
        if vertices.len() < 2 {
            return Err("a gradient path has at least one edge".into());
        }
        let mut seen = vec![false; self.g.vertex_count()];
        for &x in vertices {
            if x >= self.g.vertex_count() {
                return Err(format!("vertex {x} does not exist"));
            }
            if !self.in_u[x] {
                return Err(format!("vertex {x} has no interval spectrum"));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(format!("vertex {x} repeats"));
            }
        }
        let mut edge_labels = Vec::with_capacity(vertices.len() - 1);
        let (mut asc, mut desc) = (true, true);
        for w in vertices.windows(2) {
            let l = self.label(w[0], w[1]).ok_or_else(|| format!("({}, {}) is not an edge", w[0], w[1]))?;
            asc &= self.rises(w[0], w[1], l);
            desc &= self.falls(w[0], w[1], l);
            edge_labels.push(l);
        }
        let trivial = vertices.len() == 2;
        let (direction, tie_broken) = match (asc, desc) {
            (true, false) => (Direction::Ascending, false),
            (false, true) => (Direction::Descending, false),
            (true, true) if trivial => {
                let d = if vertices[0] < vertices[1] { Direction::Ascending } else { Direction::Descending };
                (d, true)
            }
            (true, true) => return Err("both orientations hold on a path of length >= 2".into()),
            (false, false) => return Err("labels follow neither orientation".into()),
        };
        Ok(GradientPath { vertices: vertices.to_vec(), edge_labels, direction, tie_broken })
    }

    /// Extends an ascending path at both ends for as long as possible.
    fn extend_ascending(&self, path: &GradientPath) -> GradientPath {
        let mut vertices = path.vertices.clone();
        let mut on_path = vec![false; self.g.vertex_count()];
        for &x in &vertices {
            on_path[x] = true;
        }
        // Head: the edge carrying the largest induced label at the last vertex.
        while let Some(next) = self.step(*vertices.last().expect("nonempty"), &on_path, true) {
            on_path[next] = true;
            vertices.push(next);
        }
        // Tail: the edge carrying the smallest induced label at the first vertex.
        let mut prefix = Vec::new();
        let mut first = vertices[0];
        while let Some(prev) = self.step(first, &on_path, false) {
            on_path[prev] = true;
            prefix.push(prev);
            first = prev;
        }
        if !prefix.is_empty() {
            prefix.reverse();
            prefix.extend(vertices);
            vertices = prefix;
        }
        if vertices.len() == path.vertices.len() {
            return path.clone();
        }
        self.classify(&vertices).expect("greedy extension stays a gradient path")
    }

    fn step(&self, x: Vertex, on_path: &[bool], forward: bool) -> Option<Vertex> {
        let target = if forward { self.greatest(x)? } else { self.least(x)? };
        let y = self.neighbors[x].iter().copied().find(|&y| self.label(x, y) == Some(target))?;
        if on_path[y] {
            return None;
        }
        let ok = if forward { self.rises(x, y, target) } else { self.rises(y, x, target) };
        ok.then_some(y)
    }

    fn maximal(&self) -> Vec<GradientPath> {
        let mut out: Vec<GradientPath> = Vec::new();
        for &(u, v) in self.g.edges() {
            if !(self.in_u[u] && self.in_u[v]) {
                continue;
            }
            let Ok(p) = self.classify(&[u, v]) else { continue };
            out.push(self.extend_ascending(&p.as_ascending()));
        }
        out.sort();
        out.dedup();
        out
    }

    fn enumerate(&self, max_count: usize) -> Result<Vec<GradientPath>, GradientError> {
        let mut paths = Vec::new();
        let mut stack = Vec::new();
        for start in self.g.vertices().filter(|&x| self.in_u[x]) {
            stack.clear();
            stack.push(start);
            self.dfs(&mut stack, &mut paths, max_count)?;
        }
        Ok(paths)
    }

    /// Preorder DFS with ascending neighbour order, so paths come out in
    /// lexicographic order of their vertex sequences. Gradient paths are
    /// closed under taking prefixes, so non-gradient prefixes are pruned.
    fn dfs(
        &self,
        stack: &mut Vec<Vertex>,
        paths: &mut Vec<GradientPath>,
        max_count: usize,
    ) -> Result<(), GradientError> {
        let last = *stack.last().expect("nonempty");
        for &y in &self.neighbors[last] {
            if stack.contains(&y) {
                continue;
            }
            stack.push(y);
            if let Ok(p) = self.classify(stack) {
                if paths.len() == max_count {
                    return Err(GradientError::TruncatedOutput { paths: std::mem::take(paths) });
                }
                paths.push(p);
                self.dfs(stack, paths, max_count)?;
            }
            stack.pop();
        }
        Ok(())
    }
}

/// Direction of the single-edge path `(x0, x1)`, if it is a gradient path.
pub fn is_trivial_gradient_path(
    g: &Graph,
    f: &Labeling,
    x0: Vertex,
    x1: Vertex,
) -> Result<Option<Direction>, GradientError> {
    if g.check_vertex(x0).is_err() || g.check_vertex(x1).is_err() || g.edge_between(x0, x1).is_none() {
        return Err(GradientError::NotAnEdge(x0, x1));
    }
    Ok(Context::new(g, f).classify(&[x0, x1]).ok().map(|p| p.direction))
}

/// Checks `vertices` against the gradient path definition.
pub fn gradient_path(g: &Graph, f: &Labeling, vertices: &[Vertex]) -> Result<GradientPath, GradientError> {
    Context::new(g, f).classify(vertices).map_err(GradientError::InvalidPath)
}

/// All gradient paths, in lexicographic order of vertex sequence. Fails
/// with `TruncatedOutput` (carrying the first `max_count` paths) when
/// there are more.
pub fn enumerate_gradient_paths(
    g: &Graph,
    f: &Labeling,
    max_count: usize,
) -> Result<Vec<GradientPath>, GradientError> {
    let ctx = Context::new(g, f);
    if !ctx.is_member() {
        return Err(GradientError::NotInLambda);
    }
    ctx.enumerate(max_count)
}

/// Gradient paths not contained (by vertex set) in a longer one, each
/// listed once in its ascending orientation.
pub fn maximal_gradient_paths(g: &Graph, f: &Labeling) -> Result<Vec<GradientPath>, GradientError> {
    let ctx = Context::new(g, f);
    if !ctx.is_member() {
        return Err(GradientError::NotInLambda);
    }
    Ok(ctx.maximal())
}

/// The maximal gradient path containing `p`, oriented like `p`.
pub fn containing_maximal_path(
    g: &Graph,
    f: &Labeling,
    p: &GradientPath,
) -> Result<GradientPath, GradientError> {
    let ctx = Context::new(g, f);
    let checked = ctx.classify(&p.vertices).map_err(GradientError::InvalidPath)?;
    if checked.direction != p.direction {
        return Err(GradientError::InvalidPath(format!(
            "path is {:?}, not {:?}",
            checked.direction, p.direction
        )));
    }
    let extended = ctx.extend_ascending(&checked.as_ascending());
    let wanted = checked.sorted_vertices();
    let containers: Vec<_> =
        ctx.maximal().into_iter().filter(|m| is_sorted_subset(&wanted, &m.sorted_vertices())).collect();
    if containers.len() != 1 || containers[0].sorted_vertices() != extended.sorted_vertices() {
        return Err(GradientError::NonUniqueContainer { count: containers.len() });
    }
    Ok(match p.direction {
        Direction::Ascending => extended,
        Direction::Descending => extended.reversed(),
    })
}

fn is_sorted_subset(small: &[Vertex], large: &[Vertex]) -> bool {
    small.iter().all(|x| large.binary_search(x).is_ok())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub paths_checked: usize,
    pub edges_checked: usize,
    pub failures: Vec<UniquenessFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UniquenessFailure {
    /// A gradient path with other than one maximal container.
    Path { vertices: Vec<Vertex>, containers: usize },
    /// An induced edge between non-leaves with other than one maximal
    /// path through both ends.
    Edge { x: Vertex, y: Vertex, containers: usize },
}

/// Checks that every gradient path lies in exactly one maximal gradient
/// path, and that every edge between two vertices of induced degree >= 2
/// lies in exactly one. The maximal paths are found independently of the
/// greedy extension, straight from the subset definition.
pub fn check_gradient_uniqueness(g: &Graph, f: &Labeling) -> UniquenessReport {
    let ctx = Context::new(g, f);
    let mut report = UniquenessReport::default();
    if !ctx.is_member() {
        return report;
    }
    let all = ctx.enumerate(usize::MAX).expect("unbounded enumeration");
    let sets: Vec<Vec<Vertex>> = all.iter().map(GradientPath::sorted_vertices).collect();
    let mut maximal: Vec<&Vec<Vertex>> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| t.len() > s.len() && is_sorted_subset(s, t)))
        .collect();
    maximal.sort();
    maximal.dedup();

    for (p, set) in all.iter().zip(&sets) {
        report.paths_checked += 1;
        let containers = maximal.iter().filter(|m| is_sorted_subset(set, m)).count();
        if containers != 1 {
            report.failures.push(UniquenessFailure::Path { vertices: p.vertices.clone(), containers });
        }
    }
    let induced_degree = |x: Vertex| ctx.neighbors[x].len();
    for &(x, y) in g.edges() {
        if !(ctx.in_u[x] && ctx.in_u[y] && induced_degree(x) >= 2 && induced_degree(y) >= 2) {
            continue;
        }
        report.edges_checked += 1;
        let containers = maximal.iter().filter(|m| is_sorted_subset(&sorted_pair(x, y), m)).count();
        if containers != 1 {
            report.failures.push(UniquenessFailure::Edge { x, y, containers });
        }
    }
    report
}

fn sorted_pair(x: Vertex, y: Vertex) -> [Vertex; 2] {
    [x.min(y), x.max(y)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(g: &Graph, labels: &[u32]) -> Labeling {
        Labeling::new(g, labels.to_vec()).unwrap()
    }

    fn k3_cyclic() -> Graph {
        Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn trivial_paths() {
        let p4 = Graph::path(4);
        let f = lab(&p4, &[1, 2, 3]);
        assert_eq!(is_trivial_gradient_path(&p4, &f, 1, 2), Ok(Some(Direction::Ascending)));
        assert_eq!(is_trivial_gradient_path(&p4, &f, 2, 1), Ok(Some(Direction::Descending)));
        assert_eq!(is_trivial_gradient_path(&p4, &f, 0, 2), Err(GradientError::NotAnEdge(0, 2)));

        let k3 = k3_cyclic();
        let f = lab(&k3, &[1, 2, 3]);
        assert_eq!(is_trivial_gradient_path(&k3, &f, 1, 2), Ok(Some(Direction::Ascending)));
        assert_eq!(is_trivial_gradient_path(&k3, &f, 2, 1), Ok(Some(Direction::Descending)));
        assert!(gradient_path(&k3, &f, &[1, 2]).unwrap().tie_broken);
        // v0 is not an interval vertex.
        assert_eq!(is_trivial_gradient_path(&k3, &f, 0, 1), Ok(None));
    }

    #[test]
    fn enumeration_on_path() {
        let p4 = Graph::path(4);
        let paths = enumerate_gradient_paths(&p4, &lab(&p4, &[1, 2, 3]), usize::MAX).unwrap();
        assert_eq!(paths.len(), 12);
        let asc = paths.iter().filter(|p| p.direction == Direction::Ascending).count();
        assert_eq!(asc, 6);
        assert!(paths.windows(2).all(|w| w[0].vertices < w[1].vertices));
        assert_eq!(paths[0].vertices, vec![0, 1]);
        assert_eq!(paths[1].vertices, vec![0, 1, 2]);

        let k2 = Graph::path(2);
        let paths = enumerate_gradient_paths(&k2, &lab(&k2, &[1]), usize::MAX).unwrap();
        assert_eq!(paths.len(), 2);
        assert_ne!(paths[0].direction, paths[1].direction);

        let c5 = Graph::cycle(5);
        assert_eq!(
            enumerate_gradient_paths(&c5, &lab(&c5, &[1, 3, 5, 2, 4]), 10),
            Err(GradientError::NotInLambda)
        );
    }

    #[test]
    fn truncation_is_signalled() {
        let p4 = Graph::path(4);
        let f = lab(&p4, &[1, 2, 3]);
        match enumerate_gradient_paths(&p4, &f, 5) {
            Err(GradientError::TruncatedOutput { paths }) => assert_eq!(paths.len(), 5),
            other => panic!("expected truncation, got {other:?}"),
        }
        assert_eq!(enumerate_gradient_paths(&p4, &f, 12).unwrap().len(), 12);
    }

    #[test]
    fn maximal_examples() {
        let p4 = Graph::path(4);
        let tau = maximal_gradient_paths(&p4, &lab(&p4, &[1, 2, 3])).unwrap();
        assert_eq!(tau.len(), 1);
        assert_eq!(tau[0].vertices, vec![0, 1, 2, 3]);
        assert_eq!(tau[0].edge_labels, vec![1, 2, 3]);

        let tau = maximal_gradient_paths(&p4, &lab(&p4, &[2, 1, 3])).unwrap();
        assert_eq!(tau.len(), 1);
        assert_eq!(tau[0].sorted_vertices(), vec![0, 1]);
        assert!(tau[0].tie_broken);

        let k3 = k3_cyclic();
        let tau = maximal_gradient_paths(&k3, &lab(&k3, &[1, 2, 3])).unwrap();
        assert_eq!(tau.len(), 1);
        assert_eq!(tau[0].vertices, vec![1, 2]);
    }

    #[test]
    fn containing_examples() {
        let p4 = Graph::path(4);
        let f = lab(&p4, &[1, 2, 3]);
        let p = gradient_path(&p4, &f, &[1, 2]).unwrap();
        assert_eq!(containing_maximal_path(&p4, &f, &p).unwrap().vertices, vec![0, 1, 2, 3]);
        let p = gradient_path(&p4, &f, &[2, 1]).unwrap();
        assert_eq!(containing_maximal_path(&p4, &f, &p).unwrap().vertices, vec![3, 2, 1, 0]);
        let whole = gradient_path(&p4, &f, &[0, 1, 2, 3]).unwrap();
        assert_eq!(containing_maximal_path(&p4, &f, &whole).unwrap(), whole);

        let p5 = Graph::path(5);
        let f = lab(&p5, &[1, 2, 3, 4]);
        let p = gradient_path(&p5, &f, &[1, 2]).unwrap();
        assert_eq!(containing_maximal_path(&p5, &f, &p).unwrap().vertices, vec![0, 1, 2, 3, 4]);

        let mut forged = p.clone();
        forged.direction = Direction::Descending;
        assert!(matches!(containing_maximal_path(&p5, &f, &forged), Err(GradientError::InvalidPath(_))));
    }

    #[test]
    fn star_has_one_maximal_path_through_extremes() {
        let star = Graph::star(3);
        // centre spectrum {1,2,3}; leaf 2 carries the middle label.
        let f = lab(&star, &[1, 2, 3]);
        let tau = maximal_gradient_paths(&star, &f).unwrap();
        assert_eq!(tau.len(), 1);
        assert_eq!(tau[0].vertices, vec![1, 0, 3]);
        assert_eq!(is_trivial_gradient_path(&star, &f, 2, 0), Ok(None));
        let report = check_gradient_uniqueness(&star, &f);
        assert!(report.failures.is_empty());
        assert_eq!(report.paths_checked, 6);
    }
}
