//! Maximizing the number of interval vertices over bijective labelings.

use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{for_each_labeling, EnumerateError};
use crate::galaxy::{galaxy_labeling, is_galaxy};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::labeling::{interval_flags, random_labeling, vertex_is_interval, Labeling};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

/// Simulated annealing over label transpositions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    /// Move evaluations per restart.
    pub budget: u64,
    pub restarts: usize,
    pub seed: u64,
    pub initial_temperature: f64,
    /// Temperature multiplier applied after every accepted move.
    pub decay: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { budget: 100_000, restarts: 5, seed: 0, initial_temperature: 2.0, decay: 0.9999 }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.budget < 1 {
            return Err(SearchError::InvalidConfig("budget must be at least 1".into()));
        }
        if self.restarts < 1 {
            return Err(SearchError::InvalidConfig("at least one restart is required".into()));
        }
        if !(self.decay > 0.0 && self.decay <= 1.0) {
            return Err(SearchError::InvalidConfig(format!("decay {} is outside (0, 1]", self.decay)));
        }
        if !(self.initial_temperature > 0.0 && self.initial_temperature.is_finite()) {
            return Err(SearchError::InvalidConfig("initial temperature must be positive".into()));
        }
        Ok(())
    }
}

/// Interval-vertex count maintained under label swaps.
#[derive(Debug, Clone)]
pub struct IntervalCounter<'g> {
    g: &'g Graph,
    labels: Vec<u32>,
    flags: Vec<bool>,
    count: usize,
}

impl<'g> IntervalCounter<'g> {
    pub fn new(g: &'g Graph, f: &Labeling) -> Self {
        let labels = f.labels().to_vec();
        let flags = interval_flags(g, &labels);
        let count = flags.iter().filter(|&&b| b).count();
        Self { g, labels, flags, count }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Exchanges the labels of two edges, re-testing only their endpoints.
    pub fn swap(&mut self, a: EdgeId, b: EdgeId) -> usize {
        self.labels.swap(a, b);
        let (u, v) = self.g.edge(a);
        let (x, y) = self.g.edge(b);
        for w in [u, v, x, y] {
            self.refresh(w);
        }
        self.count
    }

    fn refresh(&mut self, w: Vertex) {
        let now = vertex_is_interval(self.g, &self.labels, w);
        if now != self.flags[w] {
            self.flags[w] = now;
            if now {
                self.count += 1;
            } else {
                self.count -= 1;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StartKind {
    Identity,
    Random,
    Galaxy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TracePoint {
    pub evaluation: u64,
    pub best_u: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestartTrace {
    pub restart: usize,
    pub start: StartKind,
    pub initial_u: usize,
    pub best_u: usize,
    pub evaluations: u64,
    /// Every improvement of the best value, in order.
    pub improvements: Vec<TracePoint>,
    #[serde(skip)]
    pub best_labeling: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub labeling: Labeling,
    pub best_u: usize,
    pub vertex_count: usize,
    pub is_galaxy: bool,
    /// A full-interval labeling turned up on a non-galaxy host.
    pub non_galaxy_full_interval: bool,
    pub traces: Vec<RestartTrace>,
}

/// Simulated annealing for `max |U|` over bijective labelings.
///
/// Restart 0 starts from the identity labeling and the others from seeded
/// random labelings, except that on a galaxy the last restart starts from
/// the constructive full-interval labeling. Moves swap the labels of two
/// edges; non-worsening moves are always accepted, a move losing `d`
/// interval vertices with probability `exp(-d / T)`.
pub fn local_search_max_u(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    let galaxy = matches!(is_galaxy(g), Ok(true));
    let traces: Vec<RestartTrace> =
        (0..cfg.restarts).into_par_iter().map(|r| run_restart(g, cfg, r, galaxy)).collect();
    let best = traces
        .iter()
        .max_by(|a, b| a.best_u.cmp(&b.best_u).then_with(|| b.best_labeling.cmp(&a.best_labeling)))
        .expect("at least one restart");
    let best_u = best.best_u;
    let non_galaxy_full_interval = best_u == g.vertex_count() && !galaxy;
    if non_galaxy_full_interval {
        log::error!("search reached |U| = |V| on a graph that is not a galaxy");
    }
    Ok(SearchOutcome {
        labeling: Labeling::from_permutation(best.best_labeling.clone()),
        best_u,
        vertex_count: g.vertex_count(),
        is_galaxy: galaxy,
        non_galaxy_full_interval,
        traces,
    })
}

fn run_restart(g: &Graph, cfg: &SearchConfig, r: usize, galaxy: bool) -> RestartTrace {
    let (start, initial) = if galaxy && r + 1 == cfg.restarts {
        (StartKind::Galaxy, galaxy_labeling(g).expect("galaxy"))
    } else if r == 0 {
        (StartKind::Identity, Labeling::identity(g))
    } else {
        (StartKind::Random, random_labeling(g, cfg.seed.wrapping_add(r as u64)))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(r as u64 + 1);

    let mut state = IntervalCounter::new(g, &initial);
    let initial_u = state.count();
    let mut best_u = initial_u;
    let mut best_labeling = state.labels().to_vec();
    let mut improvements = vec![TracePoint { evaluation: 0, best_u }];
    let mut temperature = cfg.initial_temperature;
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut evaluations = 0;

    while evaluations < cfg.budget && best_u < n && m >= 2 {
        evaluations += 1;
        let a = rng.gen_range(0..m);
        let mut b = rng.gen_range(0..m - 1);
        if b >= a {
            b += 1;
        }
        let before = state.count();
        let after = state.swap(a, b);
        let delta = after as f64 - before as f64;
        let accept = delta >= 0.0 || rng.gen::<f64>() < (delta / temperature).exp();
        if !accept {
            state.swap(a, b);
            continue;
        }
        temperature *= cfg.decay;
        if after > best_u {
            best_u = after;
            best_labeling.copy_from_slice(state.labels());
            improvements.push(TracePoint { evaluation: evaluations, best_u });
        }
    }
    RestartTrace { restart: r, start, initial_u, best_u, evaluations, improvements, best_labeling }
}

/// Exact `max |U|` by enumerating every bijective labeling.
pub fn exact_max_u(g: &Graph) -> Result<usize, EnumerateError> {
    let n = g.vertex_count();
    let mut best = 0;
    for_each_labeling(g, true, |f, _| {
        best = best.max(interval_flags(g, f.labels()).iter().filter(|&&b| b).count());
        if best == n { ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
    })?;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galaxy::build_galaxy;

    #[test]
    fn exact_examples() {
        assert_eq!(exact_max_u(&Graph::path(4)), Ok(4));
        // Brute force over all 120 labelings: (1,2,3,4,5) around the
        // cycle leaves only the vertex between labels 5 and 1 without an
        // interval spectrum.
        assert_eq!(exact_max_u(&Graph::cycle(5)), Ok(4));
        assert_eq!(exact_max_u(&Graph::complete(4)), Ok(2));
        assert_eq!(exact_max_u(&Graph::cycle(3)), Ok(2));
        assert_eq!(exact_max_u(&Graph::cycle(4)), Ok(3));
    }

    #[test]
    fn search_examples() {
        let cfg = SearchConfig { budget: 10_000, ..SearchConfig::default() };
        let (g, _) = build_galaxy(&[2, 0, 3, 1]).unwrap();
        let out = local_search_max_u(&g, &cfg).unwrap();
        assert_eq!(out.best_u, g.vertex_count());
        assert!(out.is_galaxy && !out.non_galaxy_full_interval);

        let out = local_search_max_u(&Graph::cycle(3), &cfg).unwrap();
        assert_eq!(out.best_u, 2);
        let out = local_search_max_u(&Graph::cycle(4), &cfg).unwrap();
        assert_eq!(out.best_u, 3);
        assert_eq!(
            crate::labeling::interval_vertices(&Graph::cycle(4), &out.labeling).len(),
            out.best_u
        );
    }

    #[test]
    fn search_is_deterministic_and_monotone() {
        let g = Graph::petersen();
        let cfg = SearchConfig { budget: 5_000, seed: 11, ..SearchConfig::default() };
        let a = local_search_max_u(&g, &cfg).unwrap();
        assert_eq!(a, local_search_max_u(&g, &cfg).unwrap());
        for t in &a.traces {
            assert!(t.improvements.windows(2).all(|w| w[0].best_u < w[1].best_u));
            assert_eq!(t.improvements.last().unwrap().best_u, t.best_u);
        }
        assert_eq!(a.traces[0].start, StartKind::Identity);
        assert!(a.best_u <= g.vertex_count());
    }

    #[test]
    fn single_edge_and_bad_config() {
        let out = local_search_max_u(&Graph::path(2), &SearchConfig::default()).unwrap();
        assert_eq!(out.best_u, 2);
        let bad = SearchConfig { decay: 1.5, ..SearchConfig::default() };
        assert!(local_search_max_u(&Graph::path(3), &bad).is_err());
        let bad = SearchConfig { budget: 0, ..SearchConfig::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn incremental_count_matches_recomputation() {
        let g = Graph::petersen();
        let f = random_labeling(&g, 5);
        let mut counter = IntervalCounter::new(&g, &f);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1_000 {
            let a = rng.gen_range(0..g.edge_count());
            let b = rng.gen_range(0..g.edge_count());
            let got = counter.swap(a, b);
            let fresh = interval_flags(&g, counter.labels()).iter().filter(|&&x| x).count();
            assert_eq!(got, fresh);
        }
    }
}
