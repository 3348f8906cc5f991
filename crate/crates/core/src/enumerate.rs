//! Exhaustive and sampled iteration over bijective labelings.
//!
//! Labelings are visited in lexicographic order of the label array. The
//! space splits into `|E|` shards by the label of edge 0, which is how the
//! parallel verifiers divide work. Complement pruning visits one labeling
//! out of each `{f, |E|+1-f}` pair and reports it with weight 2.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{check_theorem, TheoremVerdict};
use crate::galaxy::{galaxy_labeling, is_galaxy};
use crate::graph::Graph;
use crate::labeling::{interval_flags, random_labeling, Labeling};

/// Default cap on `|E|` for exhaustive runs (10! = 3,628,800 labelings).
pub const MAX_ENUMERATION_EDGES: usize = 10;

/// Stored violations per run; further ones are only counted.
pub const MAX_STORED_VIOLATIONS: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("graph has {edges} edges; exhaustive enumeration is limited to {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("failed to start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub prune_complement: bool,
    /// Largest `|E|` accepted. Raising it above [`MAX_ENUMERATION_EDGES`]
    /// is an explicit opt-in to very long runs.
    pub edge_limit: usize,
    /// Worker threads for the sharded verifiers; `None` uses rayon's default.
    pub threads: Option<usize>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self { prune_complement: false, edge_limit: MAX_ENUMERATION_EDGES, threads: None }
    }
}

impl EnumerationOptions {
    pub fn pruned() -> Self {
        Self { prune_complement: true, ..Self::default() }
    }
}

fn check_size(g: &Graph, limit: usize) -> Result<(), EnumerateError> {
    if g.edge_count() > limit {
        Err(EnumerateError::TooManyEdges { edges: g.edge_count(), limit })
    } else {
        Ok(())
    }
}

/// Rearranges `a` into its lexicographic successor; false after the last one.
fn next_permutation(a: &mut [u32]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).expect("a[i+1] > a[i]");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Weight of `labels` under complement pruning: 0 if its complement comes
/// first lexicographically, 1 if it is its own complement, else 2.
fn complement_weight(labels: &[u32]) -> u64 {
    let top = labels.len() as u32 + 1;
    for &l in labels {
        let c = top - l;
        if l != c {
            return if l < c { 2 } else { 0 };
        }
    }
    1
}

/// Visits every labeling whose edge 0 carries `first`, in lexicographic order.
fn for_each_in_shard<F>(m: usize, first: u32, prune: bool, consumer: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Labeling, u64) -> ControlFlow<()>,
{
    let mut labels = Vec::with_capacity(m);
    labels.push(first);
    labels.extend((1..=m as u32).filter(|&l| l != first));
    loop {
        let weight = if prune { complement_weight(&labels) } else { 1 };
        if weight > 0 {
            consumer(&Labeling::from_permutation(labels.clone()), weight)?;
        }
        if !next_permutation(&mut labels[1..]) {
            return ControlFlow::Continue(());
        }
    }
}

/// Calls `consumer(f, weight)` for every bijective labeling `f` of `g` in
/// lexicographic order. Without pruning every weight is 1. The consumer can
/// stop the iteration early by returning `ControlFlow::Break`.
pub fn for_each_labeling<F>(g: &Graph, prune_complement: bool, consumer: F) -> Result<(), EnumerateError>
where
    F: FnMut(&Labeling, u64) -> ControlFlow<()>,
{
    let opts = EnumerationOptions { prune_complement, ..EnumerationOptions::default() };
    for_each_labeling_with(g, &opts, consumer)
}

pub fn for_each_labeling_with<F>(
    g: &Graph,
    opts: &EnumerationOptions,
    mut consumer: F,
) -> Result<(), EnumerateError>
where
    F: FnMut(&Labeling, u64) -> ControlFlow<()>,
{
    check_size(g, opts.edge_limit)?;
    let m = g.edge_count();
    if m == 0 {
        let _ = consumer(&Labeling::from_permutation(Vec::new()), 1);
        return Ok(());
    }
    for first in 1..=m as u32 {
        if for_each_in_shard(m, first, opts.prune_complement, &mut consumer).is_break() {
            break;
        }
    }
    Ok(())
}

/// One stored theorem failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationRecord {
    pub labeling: Labeling,
    pub verdict: TheoremVerdict,
}

/// Aggregate over a set of labelings of one host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LabelingStats {
    #[serde(rename = "total")]
    pub total_labelings: u64,
    /// Number of labelings by `|U|`.
    pub histogram: BTreeMap<usize, u64>,
    pub empty_u_count: u64,
    /// Labelings under which every vertex has an interval spectrum.
    pub full_interval_count: u64,
    pub max_u: usize,
    /// Largest vertex degree seen in any interval-induced subgraph.
    pub max_induced_degree: usize,
    /// Largest single component seen in any interval-induced subgraph.
    pub max_component_size: usize,
    pub non_forest_count: u64,
    #[serde(rename = "violations")]
    pub violation_count: u64,
    /// The lexicographically smallest violating labelings, at most
    /// [`MAX_STORED_VIOLATIONS`] of them.
    #[serde(rename = "violation_samples")]
    pub violations: Vec<ViolationRecord>,
}

impl LabelingStats {
    pub fn record(&mut self, g: &Graph, f: &Labeling, verdict: &TheoremVerdict, weight: u64) {
        let u = verdict.interval_vertex_count();
        self.total_labelings += weight;
        *self.histogram.entry(u).or_default() += weight;
        if u == 0 {
            self.empty_u_count += weight;
        }
        if u == g.vertex_count() {
            self.full_interval_count += weight;
        }
        self.max_u = self.max_u.max(u);
        let in_u = interval_flags(g, f.labels());
        let induced_degree = g
            .vertices()
            .filter(|&x| in_u[x])
            .map(|x| g.neighbors(x).filter(|&y| in_u[y]).count())
            .max()
            .unwrap_or(0);
        self.max_induced_degree = self.max_induced_degree.max(induced_degree);
        let largest = verdict.components.iter().map(|c| c.host_vertices.len()).max().unwrap_or(0);
        self.max_component_size = self.max_component_size.max(largest);
        if !verdict.is_forest {
            self.non_forest_count += weight;
        }
        if verdict.overall == crate::classify::Overall::Violation {
            self.violation_count += weight;
            self.violations.push(ViolationRecord { labeling: f.clone(), verdict: verdict.clone() });
            self.trim_violations();
        }
    }

    fn trim_violations(&mut self) {
        if self.violations.len() > MAX_STORED_VIOLATIONS {
            self.violations.sort_by(|a, b| a.labeling.cmp(&b.labeling));
            self.violations.truncate(MAX_STORED_VIOLATIONS);
        }
    }

    /// Combines two accumulators. Associative and commutative.
    pub fn merge(mut self, other: Self) -> Self {
        self.total_labelings += other.total_labelings;
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        self.empty_u_count += other.empty_u_count;
        self.full_interval_count += other.full_interval_count;
        self.max_u = self.max_u.max(other.max_u);
        self.max_induced_degree = self.max_induced_degree.max(other.max_induced_degree);
        self.max_component_size = self.max_component_size.max(other.max_component_size);
        self.non_forest_count += other.non_forest_count;
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        self.violations.sort_by(|a, b| a.labeling.cmp(&b.labeling));
        self.violations.truncate(MAX_STORED_VIOLATIONS);
        self
    }
}

fn run_in_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T, EnumerateError> {
    match threads {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| EnumerateError::ThreadPool(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

/// Checks the structure theorem on every bijective labeling of `g`.
pub fn exhaustive_verify(g: &Graph) -> Result<LabelingStats, EnumerateError> {
    exhaustive_verify_with(g, &EnumerationOptions::default())
}

pub fn exhaustive_verify_with(g: &Graph, opts: &EnumerationOptions) -> Result<LabelingStats, EnumerateError> {
    check_size(g, opts.edge_limit)?;
    let m = g.edge_count() as u32;
    if m == 0 {
        return Ok(LabelingStats::default());
    }
    let prune = opts.prune_complement;
    run_in_pool(opts.threads, || {
        (1..=m)
            .into_par_iter()
            .map(|first| {
                let mut stats = LabelingStats::default();
                let _ = for_each_in_shard(m as usize, first, prune, &mut |f, w| {
                    stats.record(g, f, &check_theorem(g, f), w);
                    ControlFlow::Continue(())
                });
                stats
            })
            .reduce(LabelingStats::default, LabelingStats::merge)
    })
}

/// Same aggregation over `samples` random labelings; sample `i` is
/// `random_labeling(g, seed + i)`.
pub fn sampled_verify(g: &Graph, samples: u64, seed: u64) -> LabelingStats {
    sampled_verify_with(g, samples, seed, None).expect("default pool")
}

pub fn sampled_verify_with(
    g: &Graph,
    samples: u64,
    seed: u64,
    threads: Option<usize>,
) -> Result<LabelingStats, EnumerateError> {
    run_in_pool(threads, || {
        (0..samples)
            .into_par_iter()
            .fold(LabelingStats::default, |mut stats, i| {
                let f = random_labeling(g, seed.wrapping_add(i));
                stats.record(g, &f, &check_theorem(g, &f), 1);
                stats
            })
            .reduce(LabelingStats::default, LabelingStats::merge)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FullIntervalMethod {
    Constructive,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FullIntervalOutcome {
    pub exists: bool,
    pub labeling: Option<Labeling>,
    pub method: FullIntervalMethod,
    /// Set when exhaustive search finds a full-interval labeling on a graph
    /// that is not a galaxy. This should never happen.
    pub non_galaxy_witness: bool,
}

/// Decides whether some labeling gives every vertex an interval spectrum.
/// Galaxies get the constructive labeling; everything else is searched
/// exhaustively.
pub fn has_full_interval_labeling(g: &Graph) -> Result<FullIntervalOutcome, EnumerateError> {
    has_full_interval_labeling_with(g, MAX_ENUMERATION_EDGES)
}

pub fn has_full_interval_labeling_with(g: &Graph, edge_limit: usize) -> Result<FullIntervalOutcome, EnumerateError> {
    if matches!(is_galaxy(g), Ok(true)) {
        let f = galaxy_labeling(g).expect("galaxy has a decomposition");
        return Ok(FullIntervalOutcome {
            exists: true,
            labeling: Some(f),
            method: FullIntervalMethod::Constructive,
            non_galaxy_witness: false,
        });
    }
    let n = g.vertex_count();
    let mut found = None;
    let opts = EnumerationOptions { prune_complement: true, edge_limit, threads: None };
    for_each_labeling_with(g, &opts, |f, _| {
        if interval_flags(g, f.labels()).iter().filter(|&&b| b).count() == n {
            found = Some(f.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if let Some(f) = &found {
        log::error!("full-interval labeling {f} found on a graph that is not a galaxy");
    }
    Ok(FullIntervalOutcome {
        exists: found.is_some(),
        non_galaxy_witness: found.is_some(),
        labeling: found,
        method: FullIntervalMethod::Exhaustive,
    })
}
