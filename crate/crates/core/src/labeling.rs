//! Edge labelings, vertex spectra and interval vertices.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, InducedSubgraph, Vertex, VertexSet};

/// Largest label accepted in general (non-bijective) mode.
pub const MAX_LABEL: u32 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling has {found} labels but the graph has {expected} edges")]
    WrongLength { expected: usize, found: usize },
    #[error("label {0} is used more than once")]
    NonInjective(u32),
    #[error("label {0} is outside [1, {MAX_LABEL}]")]
    LabelOutOfRange(u64),
    #[error("labeling is not a bijection onto [1, |E|]")]
    NotBijective,
    #[error("spectrum is empty")]
    EmptySpectrum,
    #[error("vertex {0} does not exist")]
    InvalidVertex(Vertex),
    #[error("cannot parse labeling: {0}")]
    Parse(String),
}

/// Injective assignment of positive labels to edges, indexed by edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling(Vec<u32>);

impl Labeling {
    /// Validates `labels` against `g`: one label per edge, all distinct,
    /// all in `[1, MAX_LABEL]`.
    pub fn new(g: &Graph, labels: Vec<u32>) -> Result<Self, LabelingError> {
        if labels.len() != g.edge_count() {
            return Err(LabelingError::WrongLength { expected: g.edge_count(), found: labels.len() });
        }
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > MAX_LABEL) {
            return Err(LabelingError::LabelOutOfRange(bad.into()));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(LabelingError::NonInjective(w[0]));
        }
        Ok(Self(labels))
    }

    /// Wraps a permutation of `1..=m` without re-validating it.
    pub(crate) fn from_permutation(labels: Vec<u32>) -> Self {
        debug_assert!(is_permutation(&labels));
        Self(labels)
    }

    /// The labeling `e_i -> i + 1`.
    pub fn identity(g: &Graph) -> Self {
        Self((1..=g.edge_count() as u32).collect())
    }

    /// Parses a comma-separated list such as `"1,3,2"` and validates it.
    pub fn parse(g: &Graph, csv: &str) -> Result<Self, LabelingError> {
        Self::new(g, parse_label_list(csv)?)
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn label(&self, e: usize) -> u32 {
        self.0[e]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the labels are exactly `1..=|E|`.
    pub fn is_bijective(&self) -> bool {
        is_permutation(&self.0)
    }

    pub fn to_csv(&self) -> String {
        self.to_string()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn is_permutation(labels: &[u32]) -> bool {
    let m = labels.len();
    let mut seen = vec![false; m];
    labels.iter().all(|&l| {
        let i = l as usize;
        (1..=m).contains(&i) && !std::mem::replace(&mut seen[i - 1], true)
    })
}

/// Parses comma-separated labels without checking them against a graph.
pub fn parse_label_list(csv: &str) -> Result<Vec<u32>, LabelingError> {
    csv.trim()
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            let value: u64 = tok
                .parse()
                .map_err(|_| LabelingError::Parse(format!("{tok:?} is not a positive integer")))?;
            u32::try_from(value)
                .ok()
                .filter(|&l| (1..=MAX_LABEL).contains(&l))
                .ok_or(LabelingError::LabelOutOfRange(value))
        })
        .collect()
}

/// Labels on the edges incident with one vertex, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<u32>);

impl Spectrum {
    /// Sorts and deduplicates `values`.
    pub fn from_values(mut values: Vec<u32>) -> Self {
        values.sort_unstable();
        values.dedup();
        Self(values)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn least(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn greatest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// True iff the values are consecutive: `|A| = max - min + 1`.
    pub fn is_interval(&self) -> Result<bool, LabelingError> {
        match (self.least(), self.greatest()) {
            (Some(lo), Some(hi)) => Ok(u64::from(hi - lo) + 1 == self.0.len() as u64),
            _ => Err(LabelingError::EmptySpectrum),
        }
    }

    pub fn intersection_len(&self, other: &Spectrum) -> usize {
        self.0.iter().filter(|v| other.0.binary_search(v).is_ok()).count()
    }
}

pub fn spectrum(g: &Graph, f: &Labeling, x: Vertex) -> Result<Spectrum, LabelingError> {
    g.check_vertex(x).map_err(|_| LabelingError::InvalidVertex(x))?;
    Ok(Spectrum::from_values(g.incident(x).iter().map(|&(_, e)| f.label(e)).collect()))
}

/// Spectra of all vertices, by vertex index.
pub fn spectra(g: &Graph, f: &Labeling) -> Vec<Spectrum> {
    g.vertices()
        .map(|x| Spectrum::from_values(g.incident(x).iter().map(|&(_, e)| f.label(e)).collect()))
        .collect()
}

/// Per-vertex interval test without materializing spectra. Isolated
/// vertices have an empty spectrum and are reported as non-interval.
pub fn interval_flags(g: &Graph, labels: &[u32]) -> Vec<bool> {
    g.vertices().map(|x| vertex_is_interval(g, labels, x)).collect()
}

#[inline]
pub(crate) fn vertex_is_interval(g: &Graph, labels: &[u32], x: Vertex) -> bool {
    let inc = g.incident(x);
    if inc.is_empty() {
        return false;
    }
    let (mut lo, mut hi) = (u32::MAX, 0);
    for &(_, e) in inc {
        lo = lo.min(labels[e]);
        hi = hi.max(labels[e]);
    }
    // Labels are distinct, so max - min + 1 = count means consecutive.
    (hi - lo) as usize + 1 == inc.len()
}

/// Vertices whose spectrum is an interval.
pub fn interval_vertices(g: &Graph, f: &Labeling) -> VertexSet {
    g.vertices().filter(|&x| vertex_is_interval(g, f.labels(), x)).collect()
}

/// The subgraph induced by the interval vertices. An empty vertex set
/// means the labeling has no interval vertex at all.
pub fn interval_induced_subgraph(g: &Graph, f: &Labeling) -> InducedSubgraph {
    let u = interval_vertices(g, f);
    g.induced_subgraph(u.as_slice()).expect("interval vertices belong to the host")
}

/// The labeling `e -> |E| + 1 - f(e)`.
pub fn complement_labeling(g: &Graph, f: &Labeling) -> Result<Labeling, LabelingError> {
    if f.len() != g.edge_count() {
        return Err(LabelingError::WrongLength { expected: g.edge_count(), found: f.len() });
    }
    if !f.is_bijective() {
        return Err(LabelingError::NotBijective);
    }
    let m = f.len() as u32;
    Ok(Labeling(f.0.iter().map(|&l| m + 1 - l).collect()))
}

/// Uniform random bijection onto `[1, |E|]`, reproducible per seed.
///
/// Fisher-Yates over ChaCha8 seeded with `seed`: for `i` from `m-1` down
/// to 1, swap position `i` with a uniform position in `0..=i`.
pub fn random_labeling(g: &Graph, seed: u64) -> Labeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<u32> = (1..=g.edge_count() as u32).collect();
    shuffle(&mut labels, &mut rng);
    Labeling(labels)
}

pub(crate) fn shuffle<R: Rng>(items: &mut [u32], rng: &mut R) {
    for i in (1..items.len()).rev() {
        let j = rng.gen_range(0..=i);
        items.swap(i, j);
    }
}
