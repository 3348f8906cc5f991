//! Structure of the subgraph induced by interval vertices.
//!
//! For any labeling with at least one interval vertex, that subgraph is a
//! forest whose components are single vertices or galaxies, and at most two
//! leaves of a galaxy component may have host degree two or more (a single
//! one must be peripheral, a pair must realize the component's diameter).
//! [`check_theorem`] evaluates these conditions for one labeling and
//! reports anything that does not fit as a [`ComponentClass::Violation`].

use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde_json::json;
use thiserror::Error;

use crate::galaxy::is_galaxy;
use crate::gradient::Direction;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::labeling::{interval_flags, interval_induced_subgraph, spectrum, Labeling};

/// Stable machine-readable reasons a component fails classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationReason {
    NotATree,
    NotGalaxy,
    TooManyBadLeaves,
    BadLeafNotPeripheral,
    PairNotDiametral,
}

/// Classification of one component. Vertex fields use host indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentClass {
    IsolatedVertex { vertex: Vertex, is_host_leaf: bool },
    /// Every leaf of the component is a leaf of the host.
    GalaxyCaseA,
    /// Exactly one component leaf has host degree >= 2; it is peripheral.
    GalaxyCaseB { bad_leaf: Vertex },
    /// Exactly two such leaves, at distance equal to the component diameter.
    GalaxyCaseC { bad_pair: (Vertex, Vertex), pair_distance: usize },
    Violation { reason: ViolationReason, witness: Vec<Vertex> },
}

impl ComponentClass {
    pub fn code(&self) -> &'static str {
        match self {
            Self::IsolatedVertex { .. } => "k1",
            Self::GalaxyCaseA => "galaxy_a",
            Self::GalaxyCaseB { .. } => "galaxy_b",
            Self::GalaxyCaseC { .. } => "galaxy_c",
            Self::Violation { .. } => "violation",
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Self::Violation { .. })
    }

    fn detail(&self) -> serde_json::Value {
        match self {
            Self::IsolatedVertex { vertex, is_host_leaf } => {
                json!({ "vertex": vertex, "is_host_leaf": is_host_leaf })
            }
            Self::GalaxyCaseA => json!({}),
            Self::GalaxyCaseB { bad_leaf } => json!({ "bad_leaf": bad_leaf }),
            Self::GalaxyCaseC { bad_pair, pair_distance } => {
                json!({ "bad_pair": [bad_pair.0, bad_pair.1], "pair_distance": pair_distance })
            }
            Self::Violation { reason, witness } => json!({ "reason": reason, "witness": witness }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overall {
    Holds,
    /// No vertex has an interval spectrum.
    VacuouslyHolds,
    Violation,
}

impl Overall {
    pub fn code(self) -> &'static str {
        match self {
            Self::Holds => "holds",
            Self::VacuouslyHolds => "vacuous",
            Self::Violation => "violation",
        }
    }
}

impl Serialize for Overall {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedComponent {
    pub host_vertices: VertexSet,
    pub class: ComponentClass,
}

impl Serialize for ClassifiedComponent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClassifiedComponent", 3)?;
        st.serialize_field("host_vertices", &self.host_vertices)?;
        st.serialize_field("class", self.class.code())?;
        st.serialize_field("detail", &self.class.detail())?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TheoremVerdict {
    pub lambda_member: bool,
    pub is_forest: bool,
    pub overall: Overall,
    pub components: Vec<ClassifiedComponent>,
}

impl TheoremVerdict {
    pub fn interval_vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.host_vertices.len()).sum()
    }
}

/// Classifies one connected component `h` of the interval-induced
/// subgraph. `host_map[i]` is the host vertex of `h`-vertex `i`.
pub fn classify_component(host: &Graph, h: &Graph, host_map: &[Vertex]) -> ComponentClass {
    let to_host = |xs: &[Vertex]| xs.iter().map(|&x| host_map[x]).collect::<Vec<_>>();
    if h.vertex_count() == 1 {
        let vertex = host_map[0];
        return ComponentClass::IsolatedVertex { vertex, is_host_leaf: host.degree(vertex) == 1 };
    }
    let all: Vec<Vertex> = h.vertices().collect();
    if !h.is_tree() {
        return ComponentClass::Violation { reason: ViolationReason::NotATree, witness: to_host(&all) };
    }
    if !matches!(is_galaxy(h), Ok(true)) {
        return ComponentClass::Violation { reason: ViolationReason::NotGalaxy, witness: to_host(&all) };
    }
    let bad: Vec<Vertex> =
        h.leaves().iter().copied().filter(|&x| host.degree(host_map[x]) >= 2).collect();
    match bad[..] {
        [] => ComponentClass::GalaxyCaseA,
        [leaf] => {
            let (_, peripherals) = h.diameter_and_peripherals().expect("component is connected");
            if peripherals.contains(leaf) {
                ComponentClass::GalaxyCaseB { bad_leaf: host_map[leaf] }
            } else {
                ComponentClass::Violation {
                    reason: ViolationReason::BadLeafNotPeripheral,
                    witness: vec![host_map[leaf]],
                }
            }
        }
        [a, b] => {
            let diam = h.diameter().expect("component is connected");
            let d = h.distance(a, b).expect("component is connected");
            if d == diam {
                ComponentClass::GalaxyCaseC { bad_pair: (host_map[a], host_map[b]), pair_distance: d }
            } else {
                ComponentClass::Violation {
                    reason: ViolationReason::PairNotDiametral,
                    witness: vec![host_map[a], host_map[b]],
                }
            }
        }
        _ => ComponentClass::Violation {
            reason: ViolationReason::TooManyBadLeaves,
            witness: to_host(&bad),
        },
    }
}

/// Classifies every component of the interval-induced subgraph of `(g, f)`.
pub fn check_theorem(g: &Graph, f: &Labeling) -> TheoremVerdict {
    let induced = interval_induced_subgraph(g, f);
    if induced.vertex_map.is_empty() {
        return TheoremVerdict {
            lambda_member: false,
            is_forest: true,
            overall: Overall::VacuouslyHolds,
            components: Vec::new(),
        };
    }
    let forest = &induced.graph;
    let is_forest = forest.is_forest();
    let components: Vec<ClassifiedComponent> = forest
        .components()
        .into_iter()
        .map(|members| {
            let part = forest.induced_subgraph(members.as_slice()).expect("members are valid");
            let host_map: Vec<Vertex> =
                part.vertex_map.iter().map(|&x| induced.vertex_map[x]).collect();
            let class = classify_component(g, &part.graph, &host_map);
            ClassifiedComponent { host_vertices: VertexSet::from_unsorted(host_map), class }
        })
        .collect();
    let overall = if !is_forest || components.iter().any(|c| c.class.is_violation()) {
        Overall::Violation
    } else {
        Overall::Holds
    };
    TheoremVerdict { lambda_member: true, is_forest, overall, components }
}

/// Outcome of a lemma checker over one labeling.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct LemmaReport {
    /// Number of edges or vertices the condition was evaluated on.
    pub checked: usize,
    pub failures: Vec<LemmaFailure>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LemmaFailure {
    /// Adjacent interval vertices whose spectra share other than one label.
    Overlap { x: Vertex, y: Vertex, shared: usize },
    /// An interval vertex with more than two interval neighbours of degree >= 2.
    NeighborBound { x: Vertex, count: usize },
}

/// Adjacent interval vertices have spectra sharing exactly one label.
pub fn check_lemma_adjacent_overlap(g: &Graph, f: &Labeling) -> LemmaReport {
    let in_u = interval_flags(g, f.labels());
    let mut report = LemmaReport::default();
    for &(x, y) in g.edges() {
        if !(in_u[x] && in_u[y]) {
            continue;
        }
        report.checked += 1;
        let sx = spectrum(g, f, x).expect("edge endpoints are valid");
        let sy = spectrum(g, f, y).expect("edge endpoints are valid");
        let shared = sx.intersection_len(&sy);
        if shared != 1 {
            report.failures.push(LemmaFailure::Overlap { x, y, shared });
        }
    }
    report
}

/// Every interval vertex has at most two interval neighbours of host
/// degree >= 2.
pub fn check_lemma_neighbor_bound(g: &Graph, f: &Labeling) -> LemmaReport {
    let in_u = interval_flags(g, f.labels());
    let mut report = LemmaReport::default();
    for x in g.vertices().filter(|&x| in_u[x]) {
        report.checked += 1;
        let count = g.neighbors(x).filter(|&y| in_u[y] && g.degree(y) >= 2).count();
        if count > 2 {
            report.failures.push(LemmaFailure::NeighborBound { x, count });
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("chain is not eligible: {0}")]
    NotEligible(String),
    #[error("labels along the chain follow neither orientation (broken at step {step})")]
    ChainBroken { step: usize },
}

/// For a walk `x_1 ... x_n` of distinct interval vertices of host degree
/// >= 2, reports whether every edge label is the maximum of the previous
/// host spectrum and the minimum of the next (`Ascending`) or the mirror
/// image (`Descending`).
pub fn check_chain_monotonicity(
    g: &Graph,
    f: &Labeling,
    chain: &[Vertex],
) -> Result<Direction, ChainError> {
    if chain.len() < 2 {
        return Err(ChainError::NotEligible("chain needs at least two vertices".into()));
    }
    let in_u = interval_flags(g, f.labels());
    let mut seen = VertexSet::new();
    for &x in chain {
        if g.check_vertex(x).is_err() {
            return Err(ChainError::NotEligible(format!("vertex {x} does not exist")));
        }
        if !in_u[x] {
            return Err(ChainError::NotEligible(format!("vertex {x} has no interval spectrum")));
        }
        if g.degree(x) < 2 {
            return Err(ChainError::NotEligible(format!("vertex {x} is a leaf")));
        }
        if seen.contains(x) {
            return Err(ChainError::NotEligible(format!("vertex {x} repeats")));
        }
        seen = seen.iter().copied().chain([x]).collect();
    }
    let spectra: Vec<_> = chain.iter().map(|&x| spectrum(g, f, x).expect("checked")).collect();
    let mut ascending = true;
    let mut descending = true;
    for (i, pair) in chain.windows(2).enumerate() {
        let e = g.edge_between(pair[0], pair[1]).ok_or_else(|| {
            ChainError::NotEligible(format!("{} and {} are not adjacent", pair[0], pair[1]))
        })?;
        let label = Some(f.label(e));
        let (a, b) = (&spectra[i], &spectra[i + 1]);
        ascending &= label == a.greatest() && label == b.least();
        descending &= label == a.least() && label == b.greatest();
        if !ascending && !descending {
            return Err(ChainError::ChainBroken { step: i });
        }
    }
    match (ascending, descending) {
        (true, false) => Ok(Direction::Ascending),
        (false, true) => Ok(Direction::Descending),
        // Both can only hold if a spectrum were a singleton, which the
        // degree filter above excludes.
        _ => Err(ChainError::ChainBroken { step: 0 }),
    }
}
