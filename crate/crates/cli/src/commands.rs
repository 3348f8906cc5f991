//! One function per subcommand. Each builds a JSON document and reports
//! whether a violation turned up.

use std::collections::BTreeMap;
use std::fs;

use serde::Serialize;
use spectra_core::classify::{check_lemma_adjacent_overlap, check_lemma_neighbor_bound, LemmaReport};
use spectra_core::enumerate::{
    exhaustive_verify_with, sampled_verify_with, EnumerateError, EnumerationOptions, LabelingStats,
    MAX_ENUMERATION_EDGES,
};
use spectra_core::gradient::{enumerate_gradient_paths, GradientError, GradientPath};
use spectra_core::labeling::spectra;
use spectra_core::optimize::{local_search_max_u, RestartTrace, SearchConfig};
use spectra_core::{
    build_galaxy, check_theorem, decompose_galaxy, galaxy_labeling, interval_vertices, is_galaxy, to_edge_list,
    to_graph6, GalaxyDecomposition, Graph, TheoremVerdict, VertexSet,
};

use crate::{emit_json, emit_text, AnalyzeArgs, CliError, Finding, GalaxyCommand, SearchArgs, StatsArgs, VerifyArgs, SCHEMA};

#[derive(Serialize)]
struct GraphEcho {
    graph6: String,
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphEcho {
    fn of(g: &Graph) -> Self {
        Self { graph6: to_graph6(g), vertices: g.vertex_count(), edges: g.edges().to_vec() }
    }
}

#[derive(Serialize)]
struct SpectrumRow {
    vertex: usize,
    labels: Vec<u32>,
    interval: bool,
}

#[derive(Serialize)]
struct Lemmas {
    adjacent_overlap: LemmaReport,
    neighbor_bound: LemmaReport,
}

#[derive(Serialize)]
struct AnalysisReport {
    schema: u32,
    graph: GraphEcho,
    labeling: String,
    interval_vertices: VertexSet,
    spectra: Vec<SpectrumRow>,
    verdict: TheoremVerdict,
    lemmas: Lemmas,
    #[serde(skip_serializing_if = "Option::is_none")]
    gradient_paths: Option<Vec<GradientPath>>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    gradient_truncated: bool,
}

pub fn analyze(args: &AnalyzeArgs) -> Result<Finding, CliError> {
    let g = args.graph.load()?;
    let f = args.labeling.load(&g)?;
    let verdict = check_theorem(&g, &f);
    let u = interval_vertices(&g, &f);
    let rows = spectra(&g, &f)
        .into_iter()
        .enumerate()
        .map(|(x, s)| SpectrumRow { vertex: x, labels: s.values().to_vec(), interval: u.contains(x) })
        .collect();

    let mut gradient_truncated = false;
    let gradient_paths = if args.gradient {
        Some(match enumerate_gradient_paths(&g, &f, args.max_paths) {
            Ok(paths) => paths,
            Err(GradientError::TruncatedOutput { paths }) => {
                log::warn!("gradient path listing truncated at {}", args.max_paths);
                gradient_truncated = true;
                paths
            }
            Err(GradientError::NotInLambda) => {
                log::warn!("interval vertices do not induce a forest; no gradient paths listed");
                Vec::new()
            }
            Err(e) => return Err(CliError::Input(e.to_string())),
        })
    } else {
        None
    };

    let finding = if verdict.overall == spectra_core::Overall::Violation { Finding::Violation } else { Finding::Clean };
    let report = AnalysisReport {
        schema: SCHEMA,
        graph: GraphEcho::of(&g),
        labeling: f.to_csv(),
        interval_vertices: u,
        spectra: rows,
        lemmas: Lemmas {
            adjacent_overlap: check_lemma_adjacent_overlap(&g, &f),
            neighbor_bound: check_lemma_neighbor_bound(&g, &f),
        },
        verdict,
        gradient_paths,
        gradient_truncated,
    };
    emit_json(&report, args.out.as_ref())?;
    Ok(finding)
}

/// The enumeration guard: the built-in limit, raised by `SPECTRA_MAX_EDGES`.
fn edge_limit() -> Result<usize, CliError> {
    match std::env::var("SPECTRA_MAX_EDGES") {
        Ok(v) => {
            let limit: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("SPECTRA_MAX_EDGES={v:?} is not a number")))?;
            if limit > MAX_ENUMERATION_EDGES {
                log::warn!("enumeration guard raised to {limit} edges; {limit}! labelings may take very long");
            }
            Ok(limit)
        }
        Err(_) => Ok(MAX_ENUMERATION_EDGES),
    }
}

fn enumerate_error(e: EnumerateError) -> CliError {
    match e {
        EnumerateError::TooManyEdges { .. } => {
            CliError::Guard(format!("{e}; set SPECTRA_MAX_EDGES or pass --allow-large to go ahead"))
        }
        EnumerateError::ThreadPool(_) => CliError::Input(e.to_string()),
    }
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    schema: u32,
    graph6: String,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    prune: bool,
    #[serde(flatten)]
    stats: &'a LabelingStats,
}

pub fn verify(args: &VerifyArgs) -> Result<Finding, CliError> {
    let g = args.graph.load()?;
    if args.shards == Some(0) {
        return Err(CliError::Input("--shards must be at least 1".into()));
    }
    let stats = match args.samples {
        Some(n) => sampled_verify_with(&g, n, args.seed, args.shards).map_err(enumerate_error)?,
        None => {
            let edge_limit = if args.allow_large {
                log::warn!("edge guard lifted; enumerating {}! labelings", g.edge_count());
                usize::MAX
            } else {
                edge_limit()?
            };
            let opts = EnumerationOptions { prune_complement: args.prune, edge_limit, threads: args.shards };
            exhaustive_verify_with(&g, &opts).map_err(enumerate_error)?
        }
    };
    if stats.violation_count > 0 {
        log::error!("{} labelings violate the classification", stats.violation_count);
    }
    if let Some(dir) = &args.repro_dir {
        write_repros(dir, &g, &stats)?;
    }
    let report = VerifyReport {
        schema: SCHEMA,
        graph6: to_graph6(&g),
        mode: if args.samples.is_some() { "sampled" } else { "exhaustive" },
        samples: args.samples,
        seed: args.samples.map(|_| args.seed),
        prune: args.prune && args.samples.is_none(),
        stats: &stats,
    };
    emit_json(&report, args.out.as_ref())?;
    Ok(if stats.violation_count > 0 { Finding::Violation } else { Finding::Clean })
}

/// One file per stored violation: the graph6 line, then the labeling CSV.
fn write_repros(dir: &std::path::Path, g: &Graph, stats: &LabelingStats) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Input(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let graph6 = to_graph6(g);
    for (i, v) in stats.violations.iter().enumerate() {
        let path = dir.join(format!("violation-{i:03}.txt"));
        fs::write(&path, format!("{graph6}\n{}\n", v.labeling.to_csv())).map_err(io)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct StatsReport {
    schema: u32,
    graph: GraphEcho,
    degrees: Vec<usize>,
    leaves: VertexSet,
    diameter: usize,
    peripheral_vertices: VertexSet,
    is_tree: bool,
    is_galaxy: bool,
    mode: &'static str,
    labelings: u64,
    histogram: BTreeMap<usize, u64>,
    max_u: usize,
    full_interval_count: u64,
}

pub fn stats(args: &StatsArgs) -> Result<Finding, CliError> {
    let g = args.graph.load()?;
    let (mode, s) = match args.samples {
        Some(n) => ("sampled", sampled_verify_with(&g, n, args.seed, None).map_err(enumerate_error)?),
        None => {
            let opts = EnumerationOptions { edge_limit: edge_limit()?, ..EnumerationOptions::pruned() };
            ("exhaustive", exhaustive_verify_with(&g, &opts).map_err(enumerate_error)?)
        }
    };
    let (diameter, peripheral_vertices) = g.diameter_and_peripherals().map_err(|e| CliError::Input(e.to_string()))?;
    let report = StatsReport {
        schema: SCHEMA,
        graph: GraphEcho::of(&g),
        degrees: g.degrees(),
        leaves: g.leaves(),
        diameter,
        peripheral_vertices,
        is_tree: g.is_tree(),
        is_galaxy: matches!(is_galaxy(&g), Ok(true)),
        mode,
        labelings: s.total_labelings,
        histogram: s.histogram.clone(),
        max_u: s.max_u,
        full_interval_count: s.full_interval_count,
    };
    emit_json(&report, args.out.as_ref())?;
    Ok(if s.violation_count > 0 { Finding::Violation } else { Finding::Clean })
}

#[derive(Serialize)]
struct SearchReport {
    schema: u32,
    graph6: String,
    config: SearchConfig,
    labeling: String,
    best_u_size: usize,
    vertex_count: usize,
    is_galaxy: bool,
    non_galaxy_full_interval: bool,
    traces: Vec<RestartTrace>,
}

pub fn search(args: &SearchArgs) -> Result<Finding, CliError> {
    let g = args.graph.load()?;
    let config = SearchConfig { budget: args.budget, restarts: args.restarts, seed: args.seed, ..SearchConfig::default() };
    let out = local_search_max_u(&g, &config).map_err(|e| CliError::Input(e.to_string()))?;
    let finding = if out.non_galaxy_full_interval { Finding::Violation } else { Finding::Clean };
    let report = SearchReport {
        schema: SCHEMA,
        graph6: to_graph6(&g),
        config,
        labeling: out.labeling.to_csv(),
        best_u_size: out.best_u,
        vertex_count: out.vertex_count,
        is_galaxy: out.is_galaxy,
        non_galaxy_full_interval: out.non_galaxy_full_interval,
        traces: out.traces,
    };
    emit_json(&report, args.out.as_ref())?;
    Ok(finding)
}

#[derive(Serialize)]
struct GalaxyCheck {
    schema: u32,
    graph6: String,
    is_galaxy: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<GalaxyDecomposition>,
}

pub fn galaxy(cmd: &GalaxyCommand) -> Result<Finding, CliError> {
    match cmd {
        GalaxyCommand::Build { counts } => {
            let a = parse_counts(counts)?;
            let (g, _) = build_galaxy(&a).map_err(|e| CliError::Input(e.to_string()))?;
            emit_text(&format!("# graph6 {}\n{}", to_graph6(&g), to_edge_list(&g)), None)?;
        }
        GalaxyCommand::Check { graph } => {
            let g = graph.load()?;
            let galaxy = is_galaxy(&g).map_err(|e| CliError::Input(e.to_string()))?;
            let decomposition = if galaxy { decompose_galaxy(&g).ok() } else { None };
            emit_json(&GalaxyCheck { schema: SCHEMA, graph6: to_graph6(&g), is_galaxy: galaxy, decomposition }, None)?;
        }
        GalaxyCommand::Label { graph } => {
            let g = graph.load()?;
            let f = galaxy_labeling(&g).map_err(|e| CliError::Input(e.to_string()))?;
            emit_text(&format!("{}\n", f.to_csv()), None)?;
        }
    }
    Ok(Finding::Clean)
}

fn parse_counts(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Input(format!("bad pendant count {t:?}"))))
        .collect()
}
