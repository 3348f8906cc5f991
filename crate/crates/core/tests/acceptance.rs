//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs as a plain binary (`harness = false`).

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::{all_permutations, compositions, oracle_is_galaxy, oracle_u};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use spectra_core::census::connected_graphs_up_to;
use spectra_core::classify::{check_lemma_adjacent_overlap, check_lemma_neighbor_bound, ComponentClass, Overall};
use spectra_core::enumerate::{
    exhaustive_verify, exhaustive_verify_with, for_each_labeling, has_full_interval_labeling, sampled_verify,
    EnumerationOptions, LabelingStats,
};
use spectra_core::gradient::check_gradient_uniqueness;
use spectra_core::labeling::{complement_labeling, random_labeling};
use spectra_core::optimize::{exact_max_u, local_search_max_u, SearchConfig};
use spectra_core::{
    build_galaxy, check_theorem, galaxy_labeling, interval_vertices, is_galaxy, to_graph6, Graph, Labeling,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn corpus_up_to(max_edges: usize) -> Vec<Graph> {
    common::corpus().into_iter().filter(|g| g.edge_count() <= max_edges).collect()
}

fn theorem_suite() -> Outcome {
    let corpus = common::corpus();
    let results: Vec<(String, LabelingStats)> = corpus
        .par_iter()
        .map(|g| (to_graph6(g), exhaustive_verify_with(g, &EnumerationOptions::pruned()).unwrap()))
        .collect();
    let mut total = 0;
    for (name, stats) in &results {
        ensure(stats.violation_count == 0, || format!("{name}: {} violations", stats.violation_count))?;
        total += stats.total_labelings;
    }
    let named = corpus.iter().filter(|g| g.vertex_count() <= 6).count();
    Ok(format!("{} hosts ({named} with <= 6 vertices), {total} labelings, 0 violations", corpus.len()))
}

fn complete_graph_components() -> Outcome {
    let k4 = exhaustive_verify(&Graph::complete(4)).unwrap();
    let k5 = sampled_verify(&Graph::complete(5), 10_000, 1);
    for (name, s) in [("K4", &k4), ("K5", &k5)] {
        ensure(s.max_component_size <= 2 && s.violation_count == 0, || {
            format!("{name}: component of {} vertices", s.max_component_size)
        })?;
    }
    let golden = include_str!("golden/k4_histogram.json").trim_end();
    let got = serde_json::to_string(&k4.histogram).unwrap();
    ensure(got == golden, || format!("K4 histogram {got} differs from golden {golden}"))?;
    Ok(format!("K4 720 labelings, K5 10000 samples; components <= 2 vertices; K4 histogram {got}"))
}

fn full_interval_characterization() -> Outcome {
    let mut galaxies = vec![Graph::path(2)];
    for n in 3..=9 {
        for extra in 0..=9 - n {
            for a in compositions(extra, n - 2) {
                galaxies.push(build_galaxy(&a).unwrap().0);
            }
        }
    }
    for h in &galaxies {
        let f = galaxy_labeling(h).unwrap();
        ensure(oracle_u(h, f.labels()).len() == h.vertex_count(), || format!("{} not full", to_graph6(h)))?;
    }
    let others: Vec<Graph> = corpus_up_to(7).into_iter().filter(|g| !is_galaxy(g).unwrap()).collect();
    let failures: Vec<String> = others
        .par_iter()
        .filter(|g| has_full_interval_labeling(g).unwrap().exists)
        .map(to_graph6)
        .collect();
    ensure(failures.is_empty(), || format!("non-galaxies with full-interval labelings: {failures:?}"))?;
    Ok(format!("{} galaxies give U = V; {} non-galaxies have no full-interval labeling", galaxies.len(), others.len()))
}

fn leafless_paths() -> Outcome {
    let mut hosts: Vec<(&str, LabelingStats)> = vec![
        ("C3", exhaustive_verify(&Graph::cycle(3)).unwrap()),
        ("C4", exhaustive_verify(&Graph::cycle(4)).unwrap()),
        ("C5", exhaustive_verify(&Graph::cycle(5)).unwrap()),
        ("C6", exhaustive_verify(&Graph::cycle(6)).unwrap()),
        ("K4", exhaustive_verify(&Graph::complete(4)).unwrap()),
    ];
    hosts.push(("prism", sampled_verify(&Graph::prism(3), 10_000, 7)));
    for (name, s) in &hosts {
        ensure(s.max_induced_degree <= 2 && s.non_forest_count == 0 && s.violation_count == 0, || {
            format!("{name}: induced degree {}, {} non-forests", s.max_induced_degree, s.non_forest_count)
        })?;
    }
    Ok("C3-C6 and K4 exhaustive, 3-prism 10000 samples; all components are paths".into())
}

fn lemma_suite() -> Outcome {
    let check = |g: &Graph, f: &Labeling| -> Result<(), String> {
        let a = check_lemma_adjacent_overlap(g, f);
        let b = check_lemma_neighbor_bound(g, f);
        ensure(a.passed() && b.passed(), || format!("{} {f}: {:?} {:?}", to_graph6(g), a.failures, b.failures))
    };
    let corpus = common::corpus();
    let counts: Vec<Result<u64, String>> = corpus
        .par_iter()
        .map(|g| {
            let mut n = 0;
            let mut err = Ok(());
            for_each_labeling(g, false, |f, _| {
                n += 1;
                err = check(g, f);
                if err.is_err() { std::ops::ControlFlow::Break(()) } else { std::ops::ControlFlow::Continue(()) }
            })
            .unwrap();
            err.map(|_| n)
        })
        .collect();
    let mut total = 0;
    for c in counts {
        total += c?;
    }
    let petersen = Graph::petersen();
    for seed in 0..10_000 {
        check(&petersen, &random_labeling(&petersen, seed))?;
    }
    Ok(format!("{total} corpus labelings and 10000 Petersen samples, 0 failures"))
}

fn gradient_uniqueness() -> Outcome {
    let hosts = corpus_up_to(7);
    let tallies: Vec<Result<(usize, usize), String>> = hosts
        .par_iter()
        .map(|g| {
            let (mut paths, mut edges) = (0, 0);
            let mut err = Ok(());
            for_each_labeling(g, false, |f, _| {
                let r = check_gradient_uniqueness(g, f);
                paths += r.paths_checked;
                edges += r.edges_checked;
                if !r.failures.is_empty() {
                    err = Err(format!("{} {f}: {:?}", to_graph6(g), r.failures));
                    return std::ops::ControlFlow::Break(());
                }
                std::ops::ControlFlow::Continue(())
            })
            .unwrap();
            err.map(|_| (paths, edges))
        })
        .collect();
    let (mut paths, mut edges) = (0, 0);
    for t in tallies {
        let (p, e) = t?;
        paths += p;
        edges += e;
    }
    Ok(format!("{} hosts, {paths} gradient paths and {edges} core edges checked, 0 failures", hosts.len()))
}

fn complement_symmetry() -> Outcome {
    let corpus = common::corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let g = &corpus[rng.gen_range(0..corpus.len())];
        let f = random_labeling(g, rng.gen());
        let c = complement_labeling(g, &f).unwrap();
        ensure(interval_vertices(g, &f) == interval_vertices(g, &c), || format!("{} {f}", to_graph6(g)))?;
    }
    let hosts = corpus_up_to(7);
    let mismatched: Vec<String> = hosts
        .par_iter()
        .filter(|g| exhaustive_verify(g).unwrap() != exhaustive_verify_with(g, &EnumerationOptions::pruned()).unwrap())
        .map(to_graph6)
        .collect();
    ensure(mismatched.is_empty(), || format!("pruned stats differ on {mismatched:?}"))?;
    Ok(format!("10000 random draws; pruned = unpruned on {} hosts", hosts.len()))
}

fn micro_examples() -> Outcome {
    let k3 = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0)]).unwrap();
    let v = check_theorem(&k3, &Labeling::new(&k3, vec![1, 2, 3]).unwrap());
    ensure(v.overall == Overall::Holds && v.components.len() == 1, || format!("K3: {v:?}"))?;
    ensure(v.components[0].host_vertices.as_slice() == [1, 2], || format!("K3: {v:?}"))?;
    ensure(matches!(v.components[0].class, ComponentClass::GalaxyCaseC { .. }), || format!("K3: {v:?}"))?;

    let p4 = Graph::path(4);
    let v = check_theorem(&p4, &Labeling::new(&p4, vec![2, 1, 3]).unwrap());
    let codes: Vec<&str> = v.components.iter().map(|c| c.class.code()).collect();
    ensure(v.overall == Overall::Holds && codes == ["galaxy_b", "k1"], || format!("P4: {v:?}"))?;

    let c5 = Graph::cycle(5);
    let v = check_theorem(&c5, &Labeling::new(&c5, vec![1, 3, 5, 2, 4]).unwrap());
    ensure(v.overall == Overall::VacuouslyHolds && v.components.is_empty(), || format!("C5: {v:?}"))?;

    let (t, d) = build_galaxy(&[1, 0, 2]).unwrap();
    ensure(d.spine == [0, 1, 2, 3, 4] && t.vertex_count() == 8, || format!("T[(1,0,2)]: {d:?}"))?;
    let f = galaxy_labeling(&t).unwrap();
    ensure(f.labels() == [1, 3, 4, 7, 2, 5, 6], || format!("T[(1,0,2)] labeling {f}"))?;
    ensure(interval_vertices(&t, &f).len() == 8, || "T[(1,0,2)] not full".into())?;
    Ok("K3 case c on {v1,v2}; P4 case b + K1; C5 vacuous; T[(1,0,2)] labeling 1,3,4,7,2,5,6".into())
}

fn recognition_oracle() -> Outcome {
    let levels = connected_graphs_up_to(8);
    let graphs: Vec<&Graph> = levels.iter().flatten().collect();
    let disagreements: Vec<String> = graphs
        .par_iter()
        .filter(|g| is_galaxy(g).unwrap() != oracle_is_galaxy(g))
        .map(|g| to_graph6(g))
        .collect();
    ensure(disagreements.is_empty(), || format!("disagreements: {disagreements:?}"))?;
    let galaxies = graphs.iter().filter(|g| is_galaxy(g).unwrap()).count();
    Ok(format!("{} connected graphs on 1-8 vertices ({galaxies} galaxies), 0 disagreements", graphs.len()))
}

/// Exact `max |U|` straight from the definition, for cross-checking.
fn oracle_max_u(g: &Graph) -> usize {
    all_permutations(g.edge_count()).iter().map(|p| oracle_u(g, p).len()).max().unwrap()
}

fn search_calibration() -> Outcome {
    let cfg = SearchConfig { budget: 100_000, restarts: 5, seed: 0, ..SearchConfig::default() };
    let hosts = corpus_up_to(8);
    let misses: Vec<String> = hosts
        .par_iter()
        .filter_map(|g| {
            let exact = exact_max_u(g).unwrap();
            let found = local_search_max_u(g, &cfg).unwrap().best_u;
            (found != exact).then(|| format!("{}: found {found}, exact {exact}", to_graph6(g)))
        })
        .collect();
    ensure(misses.is_empty(), || format!("{misses:?}"))?;
    let c5 = exact_max_u(&Graph::cycle(5)).unwrap();
    let k4 = exact_max_u(&Graph::complete(4)).unwrap();
    ensure(c5 == oracle_max_u(&Graph::cycle(5)), || format!("C5 exact {c5} disagrees with brute force"))?;
    ensure(k4 == 2, || format!("K4 exact {k4}"))?;
    Ok(format!(
        "search matched exact on {} hosts; K4 = {k4}; C5 = {c5} (equal to brute force)",
        hosts.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("theorem holds on every corpus labeling", theorem_suite),
        ("complete graphs: components have at most 2 vertices", complete_graph_components),
        ("full-interval labelings exist exactly for galaxies", full_interval_characterization),
        ("leafless hosts: interval components are paths", leafless_paths),
        ("lemma checks", lemma_suite),
        ("gradient path uniqueness", gradient_uniqueness),
        ("complement symmetry and pruning", complement_symmetry),
        ("worked micro-examples", micro_examples),
        ("galaxy recognition oracle", recognition_oracle),
        ("search calibration", search_calibration),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
