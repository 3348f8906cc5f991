//! Regenerates `data/corpus.g6`: every connected graph on 2 to 7 vertices
//! with at most 8 edges, one per isomorphism class.
//!
//!     cargo run -p spectra-core --example make_corpus > crates/core/data/corpus.g6

use spectra_core::census::connected_graphs_up_to;
use spectra_core::to_graph6;

fn main() {
    for level in connected_graphs_up_to(7).iter().skip(1) {
        let mut graphs: Vec<_> = level.iter().filter(|g| g.edge_count() <= 8).collect();
        graphs.sort_by_key(|g| g.edge_count());
        for g in graphs {
            println!("{}", to_graph6(g));
        }
    }
}
