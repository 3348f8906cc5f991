//! Reading graphs and labelings from the command line.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use spectra_core::{parse_edge_list, parse_graph6, Graph, Labeling};

use crate::CliError;

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphArgs {
    /// Host graph as a graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Host graph as an edge-list file (`u v` per line).
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// Graph file; `.g6` files are read as graph6, anything else as an edge list.
    #[arg(value_name = "GRAPH")]
    pub file: Option<PathBuf>,
}

impl GraphArgs {
    pub fn load(&self) -> Result<Graph, CliError> {
        let g = match (&self.graph6, &self.edges, &self.file) {
            (Some(s), _, _) => from_graph6(s)?,
            (_, Some(path), _) => from_edges(path)?,
            (_, _, Some(path)) if path.extension().is_some_and(|e| e == "g6") => {
                let text = read(path)?;
                let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or_default();
                from_graph6(line)?
            }
            (_, _, Some(path)) => from_edges(path)?,
            _ => return Err(CliError::Input("no graph given".into())),
        };
        log::info!("host graph: {} vertices, {} edges", g.vertex_count(), g.edge_count());
        Ok(g)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn from_graph6(s: &str) -> Result<Graph, CliError> {
    let g = parse_graph6(s).map_err(|e| CliError::Input(format!("graph6: {e}")))?;
    g.require_host().map_err(|e| CliError::Input(format!("graph6: {e}")))?;
    Ok(g)
}

fn from_edges(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct LabelArgs {
    /// Comma-separated labels, one per edge in edge order.
    #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
    pub labels: Option<String>,
    /// File holding the comma-separated labels.
    #[arg(long, value_name = "FILE")]
    pub labels_file: Option<PathBuf>,
}

impl LabelArgs {
    pub fn load(&self, g: &Graph) -> Result<Labeling, CliError> {
        let csv = match (&self.labels, &self.labels_file) {
            (Some(s), _) => s.clone(),
            (_, Some(path)) => read(path)?,
            _ => return Err(CliError::Input("no labeling given".into())),
        };
        Labeling::parse(g, csv.trim()).map_err(|e| CliError::Input(e.to_string()))
    }
}
