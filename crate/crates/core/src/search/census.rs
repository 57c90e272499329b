//! Reading regular-graph censuses stored as graph6 lines.

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::format::{parse_graph6, FormatError};
use crate::graph::SignedGraph;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Malformed {
        path: PathBuf,
        line: usize,
        #[source]
        source: FormatError,
    },
}

#[derive(Debug, Clone, Default)]
pub struct Census {
    pub graphs: Vec<SignedGraph>,
    /// Lines that decoded but had the wrong order, degree or connectivity.
    pub skipped: usize,
}

/// File name used for the `(n, r)` census inside a census directory.
pub fn census_file(dir: &Path, n: usize, r: usize) -> PathBuf {
    dir.join(format!("reg{n}_{r}.g6"))
}

/// Reads a graph6 file, keeping connected `r`-regular graphs on `n`
/// vertices. Blank lines are ignored.
pub fn ingest_census(path: &Path, n: usize, r: usize) -> Result<Census, CensusError> {
    let text = fs::read_to_string(path).map_err(|source| CensusError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_census(&text, n, r).map_err(|(line, source)| CensusError::Malformed {
        path: path.to_owned(),
        line,
        source,
    })
}

pub(crate) fn parse_census(text: &str, n: usize, r: usize) -> Result<Census, (usize, FormatError)> {
    let mut census = Census::default();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| (i + 1, e))?;
        let ok = g.order() == n && g.degrees().regular_degree() == Some(r) && g.is_connected();
        if ok {
            census.graphs.push(g);
        } else {
            census.skipped += 1;
        }
    }
    Ok(census)
}
