//! Reading graph6/sparse6 corpora, one graph per line.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};
use tk5kit_core::graph6::parse_line;
use tk5kit_core::Graph;

/// A graph tagged with the (1-based) line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ingested {
    pub line: usize,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub graphs: Vec<Ingested>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Parses every line; bad lines become diagnostics. Blank lines are skipped.
pub fn ingest(reader: impl BufRead) -> io::Result<Corpus> {
    let mut out = Corpus::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        match parse_line(text) {
            Ok(graph) => out.graphs.push(Ingested { line: i + 1, graph }),
            Err(e) => out.diagnostics.push(Diagnostic {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    Ok(out)
}

pub fn ingest_path(path: impl AsRef<Path>) -> io::Result<Corpus> {
    ingest(BufReader::new(File::open(path)?))
}
