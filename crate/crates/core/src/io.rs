//! Graph loaders: Matrix Market coordinate files, edge lists, adjacency
//! matrices and adjacency lists, plus a Matrix Market pattern writer.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Label, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeRecord {
    pub u: Label,
    pub v: Label,
}

/// Non-fatal oddities noticed while loading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadWarning {
    /// `M != N` in a Matrix Market size line; column indices were shifted
    /// past the row labels so rows and columns form a bipartite vertex set.
    NonSquare { rows: usize, cols: usize },
    /// Adjacency list entries listed in one direction only.
    AsymmetricListing { one_way_entries: usize },
}

impl fmt::Display for LoadWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadWarning::NonSquare { rows, cols } => write!(
                f,
                "matrix is {rows}x{cols}; columns relabeled {}..={} as a bipartite vertex set",
                rows + 1,
                rows + cols
            ),
            LoadWarning::AsymmetricListing { one_way_entries } => write!(
                f,
                "{one_way_entries} adjacency entries were listed in one direction only; symmetrized"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MtxSymmetry {
    General,
    Symmetric,
    SkewSymmetric,
    Hermitian,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MtxHeader {
    pub field: String,
    pub symmetry: MtxSymmetry,
}

/// A parsed Matrix Market coordinate file.
#[derive(Debug, Clone)]
pub struct MtxFile {
    pub header: MtxHeader,
    pub rows: usize,
    pub cols: usize,
    pub nnz: usize,
    pub edges: Vec<EdgeRecord>,
    pub warnings: Vec<LoadWarning>,
}

impl MtxFile {
    /// Declared vertex count: `M` for square matrices, `M + N` otherwise.
    pub fn n_declared(&self) -> usize {
        if self.rows == self.cols {
            self.rows
        } else {
            self.rows + self.cols
        }
    }

    /// Graph over labels `1..=n_declared`, with internal ID `label - 1`.
    /// Vertices that appear in no entry are kept as isolated vertices.
    pub fn to_graph(&self) -> Result<Graph> {
        let n = self.n_declared();
        if n > VertexId::MAX as usize {
            return Err(Error::Capacity(format!(
                "{n} declared vertices exceed the 32-bit vertex ID range"
            )));
        }
        let labels: Vec<Label> = (1..=n as Label).collect();
        Graph::from_id_edges(
            labels,
            self.edges
                .iter()
                .map(|e| ((e.u - 1) as VertexId, (e.v - 1) as VertexId)),
        )
    }
}

fn parse_banner(line: &str) -> Result<MtxHeader> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("%%MatrixMarket") {
        return Err(Error::format(1, "missing %%MatrixMarket banner"));
    }
    let object = tokens.next().unwrap_or("").to_ascii_lowercase();
    let format = tokens.next().unwrap_or("").to_ascii_lowercase();
    let field = tokens.next().unwrap_or("").to_ascii_lowercase();
    let symmetry = tokens.next().unwrap_or("general").to_ascii_lowercase();
    if object != "matrix" {
        return Err(Error::format(1, format!("unsupported object `{object}`")));
    }
    if format != "coordinate" {
        return Err(Error::format(
            1,
            format!("unsupported format `{format}`, only `coordinate` is read"),
        ));
    }
    if !matches!(
        field.as_str(),
        "pattern" | "real" | "integer" | "complex" | "double"
    ) {
        return Err(Error::format(1, format!("unknown field `{field}`")));
    }
    let symmetry = match symmetry.as_str() {
        "general" => MtxSymmetry::General,
        "symmetric" => MtxSymmetry::Symmetric,
        "skew-symmetric" => MtxSymmetry::SkewSymmetric,
        "hermitian" => MtxSymmetry::Hermitian,
        other => return Err(Error::format(1, format!("unknown symmetry `{other}`"))),
    };
    Ok(MtxHeader { field, symmetry })
}

fn parse_index(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::format(line, format!("missing {what}")))?;
    token
        .parse::<usize>()
        .map_err(|_| Error::format(line, format!("invalid {what} `{token}`")))
}

/// Parses a Matrix Market coordinate file.
///
/// Only the first two integers of each data line are read; numeric value
/// fields are ignored. The number of data lines must equal the declared
/// `nnz`.
pub fn parse_mtx<R: BufRead>(mut reader: R) -> Result<MtxFile> {
    let mut buf = String::new();
    let mut line_no = 0usize;

    let mut next_line = |buf: &mut String, line_no: &mut usize| -> Result<bool> {
        buf.clear();
        let read = reader.read_line(buf)?;
        if read > 0 {
            *line_no += 1;
        }
        Ok(read > 0)
    };

    if !next_line(&mut buf, &mut line_no)? {
        return Err(Error::format(
            1,
            "empty input, expected %%MatrixMarket banner",
        ));
    }
    let header = parse_banner(buf.trim())?;

    let (rows, cols, nnz) = loop {
        if !next_line(&mut buf, &mut line_no)? {
            return Err(Error::format(line_no, "missing size line"));
        }
        let line = buf.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let rows = parse_index(tokens.next(), line_no, "row count")?;
        let cols = parse_index(tokens.next(), line_no, "column count")?;
        let nnz = parse_index(tokens.next(), line_no, "entry count")?;
        break (rows, cols, nnz);
    };
    let size_line = line_no;

    let mut warnings = Vec::new();
    let shift = if rows != cols {
        warnings.push(LoadWarning::NonSquare { rows, cols });
        rows
    } else {
        0
    };

    let mut edges = Vec::with_capacity(nnz);
    while next_line(&mut buf, &mut line_no)? {
        let line = buf.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if edges.len() == nnz {
            return Err(Error::format(
                line_no,
                format!("more data lines than the {nnz} entries declared on line {size_line}"),
            ));
        }
        let mut tokens = line.split_whitespace();
        let i = parse_index(tokens.next(), line_no, "row index")?;
        let j = parse_index(tokens.next(), line_no, "column index")?;
        if i == 0 || i > rows || j == 0 || j > cols {
            return Err(Error::format(
                line_no,
                format!("entry ({i}, {j}) outside the declared {rows}x{cols} matrix"),
            ));
        }
        edges.push(EdgeRecord {
            u: i as Label,
            v: (j + shift) as Label,
        });
    }
    if edges.len() != nnz {
        return Err(Error::format(
            line_no,
            format!(
                "found {} data lines but line {size_line} declares {nnz} entries",
                edges.len()
            ),
        ));
    }

    Ok(MtxFile {
        header,
        rows,
        cols,
        nnz,
        edges,
        warnings,
    })
}

/// Parses whitespace-separated label pairs, one per line.
///
/// Blank lines and lines starting with `comment_prefix` are skipped; tokens
/// after the first two on a line are ignored.
pub fn parse_edge_list<R: BufRead>(mut reader: R, comment_prefix: &str) -> Result<Vec<EdgeRecord>> {
    let mut buf = String::new();
    let mut line_no = 0;
    let mut edges = Vec::new();
    loop {
        buf.clear();
        if reader.read_line(&mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let line = buf.trim();
        if line.is_empty() || (!comment_prefix.is_empty() && line.starts_with(comment_prefix)) {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut label = |what: &str| -> Result<Label> {
            let token = tokens
                .next()
                .ok_or_else(|| Error::format(line_no, format!("missing {what} vertex")))?;
            token
                .parse::<Label>()
                .map_err(|_| Error::format(line_no, format!("non-integer token `{token}`")))
        };
        let u = label("first")?;
        let v = label("second")?;
        edges.push(EdgeRecord { u, v });
    }
    Ok(edges)
}

/// Graph from edge records with first-seen label order.
pub fn edges_to_graph(edges: &[EdgeRecord]) -> Result<Graph> {
    let mut builder = GraphBuilder::new();
    for e in edges {
        builder.add_edge(e.u, e.v);
    }
    builder.build()
}

/// Graph from a dense 0/1 matrix. Vertex `i` gets label `i`.
///
/// The matrix must be square and symmetric with a zero diagonal.
pub fn from_adjacency_matrix<Row: AsRef<[u8]>>(matrix: &[Row]) -> Result<Graph> {
    let n = matrix.len();
    let mut edges = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != n {
            return Err(Error::validation(format!(
                "row {i} has {} entries, matrix is not {n}x{n}",
                row.len()
            )));
        }
        for (j, &entry) in row.iter().enumerate() {
            if entry > 1 {
                return Err(Error::validation(format!(
                    "entry ({i}, {j}) is {entry}, not 0/1"
                )));
            }
            if i == j && entry != 0 {
                return Err(Error::validation(format!("nonzero diagonal entry at {i}")));
            }
            if entry != matrix[j].as_ref().get(i).copied().unwrap_or(0) {
                return Err(Error::validation(format!(
                    "matrix is asymmetric at ({i}, {j})"
                )));
            }
            if entry == 1 && i < j {
                edges.push((i as VertexId, j as VertexId));
            }
        }
    }
    Graph::from_id_edges((0..n as Label).collect(), edges)
}

/// Graph from per-vertex neighbor lists. Vertex `i` gets label `i`.
///
/// One-way listings are symmetrized and reported as a warning. Self-loops
/// and out-of-range neighbors are errors.
pub fn from_adjacency_list<L: AsRef<[usize]>>(lists: &[L]) -> Result<(Graph, Vec<LoadWarning>)> {
    let n = lists.len();
    let mut edges = Vec::new();
    for (i, list) in lists.iter().enumerate() {
        for &j in list.as_ref() {
            if j >= n {
                return Err(Error::validation(format!(
                    "vertex {i} lists neighbor {j}, outside 0..{n}"
                )));
            }
            if j == i {
                return Err(Error::validation(format!("vertex {i} lists itself")));
            }
            edges.push((i as VertexId, j as VertexId));
        }
    }
    let one_way = edges
        .iter()
        .filter(|&&(i, j)| !lists[j as usize].as_ref().contains(&(i as usize)))
        .count();
    let graph = Graph::from_id_edges((0..n as Label).collect(), edges)?;
    let warnings = if one_way > 0 {
        vec![LoadWarning::AsymmetricListing {
            one_way_entries: one_way,
        }]
    } else {
        Vec::new()
    };
    Ok((graph, warnings))
}

/// Writes `graph` as `pattern symmetric` Matrix Market with 1-based
/// internal IDs, one lower-triangle entry (`i > j`) per line.
pub fn write_mtx<W: Write>(graph: &Graph, mut out: W) -> Result<()> {
    let n = graph.n_vertices();
    writeln!(out, "%%MatrixMarket matrix coordinate pattern symmetric")?;
    writeln!(out, "{n} {n} {}", graph.n_edges())?;
    for (u, v) in graph.edges() {
        writeln!(out, "{} {}", v + 1, u + 1)?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Mtx,
    EdgeList,
}

impl GraphFormat {
    /// `.mtx` means Matrix Market; anything else is an edge list.
    pub fn detect(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("mtx") => GraphFormat::Mtx,
            _ => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub warnings: Vec<LoadWarning>,
}

/// Loads a graph file, detecting the format from the extension unless one
/// is given. Edge lists use `#` comment lines.
pub fn load_graph(path: &Path, format: Option<GraphFormat>) -> Result<LoadedGraph> {
    let reader = BufReader::new(File::open(path)?);
    match format.unwrap_or_else(|| GraphFormat::detect(path)) {
        GraphFormat::Mtx => {
            let mtx = parse_mtx(reader)?;
            Ok(LoadedGraph {
                graph: mtx.to_graph()?,
                warnings: mtx.warnings,
            })
        }
        GraphFormat::EdgeList => {
            let edges = parse_edge_list(reader, "#")?;
            Ok(LoadedGraph {
                graph: edges_to_graph(&edges)?,
                warnings: Vec::new(),
            })
        }
    }
}
