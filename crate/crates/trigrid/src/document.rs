//! Line-oriented, versioned graph documents.
//!
//! ```text
//! trigrid-graph v1
//! kind subdivided
//! cell Up(0,0)
//! subdivided Up(0,0)
//! vertex (0,0)
//! vertex P@Up(0,0)
//! edge (0,0) P@Up(0,0)
//! label 1 (0,0)
//! ```
//!
//! Kinds are `grid`, `subdivided`, `generic` and `oriented`. Oriented
//! documents list `arc` lines instead of `edge` lines and may carry the
//! `cell`, `subdivided` and `template` lines of the subdivision they orient.
//! Blank lines and lines starting with `#` are ignored. Emission is
//! canonical: sections in the order above, each sorted, so that
//! emit, parse, emit is a fixed point.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;
use trigrid_core::{
    CellRef, CellTemplate, Graph, OrientedGraph, SubdividedGraph, TriGridGraph, Vertex,
};

pub const HEADER: &str = "trigrid-graph";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum LabelKey {
    Vertex(Vertex),
    Number(u64),
    Text,
}

/// A vertex name. Grid points and apexes sort geometrically, then decimal
/// numbers by value, then everything else by text.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    key: LabelKey,
    text: String,
}

impl Label {
    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn vertex(&self) -> Option<Vertex> {
        match self.key {
            LabelKey::Vertex(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid label {0:?}: labels are non-empty and contain no whitespace or `#`")]
pub struct LabelError(pub String);

impl FromStr for Label {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || s.contains(|c: char| c.is_whitespace() || c == '#') {
            return Err(LabelError(s.to_string()));
        }
        if let Ok(v) = s.parse::<Vertex>() {
            return Ok(Label::from(v));
        }
        let key = match s.parse::<u64>() {
            Ok(n) if s.bytes().all(|b| b.is_ascii_digit()) => LabelKey::Number(n),
            _ => LabelKey::Text,
        };
        Ok(Label {
            key,
            text: s.to_string(),
        })
    }
}

impl From<Vertex> for Label {
    fn from(v: Vertex) -> Self {
        Label {
            key: LabelKey::Vertex(v),
            text: v.to_string(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocKind {
    Grid,
    Subdivided,
    Generic,
    Oriented,
}

impl DocKind {
    pub fn name(self) -> &'static str {
        match self {
            DocKind::Grid => "grid",
            DocKind::Subdivided => "subdivided",
            DocKind::Generic => "generic",
            DocKind::Oriented => "oriented",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct DocError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, DocError> {
    Err(DocError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub kind: DocKind,
    pub cells: BTreeSet<CellRef>,
    pub subdivided: BTreeSet<CellRef>,
    pub templates: BTreeMap<CellRef, CellTemplate>,
    pub vertices: BTreeSet<Label>,
    /// Unordered pairs stored smaller label first.
    pub edges: BTreeSet<(Label, Label)>,
    pub arcs: BTreeSet<(Label, Label)>,
    /// Display label to vertex.
    pub labels: BTreeMap<String, Label>,
}

fn pair(a: Label, b: Label) -> (Label, Label) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn labelled<V: Clone + Into<Label>>(g: &Graph<V>) -> (BTreeSet<Label>, BTreeSet<(Label, Label)>) {
    let vertices = g.vertices().iter().cloned().map(Into::into).collect();
    let edges = g
        .edge_labels()
        .map(|(a, b)| pair(a.clone().into(), b.clone().into()))
        .collect();
    (vertices, edges)
}

impl GraphDocument {
    fn empty(kind: DocKind) -> Self {
        GraphDocument {
            kind,
            cells: BTreeSet::new(),
            subdivided: BTreeSet::new(),
            templates: BTreeMap::new(),
            vertices: BTreeSet::new(),
            edges: BTreeSet::new(),
            arcs: BTreeSet::new(),
            labels: BTreeMap::new(),
        }
    }

    pub fn from_grid(g: &TriGridGraph) -> Self {
        let graph = g.to_graph().map_labels(|&p| Vertex::Grid(p)).expect("injective");
        let (vertices, edges) = labelled(&graph);
        GraphDocument {
            cells: g.specified_cells().clone(),
            vertices,
            edges,
            ..GraphDocument::empty(DocKind::Grid)
        }
    }

    pub fn from_subdivided(sg: &SubdividedGraph) -> Self {
        let (vertices, edges) = labelled(sg.graph());
        GraphDocument {
            cells: sg.base().specified_cells().clone(),
            subdivided: sg.subdivided_cells().clone(),
            vertices,
            edges,
            ..GraphDocument::empty(DocKind::Subdivided)
        }
    }

    pub fn from_generic<L: Clone + Into<Label>>(g: &Graph<L>) -> Self {
        let (vertices, edges) = labelled(g);
        GraphDocument {
            vertices,
            edges,
            ..GraphDocument::empty(DocKind::Generic)
        }
    }

    /// An oriented document; `source` supplies cells and templates when the
    /// orientation is of a subdivision.
    pub fn from_oriented<L: Clone + Into<Label>>(
        d: &OrientedGraph<L>,
        source: Option<(&SubdividedGraph, &BTreeMap<CellRef, CellTemplate>)>,
    ) -> Self {
        let (vertices, _) = labelled(d.base());
        let arcs = d
            .arc_labels()
            .map(|(a, b)| (a.clone().into(), b.clone().into()))
            .collect();
        let mut doc = GraphDocument {
            vertices,
            arcs,
            ..GraphDocument::empty(DocKind::Oriented)
        };
        if let Some((sg, templates)) = source {
            doc.cells = sg.base().specified_cells().clone();
            doc.subdivided = sg.subdivided_cells().clone();
            doc.templates = templates.clone();
        }
        doc
    }

    pub fn with_labels<'a, I: IntoIterator<Item = (&'a str, Label)>>(mut self, labels: I) -> Self {
        self.labels
            .extend(labels.into_iter().map(|(k, v)| (k.to_string(), v)));
        self
    }

    /// The underlying simple graph; arcs count as edges.
    pub fn graph(&self) -> Graph<Label> {
        let edges: Vec<(Label, Label)> = if self.kind == DocKind::Oriented {
            self.arcs.iter().cloned().collect()
        } else {
            self.edges.iter().cloned().collect()
        };
        Graph::new(self.vertices.iter().cloned(), edges).expect("validated on construction")
    }

    pub fn oriented(&self) -> Option<OrientedGraph<Label>> {
        if self.kind != DocKind::Oriented {
            return None;
        }
        let arcs: Vec<(Label, Label)> = self.arcs.iter().cloned().collect();
        Some(OrientedGraph::from_arcs(self.graph(), arcs).expect("validated on construction"))
    }

    /// The grid graph of a grid, subdivided or grid-derived oriented
    /// document.
    pub fn tri_grid(&self) -> Option<TriGridGraph> {
        match self.kind {
            DocKind::Generic => None,
            DocKind::Oriented if self.cells.is_empty() => None,
            _ => Some(grid_of(&self.cells, &self.vertices)),
        }
    }

    /// The subdivision described, with no cells subdivided for grid
    /// documents.
    pub fn subdivision(&self) -> Option<SubdividedGraph> {
        let g = self.tri_grid()?;
        SubdividedGraph::new(g, self.subdivided.iter().copied()).ok()
    }

    pub fn emit(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self, DocError> {
        let mut kind = None;
        let mut header_seen = false;
        let mut doc = GraphDocument::empty(DocKind::Generic);
        let mut edge_lines = Vec::new();
        let mut arc_lines = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let n = i + 1;
            last_line = n;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            if !header_seen {
                match words.as_slice() {
                    [HEADER, v] => match v.strip_prefix('v').and_then(|v| v.parse::<u32>().ok()) {
                        Some(FORMAT_VERSION) => header_seen = true,
                        Some(other) => return err(n, format!("unsupported format version {other}")),
                        None => return err(n, format!("malformed version {v:?}")),
                    },
                    _ => return err(n, format!("expected header `{HEADER} v{FORMAT_VERSION}`")),
                }
                continue;
            }
            let label = |s: &str| s.parse::<Label>().or_else(|e| err(n, e.to_string()));
            let cell = |s: &str| s.parse::<CellRef>().or_else(|_| err(n, format!("malformed cell {s:?}")));
            match words.as_slice() {
                ["kind", k] => {
                    if kind.is_some() {
                        return err(n, "duplicate kind line");
                    }
                    kind = Some(match *k {
                        "grid" => DocKind::Grid,
                        "subdivided" => DocKind::Subdivided,
                        "generic" => DocKind::Generic,
                        "oriented" => DocKind::Oriented,
                        other => return err(n, format!("unknown kind {other:?}")),
                    });
                }
                ["cell", c] => {
                    doc.cells.insert(cell(c)?);
                }
                ["subdivided", c] => {
                    doc.subdivided.insert(cell(c)?);
                }
                ["template", c, t] => {
                    let mut chars = t.chars();
                    let template = match (chars.next().and_then(CellTemplate::from_symbol), chars.next()) {
                        (Some(t), None) => t,
                        _ => return err(n, format!("unknown template {t:?}")),
                    };
                    doc.templates.insert(cell(c)?, template);
                }
                ["vertex", v] => {
                    doc.vertices.insert(label(v)?);
                }
                ["edge", a, b] => edge_lines.push((n, label(a)?, label(b)?)),
                ["arc", a, b] => arc_lines.push((n, label(a)?, label(b)?)),
                ["label", name, v] => {
                    if doc.labels.insert(name.to_string(), label(v)?).is_some() {
                        return err(n, format!("duplicate label {name:?}"));
                    }
                }
                [other, ..] => return err(n, format!("unrecognised line `{other}`")),
                [] => unreachable!("blank lines are skipped"),
            }
        }
        if !header_seen {
            return err(last_line.max(1), "missing header");
        }
        doc.kind = match kind {
            Some(k) => k,
            None => return err(last_line.max(1), "missing kind line"),
        };
        for (n, a, b) in edge_lines {
            doc.check_endpoints(n, &a, &b)?;
            doc.edges.insert(pair(a, b));
        }
        for (n, a, b) in arc_lines {
            doc.check_endpoints(n, &a, &b)?;
            let reverse = (b.clone(), a.clone());
            if doc.arcs.contains(&reverse) {
                return err(n, format!("arc {a} {b} also listed reversed"));
            }
            doc.arcs.insert((a, b));
        }
        doc.validate(last_line.max(1))?;
        Ok(doc)
    }

    fn check_endpoints(&self, n: usize, a: &Label, b: &Label) -> Result<(), DocError> {
        if a == b {
            return err(n, format!("self-loop at {a}"));
        }
        for v in [a, b] {
            if !self.vertices.contains(v) {
                return err(n, format!("undeclared vertex {v}"));
            }
        }
        Ok(())
    }

    /// Whole-document consistency; problems are reported at `end`.
    fn validate(&self, end: usize) -> Result<(), DocError> {
        let gridded = !self.cells.is_empty() || matches!(self.kind, DocKind::Grid | DocKind::Subdivided);
        match self.kind {
            DocKind::Oriented if !self.edges.is_empty() => {
                return err(end, "oriented documents list arcs, not edges")
            }
            DocKind::Grid | DocKind::Subdivided | DocKind::Generic if !self.arcs.is_empty() => {
                return err(end, format!("{} documents list edges, not arcs", self.kind.name()))
            }
            _ => {}
        }
        if !gridded {
            if !self.subdivided.is_empty() || !self.templates.is_empty() {
                return err(end, "subdivided cells or templates without cells");
            }
            return Ok(());
        }
        if self.kind == DocKind::Grid && !self.subdivided.is_empty() {
            return err(end, "grid documents have no subdivided cells");
        }
        if self.cells.is_empty() && self.vertices.len() > 1 {
            return err(end, "a grid without cells has at most one vertex");
        }
        let g = grid_of(&self.cells, &self.vertices);
        let sg = match SubdividedGraph::new(g, self.subdivided.iter().copied()) {
            Ok(sg) => sg,
            Err(e) => return err(end, e.to_string()),
        };
        if let Some(c) = self.templates.keys().find(|c| !self.subdivided.contains(c)) {
            return err(end, format!("template for cell {c}, which is not subdivided"));
        }
        let (vertices, edges) = labelled(sg.graph());
        if vertices != self.vertices {
            return err(end, "vertex lines disagree with the cells");
        }
        let listed: BTreeSet<(Label, Label)> = if self.kind == DocKind::Oriented {
            self.arcs.iter().map(|(a, b)| pair(a.clone(), b.clone())).collect()
        } else {
            self.edges.clone()
        };
        if listed != edges {
            return err(end, "edge lines disagree with the cells");
        }
        Ok(())
    }
}

fn grid_of(cells: &BTreeSet<CellRef>, vertices: &BTreeSet<Label>) -> TriGridGraph {
    if cells.is_empty() {
        if let Some(Vertex::Grid(p)) = vertices.iter().next().and_then(Label::vertex) {
            return TriGridGraph::with_isolated_vertex(p);
        }
    }
    TriGridGraph::new(cells.iter().copied())
}

impl fmt::Display for GraphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER} v{FORMAT_VERSION}")?;
        writeln!(f, "kind {}", self.kind.name())?;
        for c in &self.cells {
            writeln!(f, "cell {c}")?;
        }
        for c in &self.subdivided {
            writeln!(f, "subdivided {c}")?;
        }
        for (c, t) in &self.templates {
            writeln!(f, "template {c} {t}")?;
        }
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for (a, b) in &self.edges {
            writeln!(f, "edge {a} {b}")?;
        }
        for (a, b) in &self.arcs {
            writeln!(f, "arc {a} {b}")?;
        }
        for (name, v) in &self.labels {
            writeln!(f, "label {name} {v}")?;
        }
        Ok(())
    }
}
