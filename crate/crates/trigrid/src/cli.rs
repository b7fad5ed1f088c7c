//! Command-line front end.
//!
//! Exit codes: 0 affirmative verdict or success, 1 negative verdict,
//! 2 usage or input error, 3 budget exhausted, 4 the independent deciders
//! disagree.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use trigrid_core::generators::{self, named, Named};
use trigrid_core::smart::{resolve_choice, Assignments};
use trigrid_core::{
    cross_validate, find_induced_pattern, find_k_uniform_representant,
    find_semi_transitive_orientation, smart_orient, CellKind, CellRef, CellTemplate, Consistency,
    EdgeKind, Graph, MatchOutcome, SearchResult, SmartError, SubdividedGraph, TemplateChoice,
    Word, WordError, WordSearch, DEFAULT_BUDGET,
};

use crate::document::{DocError, DocKind, GraphDocument, Label};
use crate::export::{emit_dot, emit_svg};

pub const BUDGET_ENV: &str = "TRIGRID_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "trigrid", version, about = "Word-representability of subdivided triangular grid graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct Input {
    /// Graph document to read; standard input when omitted.
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Args)]
struct Budget {
    /// Search budget in search nodes.
    #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph document.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Subdivide cells of a grid or subdivided document.
    Subdivide {
        /// Subdivide every boundary cell.
        #[arg(long, conflicts_with = "cells")]
        all_boundary: bool,
        /// Comma-separated cells, e.g. `Up(0,0),Down(1,0)`.
        #[arg(long)]
        cells: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    /// List boundary and interior edges and cells with property sets.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Orient a boundary subdivision.
    Orient {
        #[command(subcommand)]
        how: OrientCommand,
    },
    /// Decide a property of a document.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Words and the graphs they represent.
    Word {
        #[command(subcommand)]
        what: WordCommand,
    },
    /// Search for structures in a document.
    Find {
        #[command(subcommand)]
        what: FindCommand,
    },
    /// Render a document.
    Export {
        format: ExportFormat,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Triangle with N horizontal lines.
    Tn { n: u32 },
    /// Sierpiński gasket graph of stage N.
    Sg { n: u32 },
    /// Maximum subdivision of the triangle with N lines.
    An { n: u32 },
    /// One of H, K, Kprime, A, Aprime, Adoubleprime.
    Named { name: String },
}

#[derive(Debug, Subcommand)]
enum OrientCommand {
    /// Smart orientation of a boundary subdivision.
    Smart {
        /// Templates per cell, e.g. `Down(1,0)=b,Up(1,2)=A`.
        #[arg(long, conflicts_with = "sweep")]
        choices: Option<String>,
        /// Check every licensed template assignment instead of printing one.
        #[arg(long)]
        sweep: bool,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Theorem,
    Search,
    Both,
}

#[derive(Debug, Subcommand)]
enum CheckCommand {
    /// Whether an oriented document is semi-transitive.
    SemiTransitive {
        #[command(flatten)]
        input: Input,
    },
    /// Whether the graph is word-representable.
    WordRepresentable {
        /// `theorem` needs a grid or subdivided document; defaults to it
        /// there and to `search` otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
enum WordCommand {
    /// The graph a word represents.
    Graph { word: String },
    /// Whether a word represents the document's graph.
    Check {
        word: String,
        #[command(flatten)]
        input: Input,
    },
    /// Search for a K-uniform word representing the document's graph.
    Find {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
enum FindCommand {
    /// An induced copy of the seven-vertex obstruction A″.
    Obstruction {
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Svg,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{source_name}: {error}")]
    Document { source_name: String, error: DocError },
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Inconsistent(_) => EXIT_INCONSISTENT,
            _ => EXIT_USAGE,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Splits on commas outside parentheses.
fn split_list(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.retain(|p| !p.is_empty());
    parts
}

fn parse_cell(s: &str) -> Result<CellRef, CliError> {
    s.parse().map_err(|_| usage(format!("malformed cell {s:?}")))
}

fn parse_choices(s: &str) -> Result<TemplateChoice, CliError> {
    split_list(s)
        .into_iter()
        .map(|item| {
            let (cell, t) = item
                .rsplit_once('=')
                .ok_or_else(|| usage(format!("expected CELL=TEMPLATE, got {item:?}")))?;
            let mut chars = t.trim().chars();
            let template = match (chars.next().and_then(CellTemplate::from_symbol), chars.next()) {
                (Some(t), None) => t,
                _ => return Err(usage(format!("unknown template {t:?} (one of A B C a b c)"))),
            };
            Ok((parse_cell(cell)?, template))
        })
        .collect()
}

/// Comma-separated tokens, or one letter per character when there is no
/// comma.
pub fn parse_word(s: &str) -> Result<Word<Label>, CliError> {
    let tokens: Vec<String> = if s.contains(',') {
        s.split(',').map(|t| t.trim().to_string()).collect()
    } else {
        s.trim().chars().map(String::from).collect()
    };
    if tokens.is_empty() || tokens.iter().any(String::is_empty) {
        return Err(usage(format!("malformed word {s:?}")));
    }
    let letters = tokens
        .iter()
        .map(|t| t.parse::<Label>().map_err(|e| usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    Ok(Word::new(letters))
}

/// Juxtaposed letters when all are single characters, commas otherwise.
pub fn format_word(w: &Word<Label>) -> String {
    if w.letters().iter().all(|l| l.as_str().chars().count() == 1) {
        w.letters().iter().map(Label::as_str).collect()
    } else {
        w.to_string()
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, input: &Input) -> Result<GraphDocument, CliError> {
        let (name, text) = match &input.file {
            Some(path) => (path.display().to_string(), std::fs::read_to_string(path)?),
            None => {
                let mut text = String::new();
                self.stdin.read_to_string(&mut text)?;
                ("<stdin>".to_string(), text)
            }
        };
        GraphDocument::parse(&text).map_err(|error| CliError::Document {
            source_name: name,
            error,
        })
    }

    fn emit(&mut self, doc: &GraphDocument) -> Result<(), CliError> {
        self.out.write_all(doc.emit().as_bytes())?;
        Ok(())
    }
}

fn subdivision_of(doc: &GraphDocument) -> Result<SubdividedGraph, CliError> {
    match doc.kind {
        DocKind::Grid | DocKind::Subdivided => doc
            .subdivision()
            .ok_or_else(|| usage("document does not describe a subdivision")),
        _ => Err(usage(format!(
            "expected a grid or subdivided document, got kind {}",
            doc.kind.name()
        ))),
    }
}

fn named_document(name: Named) -> GraphDocument {
    let ng = named(name);
    let doc = match ng.subdivided() {
        Some(sg) => GraphDocument::from_subdivided(sg),
        None => GraphDocument::from_grid(ng.base()),
    };
    doc.with_labels(ng.labels().iter().map(|(l, v)| (l.as_str(), Label::from(*v))))
}

fn generate(family: &GenCommand) -> Result<GraphDocument, CliError> {
    let bad = |e: generators::GeneratorError| usage(e.to_string());
    Ok(match family {
        GenCommand::Tn { n } => GraphDocument::from_grid(&generators::triangle(*n).map_err(bad)?),
        GenCommand::Sg { n } => GraphDocument::from_grid(&generators::sierpinski(*n).map_err(bad)?),
        GenCommand::An { n } => GraphDocument::from_subdivided(&generators::an(*n).map_err(bad)?),
        GenCommand::Named { name } => named_document(name.parse().map_err(bad)?),
    })
}

fn subdivide(doc: GraphDocument, all_boundary: bool, cells: Option<&str>) -> Result<GraphDocument, CliError> {
    let sg = subdivision_of(&doc)?;
    let mut chosen = sg.subdivided_cells().clone();
    if all_boundary {
        chosen.extend(sg.base().boundary_cells());
    }
    if let Some(list) = cells {
        for c in split_list(list) {
            chosen.insert(parse_cell(c)?);
        }
    }
    let next = SubdividedGraph::new(sg.base().clone(), chosen).map_err(|e| usage(e.to_string()))?;
    let mut out = if next.subdivided_cells().is_empty() {
        GraphDocument::from_grid(next.base())
    } else {
        GraphDocument::from_subdivided(&next)
    };
    out.labels = doc.labels;
    Ok(out)
}

fn classify(doc: &GraphDocument, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = doc
        .tri_grid()
        .ok_or_else(|| usage("classify needs a grid, subdivided or grid-derived oriented document"))?;
    for &e in g.edges() {
        match g.classify_edge(e).expect("edge of the graph") {
            EdgeKind::Interior => writeln!(out, "edge {e} interior")?,
            EdgeKind::Boundary => writeln!(out, "edge {e} boundary {}", g.boundary_type(e).expect("boundary"))?,
        }
    }
    for &c in g.belonging_cells() {
        match g.classify_cell(c).expect("belonging cell") {
            CellKind::Interior => writeln!(out, "cell {c} interior")?,
            CellKind::Boundary => writeln!(out, "cell {c} boundary {}", g.property_set(c).expect("belongs"))?,
        }
    }
    Ok(EXIT_OK)
}

fn smart_error(e: SmartError) -> Result<i32, CliError> {
    match e {
        SmartError::InteriorSubdivided(_) => Err(usage(format!("no smart orientation: {e}"))),
        other => Err(usage(other.to_string())),
    }
}

fn orient_smart(io: &mut Io, doc: GraphDocument, choices: Option<&str>, sweep: bool) -> Result<i32, CliError> {
    let sg = subdivision_of(&doc)?;
    if sweep {
        let all = match Assignments::new(&sg) {
            Ok(all) => all,
            Err(e) => return smart_error(e),
        };
        let total = all.total();
        for choice in all {
            let d = smart_orient(&sg, Some(&choice)).expect("licensed assignment");
            if !d.is_semi_transitive() {
                let listed: Vec<String> = choice.iter().map(|(c, t)| format!("{c}={t}")).collect();
                writeln!(io.out, "not semi-transitive under {}", listed.join(","))?;
                return Ok(EXIT_NEGATIVE);
            }
        }
        writeln!(io.out, "{total} template assignments, all semi-transitive")?;
        return Ok(EXIT_OK);
    }
    let requested = choices.map(parse_choices).transpose()?;
    let resolved = match resolve_choice(&sg, requested.as_ref()) {
        Ok(r) => r,
        Err(e) => return smart_error(e),
    };
    let d = smart_orient(&sg, Some(&resolved)).expect("resolved choice");
    let templates: BTreeMap<CellRef, CellTemplate> = resolved.iter().collect();
    let mut out = GraphDocument::from_oriented(&d, Some((&sg, &templates)));
    out.labels = doc.labels;
    io.emit(&out)?;
    Ok(EXIT_OK)
}

fn path_text(path: &[Label]) -> String {
    path.iter().map(Label::as_str).collect::<Vec<_>>().join(" -> ")
}

fn check_semi_transitive(doc: &GraphDocument, out: &mut dyn Write) -> Result<i32, CliError> {
    let d = doc
        .oriented()
        .ok_or_else(|| usage(format!("expected an oriented document, got kind {}", doc.kind.name())))?;
    if let Some(mut cycle) = d.find_cycle() {
        cycle.push(cycle[0].clone());
        writeln!(out, "not semi-transitive: directed cycle {}", path_text(&cycle))?;
        return Ok(EXIT_NEGATIVE);
    }
    match d.find_shortcut().expect("acyclic") {
        Some(w) => {
            let (a, b) = w.chord();
            writeln!(
                out,
                "not semi-transitive: shortcut {} with arc {a} -> {b} but no arc {} -> {}",
                path_text(&w.path),
                w.missing.0,
                w.missing.1
            )?;
            Ok(EXIT_NEGATIVE)
        }
        None => {
            writeln!(out, "semi-transitive")?;
            Ok(EXIT_OK)
        }
    }
}

fn search_line(result: &SearchResult<impl Clone>, budget: u64) -> (&'static str, Option<bool>, String) {
    match result {
        SearchResult::Found(_) => ("search", Some(true), "semi-transitive orientation found".into()),
        SearchResult::Exhausted => ("search", Some(false), "no semi-transitive orientation".into()),
        SearchResult::BudgetExceeded => ("search", None, format!("budget of {budget} exhausted")),
    }
}

fn verdict_exit(verdict: Option<bool>) -> i32 {
    match verdict {
        Some(true) => EXIT_OK,
        Some(false) => EXIT_NEGATIVE,
        None => EXIT_BUDGET,
    }
}

fn verdict_word(verdict: Option<bool>) -> &'static str {
    match verdict {
        Some(true) => "word-representable",
        Some(false) => "not word-representable",
        None => "inconclusive",
    }
}

fn characterization_reason(sg: &SubdividedGraph) -> String {
    match sg.interior_subdivided_cells().next() {
        Some(c) => format!("interior cell {c} is subdivided"),
        None => "no interior cell is subdivided".to_string(),
    }
}

fn check_word_representable(
    doc: &GraphDocument,
    method: Option<Method>,
    budget: u64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let gridded = matches!(doc.kind, DocKind::Grid | DocKind::Subdivided);
    let method = method.unwrap_or(if gridded { Method::Theorem } else { Method::Search });
    match method {
        Method::Theorem => {
            let sg = subdivision_of(doc)?;
            let verdict = sg.is_word_representable();
            writeln!(out, "{}: {}", verdict_word(Some(verdict)), characterization_reason(&sg))?;
            Ok(verdict_exit(Some(verdict)))
        }
        Method::Search => {
            let outcome = find_semi_transitive_orientation(&doc.graph(), budget);
            let (_, verdict, text) = search_line(&outcome.result, budget);
            writeln!(out, "{}: {text}", verdict_word(verdict))?;
            Ok(verdict_exit(verdict))
        }
        Method::Both => {
            let sg = subdivision_of(doc)?;
            let r = cross_validate(&sg, budget);
            let (_, _, search_text) = search_line(&r.search.result, budget);
            let obstruction_text = match r.obstruction {
                MatchOutcome::Found(_) => "induced A″ found".to_string(),
                MatchOutcome::Absent => "no induced A″".to_string(),
                MatchOutcome::BudgetExceeded => format!("obstruction search exhausted its budget of {budget}"),
            };
            let details = format!("{}; {search_text}; {obstruction_text}", characterization_reason(&sg));
            match r.consistency {
                Consistency::Inconsistent => Err(CliError::Inconsistent(format!(
                    "the deciders disagree: {details}"
                ))),
                Consistency::Inconclusive => {
                    writeln!(out, "inconclusive: {details}")?;
                    Ok(EXIT_BUDGET)
                }
                Consistency::Consistent => {
                    writeln!(out, "{}: {details}", verdict_word(Some(r.characterization)))?;
                    Ok(verdict_exit(Some(r.characterization)))
                }
            }
        }
    }
}

fn find_obstruction(doc: &GraphDocument, budget: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    let ng = named(Named::ADoublePrime);
    let pattern: Graph<String> = ng
        .graph()
        .map_labels(|v| ng.label_of(*v).expect("every vertex labelled").to_string())
        .expect("injective");
    let host = doc.graph();
    match find_induced_pattern(&pattern, &host, budget) {
        MatchOutcome::Found(m) => {
            writeln!(out, "induced A″ found")?;
            for (i, &h) in m.iter().enumerate() {
                writeln!(out, "{} -> {}", pattern.vertex(i), host.vertex(h))?;
            }
            Ok(EXIT_OK)
        }
        MatchOutcome::Absent => {
            writeln!(out, "no induced A″")?;
            Ok(EXIT_NEGATIVE)
        }
        MatchOutcome::BudgetExceeded => {
            writeln!(out, "inconclusive: budget of {budget} exhausted")?;
            Ok(EXIT_BUDGET)
        }
    }
}

fn word_command(io: &mut Io, what: &WordCommand) -> Result<i32, CliError> {
    match what {
        WordCommand::Graph { word } => {
            let w = parse_word(word)?;
            io.emit(&GraphDocument::from_generic(&w.graph()))?;
            Ok(EXIT_OK)
        }
        WordCommand::Check { word, input } => {
            let w = parse_word(word)?;
            let doc = io.read(input)?;
            match w.represents(&doc.graph()) {
                Ok(true) => {
                    writeln!(io.out, "represents the graph")?;
                    Ok(EXIT_OK)
                }
                Ok(false) => {
                    writeln!(io.out, "does not represent the graph")?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(WordError::AlphabetMismatch) => {
                    writeln!(io.out, "does not represent the graph: {}", WordError::AlphabetMismatch)?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(usage(e.to_string())),
            }
        }
        WordCommand::Find { k, budget, input } => {
            let doc = io.read(input)?;
            match find_k_uniform_representant(&doc.graph(), *k, budget.budget) {
                Ok(WordSearch::Found(w)) => {
                    writeln!(io.out, "{}", format_word(&w))?;
                    Ok(EXIT_OK)
                }
                Ok(WordSearch::Exhausted) => {
                    writeln!(io.out, "no {k}-uniform representant")?;
                    Ok(EXIT_NEGATIVE)
                }
                Ok(WordSearch::BudgetExceeded) => {
                    writeln!(io.out, "inconclusive: budget of {} exhausted", budget.budget)?;
                    Ok(EXIT_BUDGET)
                }
                Err(e) => Err(usage(e.to_string())),
            }
        }
    }
}

fn dispatch(cli: Cli, io: &mut Io) -> Result<i32, CliError> {
    match cli.command {
        Command::Gen { family } => {
            io.emit(&generate(&family)?)?;
            Ok(EXIT_OK)
        }
        Command::Subdivide {
            all_boundary,
            cells,
            input,
        } => {
            let doc = io.read(&input)?;
            io.emit(&subdivide(doc, all_boundary, cells.as_deref())?)?;
            Ok(EXIT_OK)
        }
        Command::Classify { input } => {
            let doc = io.read(&input)?;
            classify(&doc, io.out)
        }
        Command::Orient {
            how: OrientCommand::Smart { choices, sweep, input },
        } => {
            let doc = io.read(&input)?;
            orient_smart(io, doc, choices.as_deref(), sweep)
        }
        Command::Check { what } => match what {
            CheckCommand::SemiTransitive { input } => {
                let doc = io.read(&input)?;
                check_semi_transitive(&doc, io.out)
            }
            CheckCommand::WordRepresentable { method, budget, input } => {
                let doc = io.read(&input)?;
                check_word_representable(&doc, method, budget.budget, io.out)
            }
        },
        Command::Word { what } => word_command(io, &what),
        Command::Find {
            what: FindCommand::Obstruction { budget, input },
        } => {
            let doc = io.read(&input)?;
            find_obstruction(&doc, budget.budget, io.out)
        }
        Command::Export { format, input } => {
            let doc = io.read(&input)?;
            let text = match format {
                ExportFormat::Dot => emit_dot(&doc),
                ExportFormat::Svg => emit_svg(&doc),
            };
            io.out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs one command line; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return e.exit_code();
        }
    };
    let mut io = Io { stdin, out };
    let code = match dispatch(cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "trigrid: {e}");
            e.exit_code()
        }
    };
    let _ = io.out.flush();
    code
}
