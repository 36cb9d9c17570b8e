//! Text formats for instances and solutions.
//!
//! Instance files are line-based UTF-8 with `#` comments:
//!
//! ```text
//! p <n> <m>          vertex and edge counts; vertices are 1..=n
//! e <u> <v>          one line per edge
//! s <d1> ... <dL>    the target degree sequence (possibly empty)
//! o <ops>            allowed operations (vd, ed, ea), with
//! k <budget>         a combined budget; or instead of o/k:
//! b <kvd> <ked> <kea>  one budget per operation
//! ```
//!
//! Solution files start with `YES` (followed by `vd v`, `ed u v`, `ea u v`
//! lines) or consist of the single line `NO`.

use degseq::{DegreeSequence, Edge, EditSet, ExtendedInstance, Graph, Instance, OpSet};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Either instance flavor, as read from a file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParsedInstance {
    Simple(Instance),
    Extended(ExtendedInstance),
}

impl ParsedInstance {
    pub fn graph(&self) -> &Graph {
        match self {
            ParsedInstance::Simple(i) => &i.graph,
            ParsedInstance::Extended(i) => &i.graph,
        }
    }

    pub fn sigma(&self) -> &DegreeSequence {
        match self {
            ParsedInstance::Simple(i) => &i.sigma,
            ParsedInstance::Extended(i) => &i.sigma,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseErrorKind {
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("malformed integer `{0}`")]
    BadInteger(String),
    #[error("bad header counts")]
    HeaderArity,
    #[error("directive before the `p` header")]
    MissingHeader,
    #[error("duplicate `p` header")]
    DuplicateHeader,
    #[error("edge endpoints must differ (loop)")]
    LoopEdge,
    #[error("duplicate edge")]
    DuplicateEdge,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("header declares {declared} edges but the file has {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("negative degree in the target sequence")]
    NegativeDegree,
    #[error("duplicate `s` line")]
    DuplicateSigma,
    #[error("unknown operation list `{0}`")]
    UnknownOps(String),
    #[error("both budget modes present (`o`/`k` and `b`)")]
    BothModes,
    #[error("duplicate budget line")]
    DuplicateBudget,
    #[error("missing `s` line")]
    MissingSigma,
    #[error("missing budget (`o` + `k`, or `b`)")]
    MissingMode,
    #[error("expected `YES` or `NO`")]
    BadSolutionHeader,
    #[error("bad solution line")]
    BadSolutionLine,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

fn parse_usize(line: usize, token: &str) -> Result<usize, ParseError> {
    // Negative values are only meaningful as degrees; report them as such.
    if let Some(rest) = token.strip_prefix('-') {
        if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
            return err(line, ParseErrorKind::NegativeDegree);
        }
    }
    token
        .parse::<usize>()
        .map_err(|_| ParseError { line, kind: ParseErrorKind::BadInteger(token.to_string()) })
}

struct RawInstance {
    graph: Option<(Graph, usize, usize)>, // graph, n, declared edge count
    found_edges: usize,
    sigma: Option<DegreeSequence>,
    ops: Option<OpSet>,
    budget: Option<usize>,
    extended: Option<(usize, usize, usize)>,
    header_line: usize,
    last_line: usize,
}

fn parse_lines(text: &str) -> Result<RawInstance, ParseError> {
    let mut raw = RawInstance {
        graph: None,
        found_edges: 0,
        sigma: None,
        ops: None,
        budget: None,
        extended: None,
        header_line: 0,
        last_line: 0,
    };

    for (idx, full_line) in text.lines().enumerate() {
        let line = idx + 1;
        raw.last_line = line;
        let content = full_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if raw.graph.is_some() {
                    return err(line, ParseErrorKind::DuplicateHeader);
                }
                if tokens.len() != 3 {
                    return err(line, ParseErrorKind::HeaderArity);
                }
                let n = parse_usize(line, tokens[1])?;
                let m = parse_usize(line, tokens[2])?;
                raw.graph = Some((Graph::with_vertices(n), n, m));
                raw.header_line = line;
            }
            "e" => {
                let Some((graph, n, _)) = raw.graph.as_mut() else {
                    return err(line, ParseErrorKind::MissingHeader);
                };
                if tokens.len() != 3 {
                    return err(line, ParseErrorKind::HeaderArity);
                }
                let u = parse_usize(line, tokens[1])?;
                let v = parse_usize(line, tokens[2])?;
                for w in [u, v] {
                    if w == 0 || w > *n {
                        return err(line, ParseErrorKind::VertexOutOfRange(w));
                    }
                }
                if u == v {
                    return err(line, ParseErrorKind::LoopEdge);
                }
                if graph.has_edge(u, v) {
                    return err(line, ParseErrorKind::DuplicateEdge);
                }
                graph.add_edge(u, v);
                raw.found_edges += 1;
            }
            "s" => {
                if raw.graph.is_none() {
                    return err(line, ParseErrorKind::MissingHeader);
                }
                if raw.sigma.is_some() {
                    return err(line, ParseErrorKind::DuplicateSigma);
                }
                let mut values = Vec::with_capacity(tokens.len() - 1);
                for token in &tokens[1..] {
                    values.push(parse_usize(line, token)?);
                }
                raw.sigma = Some(DegreeSequence::from_values(values));
            }
            "o" => {
                if raw.graph.is_none() {
                    return err(line, ParseErrorKind::MissingHeader);
                }
                if raw.extended.is_some() {
                    return err(line, ParseErrorKind::BothModes);
                }
                if raw.ops.is_some() {
                    return err(line, ParseErrorKind::DuplicateBudget);
                }
                let joined = tokens[1..].join(",");
                let ops = joined
                    .parse::<OpSet>()
                    .map_err(|_| ParseError { line, kind: ParseErrorKind::UnknownOps(joined) })?;
                raw.ops = Some(ops);
            }
            "k" => {
                if raw.graph.is_none() {
                    return err(line, ParseErrorKind::MissingHeader);
                }
                if raw.extended.is_some() {
                    return err(line, ParseErrorKind::BothModes);
                }
                if raw.budget.is_some() {
                    return err(line, ParseErrorKind::DuplicateBudget);
                }
                if tokens.len() != 2 {
                    return err(line, ParseErrorKind::HeaderArity);
                }
                raw.budget = Some(parse_usize(line, tokens[1])?);
            }
            "b" => {
                if raw.graph.is_none() {
                    return err(line, ParseErrorKind::MissingHeader);
                }
                if raw.ops.is_some() || raw.budget.is_some() {
                    return err(line, ParseErrorKind::BothModes);
                }
                if raw.extended.is_some() {
                    return err(line, ParseErrorKind::DuplicateBudget);
                }
                if tokens.len() != 4 {
                    return err(line, ParseErrorKind::HeaderArity);
                }
                raw.extended = Some((
                    parse_usize(line, tokens[1])?,
                    parse_usize(line, tokens[2])?,
                    parse_usize(line, tokens[3])?,
                ));
            }
            other => return err(line, ParseErrorKind::UnknownDirective(other.to_string())),
        }
    }
    Ok(raw)
}

/// Parses a full instance file.
pub fn parse_instance(text: &str) -> Result<ParsedInstance, ParseError> {
    let raw = parse_lines(text)?;
    let eof = raw.last_line + 1;
    let Some((graph, _, declared)) = raw.graph else {
        return err(eof, ParseErrorKind::MissingHeader);
    };
    if declared != raw.found_edges {
        return err(
            raw.header_line,
            ParseErrorKind::EdgeCountMismatch { declared, found: raw.found_edges },
        );
    }
    let Some(sigma) = raw.sigma else {
        return err(eof, ParseErrorKind::MissingSigma);
    };
    match (raw.ops, raw.budget, raw.extended) {
        (Some(ops), Some(budget), None) => {
            Ok(ParsedInstance::Simple(Instance::new(graph, sigma, ops, budget)))
        }
        (None, None, Some((kvd, ked, kea))) => {
            Ok(ParsedInstance::Extended(ExtendedInstance::new(graph, sigma, kvd, ked, kea)))
        }
        (None, None, None) => err(eof, ParseErrorKind::MissingMode),
        _ => err(eof, ParseErrorKind::MissingMode),
    }
}

/// Parses a graph-only file (`p` and `e` lines).
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let raw = parse_lines(text)?;
    let eof = raw.last_line + 1;
    if raw.sigma.is_some() || raw.ops.is_some() || raw.budget.is_some() || raw.extended.is_some() {
        return err(eof, ParseErrorKind::UnknownDirective("graph file has instance lines".into()));
    }
    let Some((graph, _, declared)) = raw.graph else {
        return err(eof, ParseErrorKind::MissingHeader);
    };
    if declared != raw.found_edges {
        return err(
            raw.header_line,
            ParseErrorKind::EdgeCountMismatch { declared, found: raw.found_edges },
        );
    }
    Ok(graph)
}

/// Renumbers arbitrary vertex ids to `1..=n` in ascending order. Returns the
/// new graph and the new-to-old id map.
pub fn renumber(graph: &Graph) -> (Graph, BTreeMap<usize, usize>) {
    let ids: Vec<usize> = graph.vertices().collect();
    let to_new: BTreeMap<usize, usize> =
        ids.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
    let mut out = Graph::with_vertices(ids.len());
    for e in graph.edges() {
        let (u, v) = e.endpoints();
        out.add_edge(to_new[&u], to_new[&v]);
    }
    (out, ids.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect())
}

fn write_graph(out: &mut String, graph: &Graph) {
    use fmt::Write;
    let n = graph.vertex_count();
    debug_assert!(
        graph.vertices().zip(1..=n).all(|(v, want)| v == want),
        "formatting requires vertices 1..=n; renumber first"
    );
    writeln!(out, "p {} {}", n, graph.edge_count()).unwrap();
    for e in graph.edges() {
        let (u, v) = e.endpoints();
        writeln!(out, "e {u} {v}").unwrap();
    }
}

fn write_sigma(out: &mut String, sigma: &DegreeSequence) {
    use fmt::Write;
    out.push('s');
    for d in sigma.values() {
        write!(out, " {d}").unwrap();
    }
    out.push('\n');
}

/// Serializes an instance; the graph must use vertex ids `1..=n`.
pub fn format_instance(inst: &ParsedInstance) -> String {
    let mut out = String::new();
    use fmt::Write;
    match inst {
        ParsedInstance::Simple(i) => {
            write_graph(&mut out, &i.graph);
            write_sigma(&mut out, &i.sigma);
            writeln!(out, "o {}", i.ops).unwrap();
            writeln!(out, "k {}", i.budget).unwrap();
        }
        ParsedInstance::Extended(i) => {
            write_graph(&mut out, &i.graph);
            write_sigma(&mut out, &i.sigma);
            writeln!(out, "b {} {} {}", i.budget_vd, i.budget_ed, i.budget_ea).unwrap();
        }
    }
    out
}

/// Parses a solution file; `None` encodes `NO`.
pub fn parse_solution(text: &str) -> Result<Option<EditSet>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((first_line, header)) = lines.next() else {
        return err(1, ParseErrorKind::BadSolutionHeader);
    };
    match header {
        "NO" => Ok(None),
        "YES" => {
            let mut edit = EditSet::empty();
            for (line, content) in lines {
                let tokens: Vec<&str> = content.split_whitespace().collect();
                match (tokens.first().copied(), tokens.len()) {
                    (Some("vd"), 2) => {
                        edit.deleted_vertices.insert(parse_usize(line, tokens[1])?);
                    }
                    (Some("ed"), 3) => {
                        let u = parse_usize(line, tokens[1])?;
                        let v = parse_usize(line, tokens[2])?;
                        if u == v {
                            return err(line, ParseErrorKind::LoopEdge);
                        }
                        edit.deleted_edges.insert(Edge::new(u, v));
                    }
                    (Some("ea"), 3) => {
                        let u = parse_usize(line, tokens[1])?;
                        let v = parse_usize(line, tokens[2])?;
                        if u == v {
                            return err(line, ParseErrorKind::LoopEdge);
                        }
                        edit.added_edges.insert(Edge::new(u, v));
                    }
                    _ => return err(line, ParseErrorKind::BadSolutionLine),
                }
            }
            Ok(Some(edit))
        }
        _ => err(first_line, ParseErrorKind::BadSolutionHeader),
    }
}

/// Serializes a solution; `None` encodes `NO`.
pub fn format_solution(solution: Option<&EditSet>) -> String {
    let Some(edit) = solution else {
        return "NO\n".to_string();
    };
    let mut out = String::from("YES\n");
    use fmt::Write;
    for &v in &edit.deleted_vertices {
        writeln!(out, "vd {v}").unwrap();
    }
    for e in &edit.deleted_edges {
        let (u, v) = e.endpoints();
        writeln!(out, "ed {u} {v}").unwrap();
    }
    for e in &edit.added_edges {
        let (u, v) = e.endpoints();
        writeln!(out, "ea {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "p 3 3\ne 1 2\ne 2 3\ne 1 3\ns 1 1 0\no ed\nk 2\n";

    #[test]
    fn parses_simple_instance() {
        let ParsedInstance::Simple(inst) = parse_instance(TRIANGLE).unwrap() else {
            panic!("expected the combined-budget flavor");
        };
        assert_eq!(inst.graph, Graph::complete(3));
        assert_eq!(inst.sigma, DegreeSequence::from_values(vec![1, 1, 0]));
        assert_eq!(inst.ops, OpSet::ED);
        assert_eq!(inst.budget, 2);
    }

    #[test]
    fn parses_extended_instance() {
        let text = TRIANGLE.replace("o ed\nk 2\n", "b 0 2 0\n");
        let ParsedInstance::Extended(inst) = parse_instance(&text).unwrap() else {
            panic!("expected the per-operation flavor");
        };
        assert_eq!((inst.budget_vd, inst.budget_ed, inst.budget_ea), (0, 2, 0));
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let loopy = "p 2 1\ne 1 1\ns 0 0\no ed\nk 0\n";
        assert_eq!(
            parse_instance(loopy).unwrap_err(),
            ParseError { line: 2, kind: ParseErrorKind::LoopEdge }
        );
        let dup = "p 2 2\ne 1 2\ne 2 1\ns 1 1\no ed\nk 0\n";
        assert_eq!(
            parse_instance(dup).unwrap_err(),
            ParseError { line: 3, kind: ParseErrorKind::DuplicateEdge }
        );
        let out_of_range = "p 2 1\ne 1 5\ns 1 1\no ed\nk 0\n";
        assert_eq!(
            parse_instance(out_of_range).unwrap_err(),
            ParseError { line: 2, kind: ParseErrorKind::VertexOutOfRange(5) }
        );
        let both = "p 1 0\ns 0\no ed\nk 0\nb 1 0 0\n";
        assert_eq!(
            parse_instance(both).unwrap_err(),
            ParseError { line: 5, kind: ParseErrorKind::BothModes }
        );
        let negative = "p 1 0\ns -1\nb 0 0 0\n";
        assert_eq!(
            parse_instance(negative).unwrap_err(),
            ParseError { line: 2, kind: ParseErrorKind::NegativeDegree }
        );
        let mismatch = "p 3 2\ne 1 2\ns 1 1 0\no ed\nk 1\n";
        assert_eq!(
            parse_instance(mismatch).unwrap_err(),
            ParseError { line: 1, kind: ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 } }
        );
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a triangle\n\np 3 3 # counts\ne 1 2\ne 2 3\ne 1 3\ns 1 1 0\no ed\nk 2\n";
        assert!(parse_instance(text).is_ok());
    }

    #[test]
    fn instance_round_trip() {
        let parsed = parse_instance(TRIANGLE).unwrap();
        let text = format_instance(&parsed);
        assert_eq!(parse_instance(&text).unwrap(), parsed);

        let ext = TRIANGLE.replace("o ed\nk 2\n", "b 1 2 3\n");
        let parsed = parse_instance(&ext).unwrap();
        assert_eq!(parse_instance(&format_instance(&parsed)).unwrap(), parsed);
    }

    #[test]
    fn empty_sigma_line_is_valid() {
        let text = "p 1 0\ns\nb 1 0 0\n";
        let parsed = parse_instance(text).unwrap();
        assert!(parsed.sigma().is_empty());
    }

    #[test]
    fn solution_round_trip() {
        let edit = EditSet {
            deleted_vertices: [4].into_iter().collect(),
            deleted_edges: [Edge::new(1, 2)].into_iter().collect(),
            added_edges: [Edge::new(2, 3)].into_iter().collect(),
        };
        let text = format_solution(Some(&edit));
        assert_eq!(parse_solution(&text).unwrap(), Some(edit));
        assert_eq!(parse_solution("NO\n").unwrap(), None);
        assert!(parse_solution("MAYBE\n").is_err());
        assert!(parse_solution("YES\nxy 1 2\n").is_err());
    }

    #[test]
    fn renumber_compacts_ids() {
        let mut g = Graph::new();
        for v in [3, 7, 9] {
            g.add_vertex(v);
        }
        g.add_edge(3, 9);
        let (out, map) = renumber(&g);
        assert_eq!(out.vertex_count(), 3);
        assert!(out.has_edge(1, 3));
        assert_eq!(map[&1], 3);
        assert_eq!(map[&3], 9);
    }
}
