use std::fmt::Write as _;

use thiserror::Error;

use super::ColoredInstance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; for errors only detectable at end of input this
    /// is the last line of the file.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header `p bfsp <n> <m> <c>`")]
    MissingHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed line: {0}")]
    MalformedLine(String),
    #[error("unknown record type `{0}`")]
    UnknownRecord(String),
    #[error("vertex id {0} is outside 1..n")]
    DanglingVertex(usize),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(usize),
    #[error("vertex {0} never declared")]
    MissingVertex(usize),
    #[error("color {color} outside 1..{num_colors}")]
    ColorOutOfRange { color: usize, num_colors: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("header announces {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("missing terminal line `t <s> <t>`")]
    MissingTerminal,
    #[error("content after the terminal line")]
    TrailingContent,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn numbers(line_no: usize, fields: &[&str], expected: usize, raw: &str) -> Result<Vec<usize>, ParseError> {
    if fields.len() != expected {
        return Err(err(line_no, ParseErrorKind::MalformedLine(raw.to_string())));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| err(line_no, ParseErrorKind::MalformedLine(raw.to_string())))
        })
        .collect()
}

/// Parses the line-oriented instance format:
///
/// ```text
/// p bfsp <n> <m> <c>
/// v <id> <color>      (n lines)
/// e <u> <v>           (m lines)
/// t <s> <t>
/// ```
///
/// `#` starts a comment; blank lines are ignored. Vertex and edge lines may
/// be interleaved, but the terminal line must come last.
pub fn parse_instance(text: &str) -> Result<ColoredInstance, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut colors: Vec<Option<usize>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_edges = std::collections::HashSet::new();
    let mut terminals: Option<(usize, usize)> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if terminals.is_some() {
            return Err(err(line_no, ParseErrorKind::TrailingContent));
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some((n, m, c)) = header else {
            if fields.first() != Some(&"p") {
                return Err(err(line_no, ParseErrorKind::MissingHeader));
            }
            if fields.len() != 5 || fields[1] != "bfsp" {
                return Err(err(line_no, ParseErrorKind::MalformedHeader(content.to_string())));
            }
            let nums = numbers(line_no, &fields[2..], 3, content)
                .map_err(|_| err(line_no, ParseErrorKind::MalformedHeader(content.to_string())))?;
            if nums[0] == 0 || nums[2] == 0 {
                return Err(err(
                    line_no,
                    ParseErrorKind::MalformedHeader("need n >= 1 and c >= 1".to_string()),
                ));
            }
            header = Some((nums[0], nums[1], nums[2]));
            colors = vec![None; nums[0]];
            continue;
        };
        let vertex = |id: usize| {
            if id == 0 || id > n {
                Err(err(line_no, ParseErrorKind::DanglingVertex(id)))
            } else {
                Ok(id - 1)
            }
        };
        match fields[0] {
            "v" => {
                let nums = numbers(line_no, &fields[1..], 2, content)?;
                let v = vertex(nums[0])?;
                if nums[1] == 0 || nums[1] > c {
                    return Err(err(
                        line_no,
                        ParseErrorKind::ColorOutOfRange {
                            color: nums[1],
                            num_colors: c,
                        },
                    ));
                }
                if colors[v].is_some() {
                    return Err(err(line_no, ParseErrorKind::DuplicateVertex(nums[0])));
                }
                colors[v] = Some(nums[1] - 1);
            }
            "e" => {
                let nums = numbers(line_no, &fields[1..], 2, content)?;
                let (u, v) = (vertex(nums[0])?, vertex(nums[1])?);
                if u == v {
                    return Err(err(line_no, ParseErrorKind::SelfLoop(nums[0])));
                }
                let key = (u.min(v), u.max(v));
                if !seen_edges.insert(key) {
                    return Err(err(line_no, ParseErrorKind::DuplicateEdge(key.0 + 1, key.1 + 1)));
                }
                edges.push(key);
            }
            "t" => {
                let nums = numbers(line_no, &fields[1..], 2, content)?;
                terminals = Some((vertex(nums[0])?, vertex(nums[1])?));
                if edges.len() != m {
                    return Err(err(
                        line_no,
                        ParseErrorKind::EdgeCountMismatch {
                            expected: m,
                            found: edges.len(),
                        },
                    ));
                }
                if let Some(missing) = colors.iter().position(Option::is_none) {
                    return Err(err(line_no, ParseErrorKind::MissingVertex(missing + 1)));
                }
            }
            "p" => return Err(err(line_no, ParseErrorKind::MalformedHeader("second header".into()))),
            other => return Err(err(line_no, ParseErrorKind::UnknownRecord(other.to_string()))),
        }
    }

    let Some((_, _, c)) = header else {
        return Err(err(last_line.max(1), ParseErrorKind::MissingHeader));
    };
    let Some((s, t)) = terminals else {
        return Err(err(last_line.max(1), ParseErrorKind::MissingTerminal));
    };
    let colors: Vec<usize> = colors.into_iter().map(|c| c.expect("checked")).collect();
    Ok(ColoredInstance::new(colors, c, &edges, s, t).expect("parser validated every invariant"))
}

/// Canonical text form: vertex lines by id, edge lines lexicographic with
/// `u < v`, 1-based throughout.
pub fn serialize_instance(inst: &ColoredInstance) -> String {
    let mut out = String::new();
    writeln!(out, "p bfsp {} {} {}", inst.n(), inst.m(), inst.num_colors()).unwrap();
    for v in 0..inst.n() {
        writeln!(out, "v {} {}", v + 1, inst.color(v) + 1).unwrap();
    }
    for (u, v) in inst.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    writeln!(out, "t {} {}", inst.s() + 1, inst.t() + 1).unwrap();
    out
}
