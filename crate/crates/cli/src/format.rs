//! The signed-graph text format.
//!
//! ```text
//! # comment lines start with '#'
//! n 3
//! e 0 1 +
//! e 1 2 -
//! m + - -
//! ```
//!
//! Exactly one `n` line precedes all `e` lines; endpoints are 0-indexed;
//! the optional `m` line attaches an explicit marking (entries `+`, `-`,
//! `+1`, or `-1`).
//!
//! TODO: graph6/sparse6 import for unsigned skeletons.

use std::collections::HashSet;
use std::fmt;

use signed_corona::{Marking, Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number; 0 for file-level problems.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn parse_sign(token: &str) -> Option<Sign> {
    match token {
        "+" | "+1" => Some(Sign::Plus),
        "-" | "-1" => Some(Sign::Minus),
        _ => None,
    }
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut marking: Option<Vec<Sign>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let directive = tokens.next().expect("non-empty line has a first token");
        match directive {
            "n" => {
                if order.is_some() {
                    return Err(ParseError::at(lineno, "duplicate 'n' line"));
                }
                let count = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| ParseError::at(lineno, "expected 'n <count>'"))?;
                if tokens.next().is_some() {
                    return Err(ParseError::at(lineno, "expected 'n <count>'"));
                }
                order = Some(count);
            }
            "e" => {
                let n = order
                    .ok_or_else(|| ParseError::at(lineno, "edge line before the 'n' line"))?;
                let bad = || ParseError::at(lineno, "expected 'e u v sign'");
                let u = tokens.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(bad)?;
                let v = tokens.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(bad)?;
                let sign = tokens.next().and_then(parse_sign).ok_or_else(bad)?;
                if tokens.next().is_some() {
                    return Err(bad());
                }
                if u == v {
                    return Err(ParseError::at(lineno, format!("loop edge at vertex {u}")));
                }
                for endpoint in [u, v] {
                    if endpoint >= n {
                        return Err(ParseError::at(
                            lineno,
                            format!("endpoint {endpoint} out of range for order {n}"),
                        ));
                    }
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(ParseError::at(lineno, format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v, sign));
            }
            "m" => {
                let n = order
                    .ok_or_else(|| ParseError::at(lineno, "marking line before the 'n' line"))?;
                if marking.is_some() {
                    return Err(ParseError::at(lineno, "duplicate 'm' line"));
                }
                let marks: Option<Vec<Sign>> = tokens.map(parse_sign).collect();
                let marks = marks
                    .filter(|m| m.len() == n)
                    .ok_or_else(|| {
                        ParseError::at(lineno, format!("expected {n} marks from +1/-1"))
                    })?;
                marking = Some(marks);
            }
            other => {
                return Err(ParseError::at(
                    lineno,
                    format!("unrecognized directive '{other}'"),
                ));
            }
        }
    }

    let n = order.ok_or_else(|| ParseError::at(0, "missing 'n <count>' line"))?;
    let graph = SignedGraph::new(n, edges)
        .map_err(|e| ParseError::at(0, e.to_string()))?;
    match marking {
        Some(marks) => graph
            .with_marking(Marking::new(marks))
            .map_err(|e| ParseError::at(0, e.to_string())),
        None => Ok(graph),
    }
}

pub fn write_graph(g: &SignedGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", g.order()));
    for e in g.edges() {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.sign));
    }
    if let Some(marking) = g.explicit_marking() {
        let marks: Vec<String> = marking.signs().iter().map(Sign::to_string).collect();
        out.push_str(&format!("m {}\n", marks.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_file() {
        let g = parse_graph("# demo\nn 3\ne 0 1 +\ne 1 2 -\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.sign_of(0, 1), Some(Sign::Plus));
        assert_eq!(g.sign_of(1, 2), Some(Sign::Minus));
        assert_eq!(g.explicit_marking(), None);
    }

    #[test]
    fn parses_markings_in_both_spellings() {
        let g = parse_graph("n 2\ne 0 1 -\nm +1 -\n").unwrap();
        assert_eq!(
            g.explicit_marking().unwrap().signs(),
            &[Sign::Plus, Sign::Minus]
        );
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_graph("n 2\ne 0 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.to_string(), "line 2: expected 'e u v sign'");

        let err = parse_graph("e 0 1 +\n").unwrap_err();
        assert_eq!(err.to_string(), "line 1: edge line before the 'n' line");

        let err = parse_graph("n 2\ne 0 5 +\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: endpoint 5 out of range for order 2");

        let err = parse_graph("n 2\ne 0 1 +\ne 1 0 -\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: duplicate edge 1 0");

        let err = parse_graph("# nothing\n").unwrap_err();
        assert_eq!(err.to_string(), "missing 'n <count>' line");

        let err = parse_graph("n 2\nm + -\nm + -\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: duplicate 'm' line");

        let err = parse_graph("n 2\nm +\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: expected 2 marks from +1/-1");

        let err = parse_graph("n 2\nv 0 1 +\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: unrecognized directive 'v'");

        let err = parse_graph("n 2\nn 3\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: duplicate 'n' line");
    }

    #[test]
    fn round_trips_with_markings() {
        let g = parse_graph("n 4\ne 0 2 -\ne 1 3 +\nm - + + -\n").unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);

        let plain = parse_graph("n 3\ne 0 1 +\n").unwrap();
        assert_eq!(parse_graph(&write_graph(&plain)).unwrap(), plain);
    }
}
