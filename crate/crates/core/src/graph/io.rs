//! Text formats: the edge-list format and graph6.
//!
//! Edge list: the first non-empty, non-comment line is the vertex count `n`;
//! every following line is `u v` with `0 ≤ u < v < n`. `#` starts a comment.
//! Duplicate edges are rejected.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = n else {
            if toks.len() != 1 {
                return Err(parse_err(lineno, "expected the vertex count"));
            }
            let count: usize = toks[0]
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad vertex count {:?}", toks[0])))?;
            if count > MAX_VERTICES {
                return Err(Error::ResourceLimit {
                    what: "graph",
                    limit: MAX_VERTICES,
                    actual: count,
                });
            }
            n = Some(count);
            continue;
        };
        if toks.len() != 2 {
            return Err(parse_err(lineno, format!("expected `u v`, got {line:?}")));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("bad vertex {t:?}")))
        };
        let (u, v) = (parse(toks[0])?, parse(toks[1])?);
        if u >= v {
            return Err(parse_err(
                lineno,
                format!("edge {u} {v} must satisfy u < v"),
            ));
        }
        if v >= n {
            return Err(parse_err(
                lineno,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    let n = n.ok_or_else(|| parse_err(0, "missing vertex count"))?;
    Graph::from_edges(n, &edges)
}

/// Canonical edge-list rendering (ends with a newline).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses one graph6 string (an optional `>>graph6<<` header is allowed).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, format!("invalid graph6 byte {b:#04x}")));
    }
    let (n, body) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err(1, "truncated graph6 size"));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(1, "truncated graph6 size"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "graph",
            limit: MAX_VERTICES,
            actual: n,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(parse_err(
            1,
            format!("graph6 body has {} bytes, expected {need}", body.len()),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if (bits..need * 6).any(bit) {
        return Err(parse_err(1, "nonzero graph6 padding"));
    }
    Graph::from_edges(n, &edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Auto-detects the format: a first meaningful line that is a bare integer
/// starts an edge list, anything else is read as a single graph6 string.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut meaningful = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let Some((_, first)) = meaningful.next() else {
        return Err(parse_err(0, "no graph in input"));
    };
    if first.parse::<usize>().is_ok() {
        return parse_edge_list(text);
    }
    if let Some((line, _)) = meaningful.next() {
        return Err(parse_err(line, "expected a single graph6 string"));
    }
    parse_graph6(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_gp, complete, path, Graph};

    #[test]
    fn edge_list_roundtrip_and_comments() {
        let text = "# a path\n\n3\n0 1 # first\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(to_edge_list(&g), "3\n0 1\n1 2\n");
        assert_eq!(
            parse_edge_list(&to_edge_list(&build_gp(1, 2, 0))).unwrap(),
            build_gp(1, 2, 0)
        );
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let cases = [
            ("3\n0 1\n0 1\n", 3),
            ("3\n1 0\n", 2),
            ("3\n0 3\n", 2),
            ("3\n0 1 2\n", 2),
            ("x\n", 1),
            ("# only comment\n\n3 4\n", 3),
            ("3\n0 q\n", 2),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_edge_list("100\n"),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn graph6_known_strings() {
        // standard examples: K4 = "C~", P3 = "Bg", empty on 5 = "D??", K1 = "@"
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
        assert_eq!(to_graph6(&path(3)), "Bg");
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert_eq!(
            parse_graph6("D??").unwrap(),
            Graph::from_edges(5, &[]).unwrap()
        );
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), complete(4));
        // Petersen graph
        let pet = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((pet.n(), pet.edge_count()), (10, 15));
        assert!(pet.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn graph6_long_form_and_errors() {
        let g = complete(63);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C 1").is_err());
        assert!(parse_graph6("Bh").is_err());
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_graph_text("C~\n").unwrap(), complete(4));
        assert_eq!(parse_graph_text("# k2\n2\n0 1\n").unwrap(), complete(2));
        assert!(parse_graph_text("C~\nC~\n").is_err());
        assert!(parse_graph_text("\n# nothing\n").is_err());
    }
}
