//! METIS text format: a header `n m [fmt]` followed by one line per vertex
//! listing 1-indexed neighbors, with a weight after each neighbor when
//! `fmt = 1`. Lines starting with `%` are comments.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use flate2::read::GzDecoder;

use crate::error::ParseError;
use crate::graph::{EdgeWeight, Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetisHeader {
    pub n: usize,
    pub m: u64,
    pub edge_weights: bool,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_header(line_no: usize, line: &str) -> Result<MetisHeader, ParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() < 2 || tokens.len() > 4 {
        return Err(syntax(line_no, "header must be `n m [fmt]`"));
    }
    let n: usize = tokens[0]
        .parse()
        .map_err(|_| syntax(line_no, format!("invalid vertex count `{}`", tokens[0])))?;
    let m: u64 = tokens[1]
        .parse()
        .map_err(|_| syntax(line_no, format!("invalid edge count `{}`", tokens[1])))?;
    if n == 0 {
        return Err(syntax(line_no, "graph must have at least one vertex"));
    }
    if n > NodeId::MAX as usize {
        return Err(syntax(
            line_no,
            format!("{n} vertices exceed the 32-bit id space"),
        ));
    }
    let edge_weights = match tokens.get(2).map(|f| f.trim_start_matches('0')) {
        None | Some("") => false,
        Some("1") => true,
        Some(_) => {
            return Err(syntax(
                line_no,
                format!("unsupported format code `{}` (only 0 and 1)", tokens[2]),
            ))
        }
    };
    Ok(MetisHeader { n, m, edge_weights })
}

/// Parses a METIS graph, rejecting any edge not listed on both endpoints with
/// the same weight.
pub fn parse_metis(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('%'));
    let (header_line, header) = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() => continue,
            Some((i, l)) => break (i, parse_header(i, l)?),
            None => return Err(ParseError::MissingHeader),
        }
    };
    let n = header.n;
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    let mut targets: Vec<NodeId> = Vec::new();
    let mut weights: Vec<EdgeWeight> = Vec::new();
    let mut line_of = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line_no, line) in lines.by_ref() {
        if offsets.len() > n {
            if line.trim().is_empty() {
                continue;
            }
            return Err(syntax(line_no, format!("more than {n} vertex lines")));
        }
        let v = offsets.len() as u64;
        let mut tokens = line.split_whitespace();
        let start = targets.len();
        while let Some(tok) = tokens.next() {
            let u: u64 = tok
                .parse()
                .map_err(|_| syntax(line_no, format!("invalid neighbor `{tok}`")))?;
            if u == 0 || u > n as u64 {
                return Err(syntax(line_no, format!("neighbor {u} outside 1..={n}")));
            }
            if u == v {
                return Err(syntax(line_no, format!("self-loop on vertex {v}")));
            }
            let w = if header.edge_weights {
                let Some(wt) = tokens.next() else {
                    return Err(syntax(line_no, "odd number of tokens in weighted line"));
                };
                let w: EdgeWeight = wt
                    .parse()
                    .map_err(|_| syntax(line_no, format!("invalid weight `{wt}`")))?;
                if w == 0 {
                    return Err(syntax(line_no, "edge weight must be positive"));
                }
                w
            } else {
                1
            };
            targets.push((u - 1) as NodeId);
            weights.push(w);
        }
        // canonical order; duplicates are an error
        let row_t = &mut targets[start..];
        if !row_t.windows(2).all(|p| p[0] < p[1]) {
            let mut row: Vec<(NodeId, EdgeWeight)> = row_t
                .iter()
                .copied()
                .zip(weights[start..].iter().copied())
                .collect();
            row.sort_unstable_by_key(|&(t, _)| t);
            if let Some(p) = row.windows(2).find(|p| p[0].0 == p[1].0) {
                return Err(syntax(
                    line_no,
                    format!("neighbor {} listed twice", p[0].0 + 1),
                ));
            }
            for (i, (t, w)) in row.into_iter().enumerate() {
                targets[start + i] = t;
                weights[start + i] = w;
            }
        }
        offsets.push(targets.len());
        line_of.push(line_no);
        last_line = line_no;
    }
    // trailing vertices without a line have no neighbors
    while offsets.len() <= n {
        offsets.push(targets.len());
        line_of.push(last_line);
    }
    let found = targets.len() as u64;
    if found != 2 * header.m {
        return Err(ParseError::EdgeCount {
            expected: header.m,
            found: found / 2,
        });
    }
    for v in 0..n {
        for i in offsets[v]..offsets[v + 1] {
            let u = targets[i] as usize;
            let back = &targets[offsets[u]..offsets[u + 1]];
            let ok = back
                .binary_search(&(v as NodeId))
                .is_ok_and(|j| weights[offsets[u] + j] == weights[i]);
            if !ok {
                return Err(ParseError::Asymmetric {
                    line: line_of[v],
                    u: v as u64 + 1,
                    v: u as u64 + 1,
                });
            }
        }
    }
    Ok(Graph::from_csr(offsets, targets, weights))
}

/// Serializes with edge weights (`fmt = 1`); an isolated vertex yields a blank line.
pub fn write_metis(g: &Graph) -> String {
    let mut out = Vec::new();
    write_metis_to(g, &mut out).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("METIS output is ASCII")
}

/// [`write_metis`] into any writer.
pub fn write_metis_to<W: Write>(g: &Graph, out: &mut W) -> std::io::Result<()> {
    writeln!(out, "{} {} 1", g.n(), g.m())?;
    for v in 0..g.n() as NodeId {
        let mut first = true;
        for (u, w) in g.neighbors(v) {
            if !first {
                out.write_all(b" ")?;
            }
            first = false;
            write!(out, "{} {}", u + 1, w)?;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads a METIS file; names ending in `.gz` are decompressed first.
pub fn read_metis_file(path: &Path) -> Result<Graph, ParseError> {
    let file = File::open(path)?;
    let mut text = String::new();
    if path.extension().is_some_and(|e| e == "gz") {
        GzDecoder::new(file).read_to_string(&mut text)?;
    } else {
        std::io::BufReader::new(file).read_to_string(&mut text)?;
    }
    parse_metis(&text)
}

pub fn write_metis_file(g: &Graph, path: &Path) -> std::io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_metis_to(g, &mut out)?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: &str = "3 2 1\n2 1\n1 1 3 1\n2 1\n";

    #[test]
    fn parse_weighted_path() {
        let g = parse_metis(P3).unwrap();
        assert_eq!(g, Graph::from_edges(3, &[(0, 1, 1), (1, 2, 1)]).unwrap());
    }

    #[test]
    fn parse_unweighted_default() {
        let g = parse_metis("2 1\n2\n1\n").unwrap();
        assert_eq!(g.edge_weight(0, 1), Some(1));
    }

    #[test]
    fn edge_count_mismatch_names_both_counts() {
        let err = parse_metis("3 2 1\n2 1\n1 1\n\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::EdgeCount {
                expected: 2,
                found: 1
            }
        ));
        let msg = err.to_string();
        assert!(msg.contains('2') && msg.contains('1'), "{msg}");
    }

    #[test]
    fn comments_and_format_codes() {
        let g = parse_metis("% comment\n3 2 001\n% inner\n2 4\n1 4 3 2\n2 2\n").unwrap();
        assert_eq!(g.degree(1), 6);
        assert!(parse_metis("3 2 011\n2 1\n1 1 3 1\n2 1\n").is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("2 1 1\n2 x\n1 1\n", 2),
            ("2 1 1\n3 1\n1 1\n", 2),
            ("2 1 1\n2 1\n1\n", 3),
            ("2 1 1\n2 1\n1 1\n1 1\n", 4),
        ];
        for (text, line) in cases {
            match parse_metis(text).unwrap_err() {
                ParseError::Syntax { line: l, .. } => assert_eq!(l, line, "{text:?}"),
                other => panic!("unexpected {other:?} for {text:?}"),
            }
        }
    }

    #[test]
    fn asymmetric_input_rejected() {
        let err = parse_metis("3 2 1\n2 1\n1 1 3 1\n\n2 1\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Syntax { .. } | ParseError::Asymmetric { .. }
        ));
        let err = parse_metis("3 1 1\n2 1\n1 2\n\n").unwrap_err();
        assert!(
            matches!(err, ParseError::Asymmetric { line: 2, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn write_examples() {
        let g = parse_metis(P3).unwrap();
        assert_eq!(write_metis(&g), P3);
        let g = Graph::from_edges(3, &[(0, 1, 2), (0, 1, 3)]).unwrap();
        assert_eq!(write_metis(&g), "3 1 1\n2 5\n1 5\n\n");
    }

    #[test]
    fn rejects_empty_graph() {
        assert!(parse_metis("0 0\n").is_err());
        assert!(matches!(
            parse_metis("% only\n"),
            Err(ParseError::MissingHeader)
        ));
    }
}
