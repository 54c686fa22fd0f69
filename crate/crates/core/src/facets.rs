//! Text formats: facet files, edge-list graph files and pool files.
//!
//! A facet file holds one generating set per line with comma-separated
//! vertex labels. Lines starting with `#` and blank lines are skipped. A
//! graph file uses the same conventions with `a,b` edge lines and single
//! labels for isolated vertices. A pool file is a sequence of facet files
//! separated by lines consisting of `---`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::complex::{Label, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn split_labels(line: usize, s: &str) -> Result<Vec<String>> {
    s.split(',')
        .map(|v| {
            let v = v.trim();
            if v.is_empty() {
                Err(Error::Parse {
                    line,
                    msg: "empty vertex label".into(),
                })
            } else {
                Ok(v.to_string())
            }
        })
        .collect()
}

fn parse_facets_from(lines: impl Iterator<Item = (usize, String)>) -> Result<SimplicialComplex> {
    let mut sets = Vec::new();
    for (line, l) in lines {
        let labels = split_labels(line, &l)?;
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Parse {
                line,
                msg: "repeated vertex in a set".into(),
            });
        }
        sets.push(labels);
    }
    SimplicialComplex::generate(sets)
}

/// Parses a facet file into the complex its lines generate.
pub fn parse_facet_file(text: &str) -> Result<SimplicialComplex> {
    parse_facets_from(content_lines(text).map(|(n, l)| (n, l.to_string())))
}

/// Writes the facets of `c`, one per line, in canonical order.
pub fn write_facet_file(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let labels: Vec<&str> = f.vertices().iter().map(Label::as_str).collect();
        let _ = writeln!(out, "{}", labels.join(","));
    }
    out
}

/// Parses an edge list.
pub fn parse_graph_file(text: &str) -> Result<Graph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (line, l) in content_lines(text) {
        let labels = split_labels(line, l)?;
        match labels.as_slice() {
            [v] => vertices.push(v.clone()),
            [a, b] if a == b => {
                return Err(Error::Parse {
                    line,
                    msg: format!("loop at {a}"),
                })
            }
            [a, b] => {
                vertices.push(a.clone());
                vertices.push(b.clone());
                edges.push((a.clone(), b.clone()));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: "expected a vertex or an edge a,b".into(),
                })
            }
        }
    }
    let distinct: BTreeSet<String> = vertices.into_iter().collect();
    Graph::new(distinct, edges)
}

/// Parses complexes separated by `---` lines. Empty sections are dropped.
pub fn parse_pool_file(text: &str) -> Result<Vec<SimplicialComplex>> {
    let mut out = Vec::new();
    let mut section: Vec<(usize, String)> = Vec::new();
    for (line, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if l == "---" {
            if !section.is_empty() {
                out.push(parse_facets_from(std::mem::take(&mut section).into_iter())?);
            }
        } else if !l.is_empty() && !l.starts_with('#') {
            section.push((line, l.to_string()));
        }
    }
    if !section.is_empty() {
        out.push(parse_facets_from(section.into_iter())?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;

    #[test]
    fn facet_files() {
        let c = parse_facet_file("# diamond\n1,2,3\n\n 2, 3 ,4 \n").unwrap();
        assert_eq!(c.f_vector(), FVector(vec![4, 5, 2]));
        assert_eq!(write_facet_file(&c), "1,2,3\n2,3,4\n");
        assert_eq!(parse_facet_file(&write_facet_file(&c)).unwrap(), c);
        assert!(parse_facet_file("").unwrap().is_empty());
        assert!(parse_facet_file("# only\n").unwrap().is_empty());
        assert_eq!(parse_facet_file("7").unwrap().f_vector(), FVector(vec![1]));
    }

    #[test]
    fn facet_file_errors_carry_lines() {
        for (text, line) in [("1,2\n1,,3\n", 2), ("\n\n2,2\n", 3), ("1,\n", 1)] {
            match parse_facet_file(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn graph_files() {
        let g = parse_graph_file("1,4\n1,2\n1,3\n2,3\n3,4\n# isolated\n9\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 5));
        assert!(matches!(parse_graph_file("1,1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph_file("1,2\n1,2,3"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn pool_files() {
        let pool = parse_pool_file("1,2\n---\n# c3\n1,2\n2,3\n3,1\n---\n---\n").unwrap();
        assert_eq!(pool.len(), 2);
        assert_eq!(pool[1].euler_characteristic(), 0);
        assert!(matches!(parse_pool_file("1\n---\n2,,3"), Err(Error::Parse { line: 3, .. })));
    }
}
