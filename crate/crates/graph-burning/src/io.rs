//! Text formats: a DIMACS-like graph file (`p burn <n> <m>` header,
//! `e <u> <v>` lines with 0-based ids) and the decomposition format
//! (`bag <id>: v...`, `tedge <child> <parent>`, `root <id>` with 1-based
//! bag ids). Blank lines and `c` comment lines are ignored.

use serde::Serialize;
use std::fmt;

use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::process::BurningSchedule;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate header"));
                }
                if fields.len() != 4 || fields[1] != "burn" {
                    return Err(parse_err(lineno, "expected `p burn <n> <m>`"));
                }
                let n = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad vertex count"))?;
                let m = fields[3]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad edge count"))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "edge before header"))?;
                if fields.len() != 3 {
                    return Err(parse_err(lineno, "expected `e <u> <v>`"));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad endpoint"))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad endpoint"))?;
                if u >= n || v >= n {
                    return Err(parse_err(
                        lineno,
                        format!("endpoint out of range for n = {n}"),
                    ));
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
                }
                let key = (u.min(v), u.max(v));
                if edges.contains(&key) {
                    return Err(parse_err(lineno, format!("duplicate edge {{{u}, {v}}}")));
                }
                edges.push(key);
                edge_lines.push(lineno);
            }
            other => {
                return Err(parse_err(lineno, format!("unknown record `{other}`")));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p burn` header"))?;
    if edges.len() != m {
        return Err(Error::InvalidInput(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p burn {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn parse_decomposition(text: &str) -> Result<Decomposition> {
    let mut bags: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut tedges: Vec<(usize, usize)> = Vec::new();
    let mut root: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("bag ") {
            let (id_part, verts_part) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(lineno, "expected `bag <id>: v...`"))?;
            let id: usize = id_part
                .trim()
                .parse()
                .map_err(|_| parse_err(lineno, "bad bag id"))?;
            if id == 0 {
                return Err(parse_err(lineno, "bag ids are 1-based"));
            }
            let verts = verts_part
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| parse_err(lineno, "bad vertex id")))
                .collect::<Result<Vec<usize>>>()?;
            bags.push((id, verts));
        } else if let Some(rest) = line.strip_prefix("tedge ") {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(parse_err(lineno, "expected `tedge <child> <parent>`"));
            }
            let child: usize = fields[0]
                .parse()
                .map_err(|_| parse_err(lineno, "bad bag id"))?;
            let parent: usize = fields[1]
                .parse()
                .map_err(|_| parse_err(lineno, "bad bag id"))?;
            tedges.push((child, parent));
        } else if let Some(rest) = line.strip_prefix("root ") {
            if root.is_some() {
                return Err(parse_err(lineno, "duplicate root line"));
            }
            root = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad root id"))?,
            );
        } else {
            return Err(parse_err(lineno, format!("unknown record `{line}`")));
        }
    }
    let count = bags.len();
    if count == 0 {
        return Err(Error::InvalidDecomposition("no bags".into()));
    }
    // bag ids must be exactly 1..=count
    let mut ordered: Vec<Option<Vec<usize>>> = vec![None; count];
    for (id, verts) in bags {
        if id > count || ordered[id - 1].is_some() {
            return Err(Error::InvalidDecomposition(format!(
                "bag ids must be 1..{count} without repeats (saw {id})"
            )));
        }
        ordered[id - 1] = Some(verts);
    }
    let bag_list: Vec<Vec<usize>> = ordered.into_iter().map(|b| b.unwrap()).collect();
    let root = root.ok_or_else(|| Error::InvalidDecomposition("missing root line".into()))?;
    if root == 0 || root > count {
        return Err(Error::InvalidDecomposition(format!(
            "root {root} out of range"
        )));
    }
    let mut parent: Vec<Option<usize>> = vec![None; count];
    for (child, par) in tedges {
        if child == 0 || child > count || par == 0 || par > count {
            return Err(Error::InvalidDecomposition(format!(
                "tedge {child} {par} out of range"
            )));
        }
        if parent[child - 1].is_some() {
            return Err(Error::InvalidDecomposition(format!(
                "bag {child} has two parents"
            )));
        }
        parent[child - 1] = Some(par - 1);
    }
    Decomposition::new(bag_list, parent, root - 1)
}

pub fn serialize_decomposition(t: &Decomposition) -> String {
    let mut out = String::new();
    for (i, bag) in t.bags().iter().enumerate() {
        let verts: Vec<String> = bag.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("bag {}: {}\n", i + 1, verts.join(" ")));
    }
    for i in 0..t.bag_count() {
        if let Some(p) = t.parent(i) {
            out.push_str(&format!("tedge {} {}\n", i + 1, p + 1));
        }
    }
    out.push_str(&format!("root {}\n", t.root() + 1));
    out
}

pub fn parse_schedule(text: &str, n: usize) -> Result<BurningSchedule> {
    let activators = text
        .split_whitespace()
        .map(|t| {
            let v: usize = t
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad activator `{t}`")))?;
            if v >= n {
                return Err(Error::InvalidInput(format!(
                    "activator {v} out of range for n = {n}"
                )));
            }
            Ok(v)
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(BurningSchedule::new(activators))
}

/// Machine- and human-readable run summary. Deterministic for identical
/// inputs; timing is reported separately on stderr.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub algorithm: String,
    pub schedule: Vec<usize>,
    pub completion_round: usize,
    pub certified_bound: usize,
    pub lower_bound: usize,
    /// completion / lower_bound.
    pub ratio: f64,
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algorithm: {}", self.algorithm)?;
        let s: Vec<String> = self.schedule.iter().map(|v| v.to_string()).collect();
        writeln!(f, "schedule: {}", s.join(" "))?;
        writeln!(f, "rounds: {}", self.completion_round)?;
        writeln!(f, "bound: {}", self.certified_bound)?;
        writeln!(f, "lower: {}", self.lower_bound)?;
        write!(f, "ratio: {:.4}", self.ratio)
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::builders::path;
    use crate::generators::{gen_ktree_chordal, gen_path};

    #[test]
    fn graph_roundtrip() {
        let g = path(5);
        let text = serialize_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_parse_errors_carry_line_numbers() {
        let bad = "p burn 3 1\ne 0 0\n";
        match parse_graph(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        let dup = "p burn 3 2\ne 0 1\ne 1 0\n";
        match parse_graph(dup) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let range = "p burn 3 1\ne 0 7\n";
        assert!(matches!(
            parse_graph(range),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn decomposition_roundtrip() {
        let inst = gen_ktree_chordal(12, 2, 5).unwrap();
        let t = inst.decomposition.unwrap();
        let text = serialize_decomposition(&t);
        assert_eq!(parse_decomposition(&text).unwrap(), t);

        let p = gen_path(6).unwrap().decomposition.unwrap();
        let text = serialize_decomposition(&p);
        assert_eq!(parse_decomposition(&text).unwrap(), p);
    }

    #[test]
    fn schedule_parsing() {
        let s = parse_schedule("1 3", 4).unwrap();
        assert_eq!(s.activators, vec![1, 3]);
        assert!(parse_schedule("9", 4).is_err());
        assert!(parse_schedule("x", 4).is_err());
    }

    #[test]
    fn report_json_schema_is_stable() {
        let r = RunReport {
            algorithm: "exact".into(),
            schedule: vec![2, 6, 8],
            completion_round: 3,
            certified_bound: 3,
            lower_bound: 3,
            ratio: 1.0,
        };
        assert_eq!(
            r.to_json(),
            r#"{"algorithm":"exact","schedule":[2,6,8],"completion_round":3,"certified_bound":3,"lower_bound":3,"ratio":1.0}"#
        );
    }
}
