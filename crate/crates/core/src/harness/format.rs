//! Plain-text instance files.
//!
//! ```text
//! # comments run to the end of the line
//! metric uniform 4          # or: line c1 .. cN | explicit N | cluster L KP1 D
//! width 2                   # optional, defaults to the largest request
//! servers 1 2
//! request 3 4
//! request 1 3
//! ```
//!
//! Points are numbered from 1. `metric explicit N` is followed by `N` rows
//! of `N` distances. Numbers may be integers, fractions `p/q` or decimals.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::{format_cost, parse_cost, Configuration, Cost, MetricSpace, Point, Request, SpaceSpec};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| err(line, format!("expected {what}, found `{tok}`")))
}

fn cost(line: usize, tok: &str) -> Result<Cost> {
    parse_cost(tok).ok_or_else(|| err(line, format!("expected a number, found `{tok}`")))
}

fn points(line: usize, toks: &[&str], n: usize) -> Result<Vec<Point>> {
    toks.iter()
        .map(|t| {
            let p: usize = number(line, t, "a point index")?;
            if p == 0 || p > n {
                return Err(err(line, format!("point {p} is outside 1..={n}")));
            }
            Ok(p - 1)
        })
        .collect()
}

/// Parses an instance; errors carry 1-based line numbers.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.first() != Some(&"metric") || toks.len() < 2 {
        return Err(err(first, "expected `metric <kind> ...`"));
    }
    let spec = match toks[1] {
        "uniform" if toks.len() == 3 => SpaceSpec::Uniform { n: number(first, toks[2], "a point count")? },
        "line" if toks.len() > 2 => {
            SpaceSpec::Line { coords: toks[2..].iter().map(|t| cost(first, t)).collect::<Result<_>>()? }
        }
        "explicit" if toks.len() == 3 => {
            let n: usize = number(first, toks[2], "a point count")?;
            let mut matrix = Vec::with_capacity(n);
            for row in 0..n {
                let (at, text) = lines.next().ok_or_else(|| err(first, format!("missing matrix row {}", row + 1)))?;
                let vals: Vec<Cost> = text.split_whitespace().map(|t| cost(at, t)).collect::<Result<_>>()?;
                if vals.len() != n {
                    return Err(err(at, format!("matrix row has {} entries, expected {n}", vals.len())));
                }
                matrix.push(vals);
            }
            SpaceSpec::Explicit { matrix }
        }
        "cluster" if toks.len() == 5 => SpaceSpec::Cluster {
            clusters: number(first, toks[2], "a cluster count")?,
            per_cluster: number(first, toks[3], "a cluster size")?,
            far: cost(first, toks[4])?,
        },
        other => return Err(err(first, format!("malformed metric line for kind `{other}`"))),
    };
    let space = MetricSpace::build(spec).map_err(|e| err(first, e.to_string()))?;
    let n = space.len();

    let mut width: Option<(usize, usize)> = None;
    let mut servers: Option<Configuration> = None;
    let mut requests: Vec<(usize, Request)> = Vec::new();
    for (at, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[0] {
            "width" if toks.len() == 2 => {
                let w: usize = number(at, toks[1], "a width")?;
                if w == 0 {
                    return Err(err(at, "width must be positive"));
                }
                width = Some((at, w));
            }
            "servers" if toks.len() > 1 => {
                if servers.is_some() {
                    return Err(err(at, "servers given twice"));
                }
                servers = Some(Configuration::new(points(at, &toks[1..], n)?));
            }
            "request" if toks.len() > 1 => {
                let r = Request::new(points(at, &toks[1..], n)?).map_err(|e| err(at, e.to_string()))?;
                if let Some((_, w)) = width {
                    if r.len() > w {
                        return Err(err(at, format!("request of {} points exceeds width {w}", r.len())));
                    }
                }
                requests.push((at, r));
            }
            other => return Err(err(at, format!("unexpected `{other}` line"))),
        }
    }
    let servers = servers.ok_or_else(|| err(first, "missing `servers` line"))?;
    if let Some((at, w)) = width {
        if let Some((line, r)) = requests.iter().find(|(_, r)| r.len() > w) {
            return Err(err(*line, format!("request of {} points exceeds width {w} (set on line {at})", r.len())));
        }
    }
    let requests = requests.into_iter().map(|(_, r)| r).collect();
    Instance::new(space, servers, requests, width.map(|(_, w)| w)).map_err(|e| err(first, e.to_string()))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes an instance in the format read by [`parse_instance`]. Scaled
/// unions are written as explicit matrices.
pub fn emit_instance(inst: &Instance) -> String {
    let mut out = String::new();
    match inst.space.spec() {
        SpaceSpec::Uniform { n } => out.push_str(&format!("metric uniform {n}\n")),
        SpaceSpec::Line { coords } => out.push_str(&format!("metric line {}\n", join(coords.iter().map(format_cost)))),
        SpaceSpec::Cluster { clusters, per_cluster, far } => {
            out.push_str(&format!("metric cluster {clusters} {per_cluster} {}\n", format_cost(far)))
        }
        SpaceSpec::Explicit { .. } | SpaceSpec::ScaledUnion { .. } => {
            out.push_str(&format!("metric explicit {}\n", inst.n()));
            for row in inst.space.matrix() {
                out.push_str(&join(row.iter().map(format_cost)));
                out.push('\n');
            }
        }
    }
    out.push_str(&format!("width {}\n", inst.width));
    out.push_str(&format!("servers {}\n", join(inst.initial.points().iter().map(|p| p + 1))));
    for r in &inst.requests {
        out.push_str(&format!("request {}\n", join(r.points().iter().map(|p| p + 1))));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let inst = parse_instance("metric uniform 3\nservers 1\nrequest 2 3\n").unwrap();
        assert_eq!((inst.k(), inst.l(), inst.m()), (1, 2, 1));
    }

    #[test]
    fn out_of_range_point_reports_its_line() {
        let e = parse_instance("metric uniform 4\n# comment\nservers 1\nrequest 9 2\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 4, message: "point 9 is outside 1..=4".into() });
    }

    #[test]
    fn width_violation_and_bad_header() {
        let e = parse_instance("metric uniform 4\nwidth 1\nservers 1\nrequest 2 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
        assert!(matches!(parse_instance("metrc uniform 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_instance("metric explicit 2\n0 1\n1 0\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn explicit_and_cluster_round_trip() {
        let text = "metric explicit 3\n0 1 1/2\n1 0 3/4\n1/2 3/4 0\nservers 1 1\nrequest 2 3\nrequest 2\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(parse_instance(&emit_instance(&inst)).unwrap(), inst);
        let inst = parse_instance("metric cluster 2 3 10\nservers 1 2\nrequest 3 4\n").unwrap();
        assert_eq!(inst.space.dist(0, 3), Cost::from(10));
        assert_eq!(parse_instance(&emit_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn bad_metric_is_rejected() {
        let e = parse_instance("metric explicit 3\n0 1 5\n1 0 1\n5 1 0\nservers 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }
}
