//! Named example graphs and reduction systems used by tests, benches and
//! the command line.

use std::sync::Arc;

use crate::pathalg::Rational;
use crate::presentation::{build_reduction_system, BrauerPresentation, ReductionSystem};
use crate::ribbon::RibbonGraph;
use crate::Result;

/// Three vertices `v1(1)`, `v2(2)`, `w(1)` and edges `α–δ`, `β–γ`.
pub fn ex1() -> RibbonGraph {
    RibbonGraph::build(
        &[("v1", 1), ("v2", 2), ("w", 1)],
        &[("v1", &["α"]), ("v2", &["β"]), ("w", &["δ", "γ"])],
        &[("α", "δ"), ("β", "γ")],
    )
    .expect("valid fixture")
}

/// Two vertices joined by two edges, all multiplicities 1.
pub fn dbl() -> RibbonGraph {
    RibbonGraph::build(
        &[("v", 1), ("w", 1)],
        &[("v", &["a", "a'"]), ("w", &["b", "b'"])],
        &[("a", "b"), ("a'", "b'")],
    )
    .expect("valid fixture")
}

/// One edge from a truncated vertex to a vertex of multiplicity `m`; the
/// algebra is `k[x]/(x^{m+1})`.
pub fn loc(m: u32) -> RibbonGraph {
    RibbonGraph::build(&[("u", 1), ("v", m)], &[("u", &["y"]), ("v", &["x"])], &[("x", "y")]).expect("valid fixture")
}

/// One vertex with a single loop edge.
pub fn annulus() -> RibbonGraph {
    RibbonGraph::build(&[("v", 1)], &[("v", &["x", "y"])], &[("x", "y")]).expect("valid fixture")
}

pub const ANNULUS_RULES: &[(&str, &str)] = &[("x*y", "y*x"), ("x*x", "0"), ("y*y", "0")];

/// One vertex with two interleaved loop edges.
pub fn torus() -> RibbonGraph {
    RibbonGraph::build(&[("v", 1)], &[("v", &["a1", "a2", "a3", "a4"])], &[("a1", "a3"), ("a2", "a4")])
        .expect("valid fixture")
}

pub const TORUS_RULES: &[(&str, &str)] = &[
    ("a4*a3*a2*a1", "a2*a1*a4*a3"),
    ("a1*a4*a3*a2", "a3*a2*a1*a4"),
    ("a3*a2*a1*a4*a3", "0"),
    ("a4*a1", "0"),
    ("a1*a2", "0"),
    ("a2*a3", "0"),
    ("a3*a4", "0"),
];

/// A loop edge at `v` plus an edge to a truncated vertex `u`.
pub fn ann2() -> RibbonGraph {
    RibbonGraph::build(&[("u", 1), ("v", 1)], &[("u", &["d"]), ("v", &["a3", "a1", "a2"])], &[("a1", "a3"), ("a2", "d")])
        .expect("valid fixture")
}

pub const ANN2_RULES: &[(&str, &str)] = &[("a3*a2*a1", "a2*a1*a3"), ("a2*a1*a3*a2", "0"), ("a3*a3", "0"), ("a1*a2", "0")];

/// The rules as a JSON override document.
pub fn rules_json(rules: &[(&str, &str)]) -> String {
    let docs: Vec<serde_json::Value> =
        rules.iter().map(|(t, r)| serde_json::json!({"tip": t, "replacement": r})).collect();
    serde_json::to_string_pretty(&docs).expect("serialisable")
}

/// Hand-written system over the quiver of `g` (truncated loops removed).
pub fn system_for(g: &RibbonGraph, rules: &[(&str, &str)]) -> Result<(BrauerPresentation, ReductionSystem<Rational>)> {
    let p = BrauerPresentation::build(g, None, None)?;
    let rs = ReductionSystem::from_text(Arc::clone(p.quiver()), rules)?;
    Ok((p, rs))
}

/// A graph given by its edges between vertices `v0..v{n-1}`; half-edges
/// `h{k}s`/`h{k}t` sit in rotation order of the edge list.
pub fn from_edges(n: usize, edges: &[(usize, usize)], mult: &[u32]) -> RibbonGraph {
    let ids: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut rot: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut pairs = Vec::new();
    for (k, &(a, b)) in edges.iter().enumerate() {
        let (s, t) = (format!("h{k}s"), format!("h{k}t"));
        rot[a].push(s.clone());
        rot[b].push(t.clone());
        pairs.push((s, t));
    }
    let verts: Vec<(&str, u32)> = ids.iter().zip(mult).map(|(v, &m)| (v.as_str(), m)).collect();
    let rot_refs: Vec<Vec<&str>> = rot.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
    let rotation: Vec<(&str, &[&str])> = ids.iter().zip(&rot_refs).map(|(v, r)| (v.as_str(), r.as_slice())).collect();
    let pairing: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    RibbonGraph::build(&verts, &rotation, &pairing).expect("valid generated graph")
}

/// Even cycles, stars and paths with multiplicities drawn from `{1, 2, 3}`.
pub fn bipartite_family() -> Vec<(String, RibbonGraph)> {
    // (name, vertex count, edges)
    type Shape = (String, usize, Vec<(usize, usize)>);
    let mut shapes: Vec<Shape> = Vec::new();
    for k in [2usize, 4, 6] {
        shapes.push((format!("cycle{k}"), k, (0..k).map(|i| (i, (i + 1) % k)).collect()));
    }
    for k in 2..=4usize {
        shapes.push((format!("star{k}"), k + 1, (1..=k).map(|i| (0, i)).collect()));
    }
    for k in 3..=5usize {
        shapes.push((format!("path{k}"), k, (0..k - 1).map(|i| (i, i + 1)).collect()));
    }
    let mut out = Vec::new();
    for (idx, (name, n, edges)) in shapes.iter().enumerate() {
        for shift in 0..3usize {
            let mult: Vec<u32> = (0..*n).map(|i| 1 + ((i * (idx + 1) + shift) % 3) as u32).collect();
            let tag: String = mult.iter().map(|m| m.to_string()).collect();
            out.push((format!("{name}-m{tag}"), from_edges(*n, edges, &mult)));
        }
    }
    out
}

/// A named fixture: its graph and, for non-bipartite ones, hand-written
/// rules. `loc<m>` works for any `m ≥ 1`.
pub struct Fixture {
    pub name: String,
    pub graph: RibbonGraph,
    pub rules: Option<&'static [(&'static str, &'static str)]>,
}

impl Fixture {
    /// The hand-written system if there is one, otherwise the built one for
    /// the given (or default) bipartition.
    pub fn system(&self, part_one: Option<&str>) -> Result<(BrauerPresentation, ReductionSystem<Rational>)> {
        if let Some(rules) = self.rules {
            return system_for(&self.graph, rules);
        }
        let bp = match part_one {
            Some(text) => self.graph.parse_bipartition(text)?,
            None => self.graph.bipartition()?,
        };
        let p = BrauerPresentation::build(&self.graph, Some(&bp), None)?;
        let rs = build_reduction_system(&p)?;
        Ok((p, rs))
    }
}

pub const NAMES: &[&str] = &["ex1", "dbl", "loc1", "loc2", "loc3", "loc4", "loc5", "annulus", "torus", "ann2"];

pub fn fixture(name: &str) -> Option<Fixture> {
    let (graph, rules): (RibbonGraph, Option<&'static [(&str, &str)]>) = match name {
        "ex1" => (ex1(), None),
        "dbl" => (dbl(), None),
        "annulus" => (annulus(), Some(ANNULUS_RULES)),
        "torus" => (torus(), Some(TORUS_RULES)),
        "ann2" => (ann2(), Some(ANN2_RULES)),
        _ => {
            let m: u32 = name.strip_prefix("loc")?.parse().ok().filter(|&m| m >= 1)?;
            (loc(m), None)
        }
    };
    Some(Fixture { name: name.to_string(), graph, rules })
}
