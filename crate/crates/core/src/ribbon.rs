//! Ribbon graphs with multiplicities (Brauer graphs).
//!
//! A graph is a set of half-edges `H` with an incidence map to vertices, a
//! fixed-point-free involution `ι` pairing half-edges into edges, and a
//! rotation `ρ` cycling through the half-edges at each vertex.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use crate::{Error, Result};

pub type HalfEdge = usize;
pub type Vertex = usize;
pub type Edge = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    vertex_ids: Vec<String>,
    multiplicity: Vec<u32>,
    half_edge_ids: Vec<String>,
    incidence: Vec<Vertex>,
    iota: Vec<HalfEdge>,
    rho: Vec<HalfEdge>,
    rho_inv: Vec<HalfEdge>,
    /// Per vertex, the rotation starting from its smallest half-edge.
    rotation: Vec<Vec<HalfEdge>>,
    /// Edges as `(h, ι(h))` with `h < ι(h)`, sorted.
    edges: Vec<(HalfEdge, HalfEdge)>,
    edge_of: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    id: String,
    multiplicity: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    half_edges: Vec<String>,
    incidence: UniqueMap<String>,
    pairing: Vec<Vec<String>>,
    rotation: UniqueMap<Vec<String>>,
}

/// A JSON object that rejects repeated keys.
#[derive(Serialize)]
#[serde(transparent)]
struct UniqueMap<T>(BTreeMap<String, T>);

impl<'de, T: Deserialize<'de>> Deserialize<'de> for UniqueMap<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V<T>(std::marker::PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = UniqueMap<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((k, v)) = map.next_entry::<String, T>()? {
                    if out.contains_key(&k) {
                        return Err(serde::de::Error::custom(format!("duplicate key {k:?}")));
                    }
                    out.insert(k, v);
                }
                Ok(UniqueMap(out))
            }
        }
        d.deserialize_map(V(std::marker::PhantomData))
    }
}

impl RibbonGraph {
    /// Parse and validate a ribbon-graph JSON document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_doc(doc)
    }

    /// Convenience constructor: `vertices` as `(id, m)`, `rotation` per
    /// vertex (incidence is read off the rotation), `pairing` as id pairs.
    pub fn build(vertices: &[(&str, u32)], rotation: &[(&str, &[&str])], pairing: &[(&str, &str)]) -> Result<Self> {
        let mut incidence = BTreeMap::new();
        let mut half_edges = Vec::new();
        for (v, hs) in rotation {
            for h in *hs {
                half_edges.push(h.to_string());
                incidence.insert(h.to_string(), v.to_string());
            }
        }
        let doc = GraphDoc {
            vertices: vertices.iter().map(|(id, m)| VertexDoc { id: id.to_string(), multiplicity: *m }).collect(),
            half_edges,
            incidence: UniqueMap(incidence),
            pairing: pairing.iter().map(|(a, b)| vec![a.to_string(), b.to_string()]).collect(),
            rotation: UniqueMap(rotation.iter().map(|(v, hs)| (v.to_string(), hs.iter().map(|h| h.to_string()).collect())).collect()),
        };
        Self::from_doc(doc)
    }

    fn from_doc(doc: GraphDoc) -> Result<Self> {
        let mut vdocs = doc.vertices;
        vdocs.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(w) = vdocs.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::Schema(format!("duplicate vertex id {:?}", w[0].id)));
        }
        if vdocs.is_empty() {
            return Err(Error::Schema("no vertices".into()));
        }
        if let Some(v) = vdocs.iter().find(|v| v.multiplicity == 0) {
            return Err(Error::Schema(format!("vertex {:?} has multiplicity 0", v.id)));
        }
        let vertex_ids: Vec<String> = vdocs.iter().map(|v| v.id.clone()).collect();
        let multiplicity: Vec<u32> = vdocs.iter().map(|v| v.multiplicity).collect();
        let vindex: HashMap<&str, Vertex> = vertex_ids.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();

        let mut half_edge_ids = doc.half_edges;
        half_edge_ids.sort();
        if let Some(w) = half_edge_ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Schema(format!("duplicate half-edge id {:?}", w[0])));
        }
        if half_edge_ids.is_empty() {
            return Err(Error::Schema("no half-edges".into()));
        }
        let hindex: HashMap<&str, HalfEdge> = half_edge_ids.iter().enumerate().map(|(i, h)| (h.as_str(), i)).collect();
        let n = half_edge_ids.len();
        let lookup_h = |h: &str| hindex.get(h).copied().ok_or_else(|| Error::Schema(format!("unknown half-edge {h:?}")));

        let mut incidence = vec![usize::MAX; n];
        for (h, v) in &doc.incidence.0 {
            let hi = lookup_h(h)?;
            incidence[hi] = *vindex.get(v.as_str()).ok_or_else(|| Error::Schema(format!("unknown vertex {v:?}")))?;
        }
        if let Some(h) = incidence.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Schema(format!("half-edge {:?} has no incidence", half_edge_ids[h])));
        }

        let mut iota = vec![usize::MAX; n];
        for pair in &doc.pairing {
            let [a, b] = pair.as_slice() else {
                return Err(Error::Schema("pairing entries must have two elements".into()));
            };
            let (a, b) = (lookup_h(a)?, lookup_h(b)?);
            if a == b {
                return Err(Error::InvalidInvolution(format!("{:?} is paired with itself", half_edge_ids[a])));
            }
            for (x, y) in [(a, b), (b, a)] {
                if iota[x] != usize::MAX {
                    return Err(Error::InvalidInvolution(format!("{:?} is paired twice", half_edge_ids[x])));
                }
                iota[x] = y;
            }
        }
        if let Some(h) = iota.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidInvolution(format!("{:?} is unpaired", half_edge_ids[h])));
        }

        let mut rho = vec![usize::MAX; n];
        let mut rotation = vec![Vec::new(); vertex_ids.len()];
        for (v, hs) in &doc.rotation.0 {
            let vi = *vindex.get(v.as_str()).ok_or_else(|| Error::Schema(format!("unknown vertex {v:?}")))?;
            let mut cycle = Vec::with_capacity(hs.len());
            for h in hs {
                let hi = lookup_h(h)?;
                if incidence[hi] != vi {
                    return Err(Error::InvalidRotation(format!("{h:?} is listed at {v:?} but is not incident to it")));
                }
                if cycle.contains(&hi) {
                    return Err(Error::InvalidRotation(format!("{h:?} repeats in the rotation at {v:?}")));
                }
                cycle.push(hi);
            }
            for (i, &h) in cycle.iter().enumerate() {
                rho[h] = cycle[(i + 1) % cycle.len()];
            }
            if let Some(start) = cycle.iter().enumerate().min_by_key(|(_, h)| **h).map(|(i, _)| i) {
                cycle.rotate_left(start);
            }
            rotation[vi] = cycle;
        }
        if let Some(h) = rho.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidRotation(format!(
                "{:?} is missing from the rotation at {:?}",
                half_edge_ids[h], vertex_ids[incidence[h]]
            )));
        }
        let mut rho_inv = vec![0; n];
        for (h, &s) in rho.iter().enumerate() {
            rho_inv[s] = h;
        }

        let mut edges: Vec<(HalfEdge, HalfEdge)> = (0..n).filter(|&h| h < iota[h]).map(|h| (h, iota[h])).collect();
        edges.sort();
        let mut edge_of = vec![0; n];
        for (e, &(a, b)) in edges.iter().enumerate() {
            edge_of[a] = e;
            edge_of[b] = e;
        }

        let g = RibbonGraph {
            vertex_ids,
            multiplicity,
            half_edge_ids,
            incidence,
            iota,
            rho,
            rho_inv,
            rotation,
            edges,
            edge_of,
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &self.rotation[v] {
                let w = self.incidence[self.iota[h]];
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Canonical JSON (sorted ids, each rotation starting at its smallest
    /// half-edge).
    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            vertices: (0..self.vertex_count())
                .map(|v| VertexDoc { id: self.vertex_ids[v].clone(), multiplicity: self.multiplicity[v] })
                .collect(),
            half_edges: self.half_edge_ids.clone(),
            incidence: UniqueMap(
                (0..self.half_edge_count())
                    .map(|h| (self.half_edge_ids[h].clone(), self.vertex_ids[self.incidence[h]].clone()))
                    .collect(),
            ),
            pairing: self
                .edges
                .iter()
                .map(|&(a, b)| vec![self.half_edge_ids[a].clone(), self.half_edge_ids[b].clone()])
                .collect(),
            rotation: UniqueMap(
                (0..self.vertex_count())
                    .map(|v| (self.vertex_ids[v].clone(), self.rotation[v].iter().map(|&h| self.half_edge_ids[h].clone()).collect()))
                    .collect(),
            ),
        };
        serde_json::to_string(&doc).expect("graph documents serialise")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edge_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: Vertex) -> &str {
        &self.vertex_ids[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<Vertex> {
        self.vertex_ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    pub fn half_edge_id(&self, h: HalfEdge) -> &str {
        &self.half_edge_ids[h]
    }

    pub fn half_edge_index(&self, id: &str) -> Option<HalfEdge> {
        self.half_edge_ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    pub fn multiplicity(&self, v: Vertex) -> u32 {
        self.multiplicity[v]
    }

    pub fn valency(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    /// `m(v) = 1` and `val(v) = 1`.
    pub fn is_truncated(&self, v: Vertex) -> bool {
        self.multiplicity[v] == 1 && self.valency(v) == 1
    }

    pub fn vertex_of(&self, h: HalfEdge) -> Vertex {
        self.incidence[h]
    }

    pub fn iota(&self, h: HalfEdge) -> HalfEdge {
        self.iota[h]
    }

    /// Successor `h⁺ = ρ(h)`.
    pub fn succ(&self, h: HalfEdge) -> HalfEdge {
        self.rho[h]
    }

    /// Predecessor `h⁻ = ρ⁻¹(h)`.
    pub fn pred(&self, h: HalfEdge) -> HalfEdge {
        self.rho_inv[h]
    }

    pub fn half_edges_at(&self, v: Vertex) -> &[HalfEdge] {
        &self.rotation[v]
    }

    pub fn edge_of(&self, h: HalfEdge) -> Edge {
        self.edge_of[h]
    }

    pub fn edge(&self, e: Edge) -> (HalfEdge, HalfEdge) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(HalfEdge, HalfEdge)] {
        &self.edges
    }

    pub fn is_loop(&self, e: Edge) -> bool {
        let (a, b) = self.edges[e];
        self.incidence[a] == self.incidence[b]
    }

    /// Edge names used for quiver vertices: `"1"`, `"2"`, … in edge order.
    pub fn edge_name(&self, e: Edge) -> String {
        (e + 1).to_string()
    }

    /// `|E| − |V| + 1`.
    pub fn betti(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }

    pub fn valency_sum(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.valency(v)).sum()
    }

    /// Breadth-first spanning tree from the smallest vertex, exploring the
    /// half-edges at each vertex in rotation order.
    pub fn spanning_tree(&self) -> BTreeSet<Edge> {
        let mut tree = BTreeSet::new();
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &self.rotation[v] {
                let w = self.incidence[self.iota[h]];
                if !seen[w] {
                    seen[w] = true;
                    tree.insert(self.edge_of[h]);
                    queue.push_back(w);
                }
            }
        }
        tree
    }

    pub fn non_tree_edges(&self) -> Vec<Edge> {
        let tree = self.spanning_tree();
        (0..self.edge_count()).filter(|e| !tree.contains(e)).collect()
    }

    /// Orbits of the face permutation `ι∘ρ`.
    pub fn boundary_walks(&self) -> BoundaryDecomposition {
        let n = self.half_edge_count();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                face.push(h);
                h = self.iota[self.rho[h]];
            }
            faces.push(face);
        }
        let bigon_faces = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.len() == 2 && f.iter().all(|&h| !self.is_truncated(self.incidence[h])))
            .map(|(i, _)| i)
            .collect();
        BoundaryDecomposition { faces, bigon_faces }
    }

    /// Default two-colouring: BFS from the smallest vertex, which lands in
    /// `V₁`.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let nv = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; nv];
        let mut parent: Vec<Option<Vertex>> = vec![None; nv];
        side[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &h in &self.rotation[v] {
                let w = self.incidence[self.iota[h]];
                if w == v {
                    return Err(Error::NonBipartite { witness: vec![self.vertex_ids[v].clone()] });
                }
                match side[w] {
                    None => {
                        side[w] = Some(!side[v].unwrap());
                        parent[w] = Some(v);
                        queue.push_back(w);
                    }
                    Some(s) if s == side[v].unwrap() => {
                        return Err(Error::NonBipartite { witness: self.odd_cycle(&parent, v, w) });
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(Bipartition { in_one: side.into_iter().map(|s| !s.unwrap()).collect() })
    }

    /// Cycle through the tree paths of `a` and `b` and the edge `a–b`.
    fn odd_cycle(&self, parent: &[Option<Vertex>], a: Vertex, b: Vertex) -> Vec<String> {
        let chain = |mut v: Vertex| {
            let mut out = vec![v];
            while let Some(p) = parent[v] {
                out.push(p);
                v = p;
            }
            out
        };
        let (ca, cb) = (chain(a), chain(b));
        let common = ca.iter().find(|v| cb.contains(v)).copied().unwrap_or(0);
        let mut cycle: Vec<Vertex> = ca.iter().copied().take_while(|&v| v != common).collect();
        cycle.push(common);
        let back: Vec<Vertex> = cb.iter().copied().take_while(|&v| v != common).collect();
        cycle.extend(back.into_iter().rev());
        cycle.into_iter().map(|v| self.vertex_ids[v].clone()).collect()
    }

    /// Parse an explicit bipartition `"v1,v2|w"` and check it.
    pub fn parse_bipartition(&self, text: &str) -> Result<Bipartition> {
        let (one, two) = text
            .split_once('|')
            .ok_or_else(|| Error::InvalidBipartition(format!("expected \"V1|V2\", got {text:?}")))?;
        let mut assigned: Vec<Option<bool>> = vec![None; self.vertex_count()];
        for (part, flag) in [(one, true), (two, false)] {
            for id in part.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let v = self
                    .vertex_index(id)
                    .ok_or_else(|| Error::InvalidBipartition(format!("unknown vertex {id:?}")))?;
                if assigned[v].replace(flag).is_some() {
                    return Err(Error::InvalidBipartition(format!("vertex {id:?} listed twice")));
                }
            }
        }
        if let Some(v) = assigned.iter().position(Option::is_none) {
            return Err(Error::InvalidBipartition(format!("vertex {:?} is in neither part", self.vertex_ids[v])));
        }
        let bp = Bipartition { in_one: assigned.into_iter().map(Option::unwrap).collect() };
        self.check_bipartition(&bp)?;
        Ok(bp)
    }

    pub fn check_bipartition(&self, bp: &Bipartition) -> Result<()> {
        if bp.in_one.len() != self.vertex_count() {
            return Err(Error::InvalidBipartition("wrong number of vertices".into()));
        }
        for &(a, b) in &self.edges {
            let (v, w) = (self.incidence[a], self.incidence[b]);
            if bp.in_one[v] == bp.in_one[w] {
                return Err(Error::InvalidBipartition(format!(
                    "edge {}–{} stays inside one part",
                    self.vertex_ids[v], self.vertex_ids[w]
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    in_one: Vec<bool>,
}

impl Bipartition {
    pub fn in_part_one(&self, v: Vertex) -> bool {
        self.in_one[v]
    }

    pub fn part_one(&self) -> Vec<Vertex> {
        (0..self.in_one.len()).filter(|&v| self.in_one[v]).collect()
    }

    pub fn part_two(&self) -> Vec<Vertex> {
        (0..self.in_one.len()).filter(|&v| !self.in_one[v]).collect()
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition { in_one: self.in_one.iter().map(|b| !b).collect() }
    }

    /// `"v1,v2|w"`.
    pub fn text(&self, g: &RibbonGraph) -> String {
        let names = |vs: Vec<Vertex>| vs.into_iter().map(|v| g.vertex_id(v).to_string()).collect::<Vec<_>>().join(",");
        format!("{}|{}", names(self.part_one()), names(self.part_two()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryDecomposition {
    pub faces: Vec<Vec<HalfEdge>>,
    /// Indices into `faces`.
    pub bigon_faces: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1() -> RibbonGraph {
        RibbonGraph::build(
            &[("v1", 1), ("v2", 2), ("w", 1)],
            &[("v1", &["α"]), ("v2", &["β"]), ("w", &["δ", "γ"])],
            &[("α", "δ"), ("β", "γ")],
        )
        .unwrap()
    }

    fn dbl() -> RibbonGraph {
        RibbonGraph::build(&[("v", 1), ("w", 1)], &[("v", &["a", "a'"]), ("w", &["b", "b'"])], &[("a", "b"), ("a'", "b'")]).unwrap()
    }

    #[test]
    fn ex1_counts() {
        let g = ex1();
        assert_eq!((g.vertex_count(), g.half_edge_count(), g.edge_count()), (3, 4, 2));
        assert_eq!(g.valency_sum(), 2 * g.edge_count());
        let bp = g.bipartition().unwrap();
        assert_eq!(bp.text(&g), "v1,v2|w");
        assert_eq!(g.spanning_tree().len(), 2);
        let faces = g.boundary_walks();
        assert_eq!(faces.faces.len(), 1);
        assert_eq!(faces.faces[0].len(), 4);
        assert!(faces.bigon_faces.is_empty());
    }

    #[test]
    fn double_edge() {
        let g = dbl();
        assert_eq!(g.bipartition().unwrap().text(&g), "v|w");
        assert_eq!(g.spanning_tree().len(), 1);
        assert_eq!(g.non_tree_edges().len(), 1);
        assert_eq!(g.boundary_walks().bigon_faces.len(), 2);
    }

    #[test]
    fn truncated_single_edge_is_not_a_bigon() {
        let g = RibbonGraph::build(&[("u", 1), ("v", 3)], &[("u", &["y"]), ("v", &["x"])], &[("x", "y")]).unwrap();
        let b = g.boundary_walks();
        assert_eq!(b.faces.len(), 1);
        assert!(b.bigon_faces.is_empty());
        let g = RibbonGraph::build(&[("u", 2), ("v", 3)], &[("u", &["y"]), ("v", &["x"])], &[("x", "y")]).unwrap();
        assert_eq!(g.boundary_walks().bigon_faces.len(), 1);
    }

    #[test]
    fn loops_are_not_bipartite() {
        let g = RibbonGraph::build(&[("v", 1)], &[("v", &["x", "y"])], &[("x", "y")]).unwrap();
        assert!(matches!(g.bipartition(), Err(Error::NonBipartite { .. })));
        let tri = RibbonGraph::build(
            &[("a", 1), ("b", 1), ("c", 1)],
            &[("a", &["a1", "a2"]), ("b", &["b1", "b2"]), ("c", &["c1", "c2"])],
            &[("a1", "b2"), ("b1", "c2"), ("c1", "a2")],
        )
        .unwrap();
        match tri.bipartition() {
            Err(Error::NonBipartite { witness }) => assert_eq!(witness.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_documents() {
        let fixed = r#"{"vertices":[{"id":"v","multiplicity":1}],"half_edges":["h1"],"incidence":{"h1":"v"},"pairing":[["h1","h1"]],"rotation":{"v":["h1"]}}"#;
        assert!(matches!(RibbonGraph::from_json(fixed), Err(Error::InvalidInvolution(_))));
        let dup = r#"{"vertices":[{"id":"v","multiplicity":1},{"id":"v","multiplicity":1}],"half_edges":[],"incidence":{},"pairing":[],"rotation":{}}"#;
        assert!(matches!(RibbonGraph::from_json(dup), Err(Error::Schema(_))));
        let dup_key = r#"{"vertices":[{"id":"v","multiplicity":1}],"half_edges":["a","b"],"incidence":{"a":"v","a":"v","b":"v"},"pairing":[["a","b"]],"rotation":{"v":["a","b"]}}"#;
        assert!(matches!(RibbonGraph::from_json(dup_key), Err(Error::Schema(_))));
        let bad_rot = r#"{"vertices":[{"id":"u","multiplicity":1},{"id":"v","multiplicity":1}],"half_edges":["a","b"],"incidence":{"a":"u","b":"v"},"pairing":[["a","b"]],"rotation":{"u":["a","b"],"v":[]}}"#;
        assert!(matches!(RibbonGraph::from_json(bad_rot), Err(Error::InvalidRotation(_))));
        let split = RibbonGraph::build(
            &[("a", 1), ("b", 1), ("c", 1), ("d", 1)],
            &[("a", &["a1"]), ("b", &["b1"]), ("c", &["c1"]), ("d", &["d1"])],
            &[("a1", "b1"), ("c1", "d1")],
        );
        assert_eq!(split, Err(Error::Disconnected));
    }

    #[test]
    fn explicit_bipartitions() {
        let g = ex1();
        let bp = g.parse_bipartition("w|v1,v2").unwrap();
        assert_eq!(bp, g.bipartition().unwrap().swapped());
        assert!(matches!(g.parse_bipartition("v1|v2,w"), Err(Error::InvalidBipartition(_))));
        assert!(matches!(g.parse_bipartition("v1|w"), Err(Error::InvalidBipartition(_))));
    }

    #[test]
    fn json_round_trip() {
        for g in [ex1(), dbl()] {
            let text = g.to_json();
            assert_eq!(RibbonGraph::from_json(&text).unwrap(), g);
        }
    }
}
