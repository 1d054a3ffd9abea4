use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::Error;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver. When produced from a ribbon graph the vertices are the
/// edges of the graph, the arrows are its half-edges, and `sigma` records the
/// permutation `α_h ↦ α_{h⁻}` whose orbits are the ribbon-graph vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    sigma: Option<Vec<ArrowId>>,
    vertex_lookup: HashMap<String, VertexId>,
    arrow_lookup: HashMap<String, ArrowId>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, Error> {
        let mut vertex_lookup = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_lookup.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        let mut arrow_lookup = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow {:?} has an unknown endpoint", a.name)));
            }
            if a.name.is_empty() || a.name.contains(['*', '+', ' ', '(', ')']) {
                return Err(Error::InvalidQuiver(format!("arrow name {:?} is not printable in path text", a.name)));
            }
            if arrow_lookup.insert(a.name.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {:?}", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows, sigma: None, vertex_lookup, arrow_lookup })
    }

    /// Attach the successor permutation σ. It must be a permutation that
    /// maps every arrow to one composable before it (`t(σ(α)) = o(α)`).
    pub fn with_sigma(mut self, sigma: Vec<ArrowId>) -> Result<Self, Error> {
        if sigma.len() != self.arrows.len() {
            return Err(Error::InvalidQuiver("σ has the wrong length".into()));
        }
        let mut seen = vec![false; sigma.len()];
        for (a, &s) in sigma.iter().enumerate() {
            if s >= sigma.len() || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidQuiver("σ is not a permutation".into()));
            }
            if self.arrows[s].target != self.arrows[a].source {
                return Err(Error::InvalidQuiver(format!(
                    "σ({}) = {} is not composable before it",
                    self.arrows[a].name, self.arrows[s].name
                )));
            }
        }
        self.sigma = Some(sigma);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<VertexId> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn arrow_index(&self, name: &str) -> Option<ArrowId> {
        self.arrow_lookup.get(name).copied()
    }

    pub fn sigma(&self, a: ArrowId) -> Option<ArrowId> {
        self.sigma.as_ref().map(|s| s[a])
    }

    pub fn has_sigma(&self) -> bool {
        self.sigma.is_some()
    }

    /// The cycle `C_α = α σ(α) ⋯ σ^l(α)` (written order, `α` applied last).
    pub fn sigma_cycle(&self, a: ArrowId) -> Option<Path> {
        let sigma = self.sigma.as_ref()?;
        let mut arrows = vec![a];
        let mut cur = sigma[a];
        while cur != a {
            arrows.push(cur);
            cur = sigma[cur];
        }
        Path::from_arrows(self, &arrows)
    }

    /// Orbits of σ, each listed from its smallest arrow.
    pub fn sigma_orbits(&self) -> Vec<Vec<ArrowId>> {
        let Some(sigma) = &self.sigma else { return Vec::new() };
        let mut seen = vec![false; sigma.len()];
        let mut orbits = Vec::new();
        for start in 0..sigma.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                orbit.push(cur);
                cur = sigma[cur];
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// All composable arrow pairs `(α, β)` meaning the written path `αβ`
    /// (`β` first, then `α`).
    pub fn composable_pairs(&self) -> impl Iterator<Item = (ArrowId, ArrowId)> + '_ {
        (0..self.arrows.len()).flat_map(move |a| {
            (0..self.arrows.len())
                .filter(move |&b| self.arrows[b].target == self.arrows[a].source)
                .map(move |b| (a, b))
        })
    }
}

/// A path in a quiver, stored in written (right-to-left) order: `arrows[0]`
/// is the last arrow applied. A path of length zero is the idempotent at
/// `origin == terminus`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    origin: VertexId,
    terminus: VertexId,
    arrows: Vec<u32>,
}

impl Path {
    pub fn idempotent(v: VertexId) -> Path {
        Path { origin: v, terminus: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Path {
        let arr = q.arrow(a);
        Path { origin: arr.source, terminus: arr.target, arrows: vec![a as u32] }
    }

    /// Build a path from arrows in written order; `None` if not composable
    /// or empty.
    pub fn from_arrows(q: &Quiver, arrows: &[ArrowId]) -> Option<Path> {
        let (&first, rest) = arrows.split_first()?;
        let mut origin = q.arrow(first).source;
        for &a in rest {
            if q.arrow(a).target != origin {
                return None;
            }
            origin = q.arrow(a).source;
        }
        Some(Path {
            origin,
            terminus: q.arrow(first).target,
            arrows: arrows.iter().map(|&a| a as u32).collect(),
        })
    }

    pub fn origin(&self) -> VertexId {
        self.origin
    }

    pub fn terminus(&self) -> VertexId {
        self.terminus
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_idempotent(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrow_ids(&self) -> &[u32] {
        &self.arrows
    }

    pub fn is_parallel_to(&self, other: &Path) -> bool {
        self.origin == other.origin && self.terminus == other.terminus
    }

    /// `self · other`: first walk `other`, then `self`. `None` is the formal
    /// zero for non-composable pairs.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.origin != other.terminus {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + other.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path { origin: other.origin, terminus: self.terminus, arrows })
    }

    /// `self^k`, only meaningful for cycles.
    pub fn power(&self, k: usize) -> Option<Path> {
        if k == 0 {
            return Some(Path::idempotent(self.origin));
        }
        if self.origin != self.terminus && k > 1 {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() * k);
        for _ in 0..k {
            arrows.extend_from_slice(&self.arrows);
        }
        Some(Path { origin: self.origin, terminus: self.terminus, arrows })
    }

    /// Subpath on written positions `range`, with endpoints recomputed.
    pub fn slice(&self, q: &Quiver, start: usize, end: usize) -> Path {
        if start == end {
            // The vertex sitting at written position `start`.
            let v = if start == 0 {
                self.terminus
            } else if start == self.arrows.len() {
                self.origin
            } else {
                q.arrow(self.arrows[start - 1] as usize).source
            };
            return Path::idempotent(v);
        }
        let arrows: Vec<u32> = self.arrows[start..end].to_vec();
        let terminus = q.arrow(arrows[0] as usize).target;
        let origin = q.arrow(*arrows.last().unwrap() as usize).source;
        Path { origin, terminus, arrows }
    }

    /// Whether `needle` occurs as a contiguous subpath.
    pub fn contains_subpath(&self, needle: &Path) -> bool {
        if needle.arrows.is_empty() {
            return false;
        }
        self.arrows.windows(needle.arrows.len()).any(|w| w == needle.arrows.as_slice())
    }

    pub fn text(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e({})", q.vertex_name(self.origin))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a as usize).name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.path.text(self.quiver))
    }
}

impl Ord for Path {
    // length first, then arrows, then endpoints; idempotents sort by vertex
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.origin.cmp(&other.origin))
            .then_with(|| self.terminus.cmp(&other.terminus))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
