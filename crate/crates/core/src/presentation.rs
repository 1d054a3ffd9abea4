//! Brauer quivers, their defining relations, and reduction systems.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::pathalg::{
    parse_element, parse_path, rat, AlgebraElement, Arrow, ArrowId, Coefficient, Path, Quiver, Rational, RationalElement,
};
use crate::ribbon::{Bipartition, Edge, HalfEdge, RibbonGraph, Vertex};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationType {
    /// `αβ` with `β ≠ σ(α)`, after substituting deleted loops.
    I,
    /// `C^m − ε C'^m` around the two ends of an edge.
    II,
    /// `C_α^m α`.
    III,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub kind: RelationType,
    pub element: RationalElement,
}

/// The quiver of a Brauer graph with its relations. Loops at some truncated
/// vertices are removed; see [`BrauerPresentation::build`].
#[derive(Clone, Debug)]
pub struct BrauerPresentation {
    graph: RibbonGraph,
    bipartition: Option<Bipartition>,
    quiver: Arc<Quiver>,
    arrow_of: Vec<Option<ArrowId>>,
    half_edge_of: Vec<HalfEdge>,
    deleted: Vec<HalfEdge>,
    signs: Vec<i8>,
    relations: Vec<Relation>,
}

impl BrauerPresentation {
    /// Build the presentation. With a bipartition only loops at truncated
    /// `V₁` vertices are deleted; without one every truncated loop is,
    /// except that when both ends of an edge are truncated only the smaller
    /// vertex loses its loop. `omega` gives the integer per edge (in edge
    /// order) whose parity twists the commutativity relation.
    pub fn build(g: &RibbonGraph, bp: Option<&Bipartition>, omega: Option<&[i64]>) -> Result<Self> {
        if let Some(bp) = bp {
            g.check_bipartition(bp)?;
        }
        let signs: Vec<i8> = match omega {
            None => vec![1; g.edge_count()],
            Some(w) if w.len() == g.edge_count() => w.iter().map(|x| if x.rem_euclid(2) == 0 { 1 } else { -1 }).collect(),
            Some(_) => return Err(Error::Schema("ω needs one entry per edge".into())),
        };

        let mut deleted = Vec::new();
        for v in 0..g.vertex_count() {
            if !g.is_truncated(v) {
                continue;
            }
            let h = g.half_edges_at(v)[0];
            let other = g.vertex_of(g.iota(h));
            let delete = match bp {
                Some(bp) => bp.in_part_one(v),
                None => !(g.is_truncated(other) && other < v),
            };
            if delete {
                deleted.push(h);
            }
        }

        let names: Vec<String> = (0..g.edge_count()).map(|e| g.edge_name(e)).collect();
        let mut arrows = Vec::new();
        let mut arrow_of = vec![None; g.half_edge_count()];
        let mut half_edge_of = Vec::new();
        for h in 0..g.half_edge_count() {
            if deleted.contains(&h) {
                continue;
            }
            arrow_of[h] = Some(arrows.len());
            half_edge_of.push(h);
            arrows.push(Arrow {
                name: g.half_edge_id(h).to_string(),
                source: g.edge_of(h),
                target: g.edge_of(g.succ(h)),
            });
        }
        let sigma: Vec<ArrowId> = half_edge_of.iter().map(|&h| arrow_of[g.pred(h)].expect("σ stays inside Q′")).collect();
        let quiver = Quiver::new(names, arrows)?.with_sigma(sigma)?;

        let mut p = BrauerPresentation {
            graph: g.clone(),
            bipartition: bp.cloned(),
            quiver: Arc::new(quiver),
            arrow_of,
            half_edge_of,
            deleted,
            signs,
            relations: Vec::new(),
        };
        p.relations = p.make_relations();
        Ok(p)
    }

    fn make_relations(&self) -> Vec<Relation> {
        let g = &self.graph;
        let q = &self.quiver;
        let el = |p: Path| RationalElement::from_path(p, ());
        let mut out = Vec::new();

        for (a, b) in q.composable_pairs() {
            if q.sigma(a) != Some(b) {
                let p = Path::from_arrows(q, &[a, b]).unwrap();
                out.push(Relation { kind: RelationType::I, element: el(p) });
            }
        }
        // a deleted loop β equals ε·C^m of the other end
        for &k in &self.deleted {
            let l = g.iota(k);
            let Some(c) = self.max_cycle(l) else { continue };
            let into = self.arrow_of[g.pred(l)].unwrap();
            let out_of = self.arrow_of[l].unwrap();
            for p in [
                c.concat(&Path::arrow(q, into)).unwrap(),
                Path::arrow(q, out_of).concat(&c).unwrap(),
            ] {
                out.push(Relation { kind: RelationType::I, element: el(p) });
            }
        }
        for e in 0..g.edge_count() {
            let (h, l) = g.edge(e);
            let (Some(ch), Some(cl)) = (self.max_cycle(h), self.max_cycle(l)) else { continue };
            let sign = rat(self.signs[e] as i64);
            let rel = el(ch).sub(&RationalElement::from_term(cl, sign, ())).unwrap();
            out.push(Relation { kind: RelationType::II, element: rel });
        }
        for a in 0..q.arrow_count() {
            let h = self.half_edge_of[a];
            let c = q.sigma_cycle(a).unwrap().power(g.multiplicity(g.vertex_of(h)) as usize).unwrap();
            let p = c.concat(&Path::arrow(q, a)).unwrap();
            out.push(Relation { kind: RelationType::III, element: el(p) });
        }
        out
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Half-edges whose loops were removed.
    pub fn deleted_loops(&self) -> &[HalfEdge] {
        &self.deleted
    }

    pub fn sign(&self, e: Edge) -> i8 {
        self.signs[e]
    }

    pub fn arrow_of(&self, h: HalfEdge) -> Option<ArrowId> {
        self.arrow_of[h]
    }

    pub fn half_edge_of(&self, a: ArrowId) -> HalfEdge {
        self.half_edge_of[a]
    }

    /// The cycle `C` at the edge of `h` going once around `s(h)`, i.e.
    /// `C_{α_{h⁻}}`. `None` if that loop was deleted.
    pub fn cycle(&self, h: HalfEdge) -> Option<Path> {
        let a = self.arrow_of[self.graph.pred(h)]?;
        self.quiver.sigma_cycle(a)
    }

    /// `C^{m(s(h))}` at the edge of `h`.
    pub fn max_cycle(&self, h: HalfEdge) -> Option<Path> {
        self.cycle(h)?.power(self.graph.multiplicity(self.graph.vertex_of(h)) as usize)
    }

    /// Weight of each arrow for the admissible order: `W = 1 + Σ m·val` on
    /// arrows around `V₁`, `1` around `V₂`.
    pub fn arrow_weights(&self, bp: &Bipartition) -> Vec<u64> {
        let g = &self.graph;
        let big = 1 + (0..g.vertex_count()).map(|v| g.multiplicity(v) as u64 * g.valency(v) as u64).sum::<u64>();
        self.half_edge_of
            .iter()
            .map(|&h| if bp.in_part_one(g.vertex_of(h)) { big } else { 1 })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// `(C_{V₁}^m, ε C_{V₂}^m)` for an edge.
    TypeA { edge: Edge },
    /// `(C^m α_h, 0)` for a half-edge at a `V₂` vertex.
    TypeB { half_edge: HalfEdge },
    /// `(αβ, 0)` with `β ≠ σ(α)`.
    TypeC,
    /// Supplied by the user.
    User,
}

impl RuleKind {
    pub fn tag(&self) -> &'static str {
        match self {
            RuleKind::TypeA { .. } => "a",
            RuleKind::TypeB { .. } => "b",
            RuleKind::TypeC => "c",
            RuleKind::User => "user",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rule<C: Coefficient> {
    pub tip: Path,
    pub replacement: AlgebraElement<C>,
    pub kind: RuleKind,
}

/// Rewriting rules `tip → replacement` over a quiver.
#[derive(Clone, Debug)]
pub struct ReductionSystem<C: Coefficient> {
    quiver: Arc<Quiver>,
    ctx: C::Context,
    rules: Vec<Rule<C>>,
    index: HashMap<Vec<u32>, usize>,
    tip_lengths: Vec<usize>,
    length_cap: usize,
    step_cap: usize,
}

pub const DEFAULT_STEP_CAP: usize = 2_000_000;

impl<C: Coefficient> ReductionSystem<C> {
    /// Validate and index the rules: tips have length at least 2, no tip
    /// sits inside another, and replacements are parallel and irreducible.
    pub fn new(quiver: Arc<Quiver>, rules: Vec<Rule<C>>, ctx: C::Context) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            if r.tip.len() < 2 {
                return Err(Error::InvalidReductionSystem(format!("tip {} is shorter than 2", r.tip.text(&quiver))));
            }
            if index.insert(r.tip.arrow_ids().to_vec(), i).is_some() {
                return Err(Error::InvalidReductionSystem(format!("tip {} appears twice", r.tip.text(&quiver))));
            }
        }
        let mut tip_lengths: Vec<usize> = rules.iter().map(|r| r.tip.len()).collect();
        tip_lengths.sort_unstable();
        tip_lengths.dedup();
        let max_tip = tip_lengths.last().copied().unwrap_or(0);
        let rs = ReductionSystem {
            quiver,
            ctx,
            rules,
            index,
            tip_lengths,
            length_cap: 2 * max_tip + 2,
            step_cap: DEFAULT_STEP_CAP,
        };
        for (i, r) in rs.rules.iter().enumerate() {
            if let Some(j) = rs.find_tip(r.tip.arrow_ids(), Some(i)) {
                return Err(Error::InvalidReductionSystem(format!(
                    "tip {} contains tip {}",
                    r.tip.text(&rs.quiver),
                    rs.rules[j].tip.text(&rs.quiver)
                )));
            }
            if r.replacement.context() != ctx {
                return Err(Error::ScalarContextMismatch);
            }
            for p in r.replacement.paths() {
                if !p.is_parallel_to(&r.tip) {
                    return Err(Error::InvalidReductionSystem(format!(
                        "{} is not parallel to tip {}",
                        p.text(&rs.quiver),
                        r.tip.text(&rs.quiver)
                    )));
                }
                if rs.find_tip(p.arrow_ids(), None).is_some() {
                    return Err(Error::InvalidReductionSystem(format!(
                        "replacement of {} is reducible",
                        r.tip.text(&rs.quiver)
                    )));
                }
            }
        }
        Ok(rs)
    }

    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.length_cap = cap;
        self
    }

    pub fn with_step_cap(mut self, cap: usize) -> Self {
        self.step_cap = cap;
        self
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn context(&self) -> C::Context {
        self.ctx
    }

    pub fn rules(&self) -> &[Rule<C>] {
        &self.rules
    }

    pub fn rule(&self, i: usize) -> &Rule<C> {
        &self.rules[i]
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    pub fn step_cap(&self) -> usize {
        self.step_cap
    }

    pub fn tip_index(&self, tip: &[u32]) -> Option<usize> {
        self.index.get(tip).copied()
    }

    /// Leftmost tip occurrence `(start, rule)` inside `arrows`, skipping the
    /// rule `skip_whole` when it would match the whole word.
    pub(crate) fn find_tip(&self, arrows: &[u32], skip_whole: Option<usize>) -> Option<usize> {
        self.find_occurrence(arrows, skip_whole).map(|(_, r)| r)
    }

    pub(crate) fn find_occurrence(&self, arrows: &[u32], skip_whole: Option<usize>) -> Option<(usize, usize)> {
        for start in 0..arrows.len() {
            if let Some(r) = self.tip_at(arrows, start, skip_whole) {
                return Some((start, r));
            }
        }
        None
    }

    /// The tip starting at position `start`, if any.
    pub(crate) fn tip_at(&self, arrows: &[u32], start: usize, skip_whole: Option<usize>) -> Option<usize> {
        for &l in &self.tip_lengths {
            if start + l > arrows.len() {
                break;
            }
            if let Some(&r) = self.index.get(&arrows[start..start + l]) {
                if skip_whole == Some(r) && l == arrows.len() {
                    continue;
                }
                return Some(r);
            }
        }
        None
    }

    /// All tip occurrences `(start, rule)` in `arrows`.
    pub(crate) fn occurrences(&self, arrows: &[u32]) -> Vec<(usize, usize)> {
        (0..arrows.len()).filter_map(|s| self.tip_at(arrows, s, None).map(|r| (s, r))).collect()
    }

    pub fn is_irreducible(&self, p: &Path) -> bool {
        self.find_tip(p.arrow_ids(), None).is_none()
    }

    /// Same tips, new replacements over a possibly different coefficient
    /// ring; `f` receives the rule index.
    pub fn map_rules<D: Coefficient>(
        &self,
        ctx: D::Context,
        mut f: impl FnMut(usize, &Rule<C>) -> AlgebraElement<D>,
    ) -> Result<ReductionSystem<D>> {
        let rules = self
            .rules
            .iter()
            .enumerate()
            .map(|(i, r)| Rule { tip: r.tip.clone(), replacement: f(i, r), kind: r.kind })
            .collect();
        Ok(ReductionSystem::<D>::new(self.quiver.clone(), rules, ctx)?
            .with_length_cap(self.length_cap)
            .with_step_cap(self.step_cap))
    }

    /// JSON array of `{"tip", "replacement", "kind"}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rules
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "tip": r.tip.text(&self.quiver),
                        "replacement": r.replacement.text(&self.quiver),
                        "kind": r.kind.tag(),
                    })
                })
                .collect(),
        )
    }
}

impl ReductionSystem<Rational> {
    /// Rules from text pairs, e.g. `("x*y", "y*x")`.
    pub fn from_text(quiver: Arc<Quiver>, rules: &[(&str, &str)]) -> Result<Self> {
        let rules = rules
            .iter()
            .map(|(t, r)| {
                Ok(Rule { tip: parse_path(&quiver, t)?, replacement: parse_element(&quiver, r)?, kind: RuleKind::User })
            })
            .collect::<Result<Vec<_>>>()?;
        ReductionSystem::new(quiver, rules, ())
    }

    /// Parse a rule document: a JSON array of `{"tip", "replacement"}`.
    pub fn from_json(quiver: Arc<Quiver>, text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct RuleDoc {
            tip: String,
            replacement: String,
        }
        let docs: Vec<RuleDoc> = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        let pairs: Vec<(&str, &str)> = docs.iter().map(|d| (d.tip.as_str(), d.replacement.as_str())).collect();
        Self::from_text(quiver, &pairs)
    }
}

/// The reduction system of a bipartite Brauer graph: rules of type (a),
/// (b) and (c), in that order.
pub fn build_reduction_system(p: &BrauerPresentation) -> Result<ReductionSystem<Rational>> {
    let bp = p
        .bipartition()
        .ok_or_else(|| Error::NotApplicable("the presentation was built without a bipartition".into()))?;
    let g = p.graph();
    let q = p.quiver();
    let mut rules = Vec::new();
    for e in 0..g.edge_count() {
        let (h, l) = g.edge(e);
        let (k, l) = if bp.in_part_one(g.vertex_of(h)) { (h, l) } else { (l, h) };
        let Some(tip) = p.max_cycle(k) else { continue };
        let repl = p.max_cycle(l).expect("V₂ loops are kept");
        rules.push(Rule {
            tip,
            replacement: RationalElement::from_term(repl, rat(p.sign(e) as i64), ()),
            kind: RuleKind::TypeA { edge: e },
        });
    }
    for h in 0..g.half_edge_count() {
        if bp.in_part_one(g.vertex_of(h)) {
            continue;
        }
        let a = p.arrow_of(h).unwrap();
        let c = q.sigma_cycle(a).unwrap().power(g.multiplicity(g.vertex_of(h)) as usize).unwrap();
        rules.push(Rule {
            tip: c.concat(&Path::arrow(q, a)).unwrap(),
            replacement: RationalElement::zero(()),
            kind: RuleKind::TypeB { half_edge: h },
        });
    }
    for (a, b) in q.composable_pairs() {
        if q.sigma(a) != Some(b) {
            rules.push(Rule {
                tip: Path::from_arrows(q, &[a, b]).unwrap(),
                replacement: RationalElement::zero(()),
                kind: RuleKind::TypeC,
            });
        }
    }
    let rs = ReductionSystem::new(q.clone(), rules, ())?.with_length_cap(length_cap(g));
    let weights = p.arrow_weights(bp);
    certify_order(&rs, &weights).map_err(Error::InvalidReductionSystem)?;
    Ok(rs)
}

/// Ordered pairs `(α, β)` with `α ≠ β` such that `αβ` is a cycle and both
/// `αβ` and `βα` vanish in the algebra. The system must pass the diamond
/// check.
pub fn two_cycle_set(rs: &ReductionSystem<Rational>) -> Result<Vec<(ArrowId, ArrowId)>> {
    if !crate::rewrite::check_diamond(rs)?.passed() {
        return Err(Error::RequiresConfluentSystem);
    }
    let q = rs.quiver();
    let mut out = Vec::new();
    for a in 0..q.arrow_count() {
        for b in 0..q.arrow_count() {
            if a == b {
                continue;
            }
            let (Some(ab), Some(ba)) = (Path::from_arrows(q, &[a, b]), Path::from_arrows(q, &[b, a])) else { continue };
            if rs.reduce_path(&ab)?.is_zero() && rs.reduce_path(&ba)?.is_zero() {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// `2·max_v m(v)·val(v) + 2`: every irreducible path is a subpath of some
/// `C^m`, so nothing longer survives.
pub fn length_cap(g: &RibbonGraph) -> usize {
    let longest = (0..g.vertex_count()).map(|v| g.multiplicity(v) as usize * g.valency(v)).max().unwrap_or(0);
    2 * longest + 2
}

/// Weight-lexicographic comparison: total weight, then length, then arrows.
pub fn weight_lex(a: &Path, b: &Path, weights: &[u64]) -> Ordering {
    let w = |p: &Path| p.arrow_ids().iter().map(|&x| weights[x as usize]).sum::<u64>();
    w(a).cmp(&w(b)).then_with(|| a.len().cmp(&b.len())).then_with(|| a.arrow_ids().cmp(b.arrow_ids()))
}

/// Check that every replacement term is strictly below its tip.
pub fn certify_order<C: Coefficient>(rs: &ReductionSystem<C>, weights: &[u64]) -> std::result::Result<(), String> {
    for r in rs.rules() {
        for p in r.replacement.paths() {
            if weight_lex(p, &r.tip, weights) != Ordering::Less {
                return Err(format!(
                    "{} is not below tip {}",
                    p.text(rs.quiver()),
                    r.tip.text(rs.quiver())
                ));
            }
        }
    }
    Ok(())
}

/// Vertices of the graph whose cycles are tips of type (a) rules.
pub fn tip_side(p: &BrauerPresentation) -> Vec<Vertex> {
    p.bipartition().map(|bp| bp.part_one()).unwrap_or_default()
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

    fn rule_texts(rs: &ReductionSystem<Rational>) -> Vec<(String, String)> {
        rs.rules().iter().map(|r| (r.tip.text(rs.quiver()), r.replacement.text(rs.quiver()))).collect()
    }

    #[test]
    fn ex1_quiver_shape() {
        let g = ex1();
        let p = BrauerPresentation::build(&g, None, None).unwrap();
        let q = p.quiver();
        let d = q.arrow(q.arrow_index("δ").unwrap());
        let c = q.arrow(q.arrow_index("γ").unwrap());
        assert_eq!((q.vertex_name(d.source), q.vertex_name(d.target)), ("1", "2"));
        assert_eq!((q.vertex_name(c.source), q.vertex_name(c.target)), ("2", "1"));
        // no bipartition: v1's loop is truncated and goes
        assert_eq!(p.deleted_loops().len(), 1);
    }

    #[test]
    fn ex1_systems() {
        let g = ex1();
        let bp = g.parse_bipartition("w|v1,v2").unwrap();
        let p = BrauerPresentation::build(&g, Some(&bp), None).unwrap();
        let rs = build_reduction_system(&p).unwrap();
        let got = rule_texts(&rs);
        let want = [
            ("γ*δ", "α"),
            ("δ*γ", "β*β"),
            ("α*α", "0"),
            ("β*β*β", "0"),
            ("α*γ", "0"),
            ("β*δ", "0"),
            ("γ*β", "0"),
            ("δ*α", "0"),
        ];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        let mut want: Vec<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        want.sort();
        assert_eq!(got_sorted, want);

        let bp = g.bipartition().unwrap();
        let p = BrauerPresentation::build(&g, Some(&bp), None).unwrap();
        let rs = build_reduction_system(&p).unwrap();
        let mut got = rule_texts(&rs);
        got.sort();
        let mut want: Vec<(String, String)> = [("β*β", "δ*γ"), ("γ*δ*γ", "0"), ("δ*γ*δ", "0"), ("β*δ", "0"), ("γ*β", "0")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn local_algebra() {
        for m in 1..5u32 {
            let g = RibbonGraph::build(&[("u", 1), ("v", m)], &[("u", &["y"]), ("v", &["x"])], &[("x", "y")]).unwrap();
            let bp = g.bipartition().unwrap();
            let p = BrauerPresentation::build(&g, Some(&bp), None).unwrap();
            let rs = build_reduction_system(&p).unwrap();
            assert_eq!(rs.len(), 1);
            assert_eq!(rs.rule(0).tip.len(), m as usize + 1);
            assert!(rs.rule(0).replacement.is_zero());
        }
    }

    #[test]
    fn rejects_nested_tips() {
        let q = Arc::new(Quiver::new(vec!["1".into()], vec![Arrow { name: "x".into(), source: 0, target: 0 }]).unwrap());
        let err = ReductionSystem::from_text(q.clone(), &[("x*x", "0"), ("x*x*x", "0")]).unwrap_err();
        assert!(matches!(err, Error::InvalidReductionSystem(_)));
        let err = ReductionSystem::from_text(q, &[("x*x", "x*x")]).unwrap_err();
        assert!(matches!(err, Error::InvalidReductionSystem(_)));
    }

    #[test]
    fn signed_commutativity() {
        let g = RibbonGraph::build(&[("v", 1), ("w", 1)], &[("v", &["a", "a'"]), ("w", &["b", "b'"])], &[("a", "b"), ("a'", "b'")])
            .unwrap();
        let bp = g.bipartition().unwrap();
        let p = BrauerPresentation::build(&g, Some(&bp), Some(&[0, 3])).unwrap();
        let rs = build_reduction_system(&p).unwrap();
        let signs: Vec<String> = rs
            .rules()
            .iter()
            .filter(|r| matches!(r.kind, RuleKind::TypeA { .. }))
            .map(|r| r.replacement.text(rs.quiver()))
            .collect();
        assert_eq!(signs, vec!["b'*b", "-b*b'"]);
    }
}
