//! Second Hochschild cohomology through a reduction system: 2-cochains are
//! values on tips, cocycles are first-order deformations that keep every
//! ambiguity resolvable, coboundaries come from 1-cochains on arrows.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::exactla::{RationalMatrix, Subspace};
use crate::pathalg::{AlgebraElement, ArrowId, Coefficient, FirstOrder, Path, Rational, RationalElement};
use crate::presentation::{two_cycle_set, BrauerPresentation, ReductionSystem, RuleKind};
use crate::rewrite::{enumerate_ambiguities, FiniteDimAlgebra};
use crate::{Error, Result};

/// Values `φ̃_s` indexed like the rules.
pub type TwoCochain = Vec<RationalElement>;
/// Values `ψ(a)` indexed by arrow.
pub type OneCochain = Vec<RationalElement>;

impl FiniteDimAlgebra<Rational> {
    /// Basis indices of irreducible paths parallel to `p`.
    pub fn parallels(&self, p: &Path) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis()[i].is_parallel_to(p)).collect()
    }
}

/// Coordinates `(rule, parallel basis path)` for 2-cochains, rules in
/// stored order and parallels in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainSpace {
    coords: Vec<(usize, usize)>,
    by_rule: Vec<Vec<usize>>,
    lookup: HashMap<(usize, usize), usize>,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(usize, usize)] {
        &self.coords
    }

    /// Coordinate indices belonging to one rule.
    pub fn of_rule(&self, rule: usize) -> &[usize] {
        &self.by_rule[rule]
    }

    pub fn coordinate(&self, rule: usize, basis_index: usize) -> Option<usize> {
        self.lookup.get(&(rule, basis_index)).copied()
    }

    /// Flatten a cochain. Its values must be reduced and parallel.
    pub fn vector(&self, alg: &FiniteDimAlgebra<Rational>, phi: &[RationalElement]) -> Result<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (rule, x) in phi.iter().enumerate() {
            for (i, c) in alg.coords(x)? {
                let k = self.coordinate(rule, i).ok_or_else(|| {
                    Error::NonParallelCochain(format!(
                        "{} on tip #{rule}",
                        alg.basis()[i].text(alg.quiver())
                    ))
                })?;
                out[k] += c;
            }
        }
        Ok(out)
    }

    pub fn cochain(&self, alg: &FiniteDimAlgebra<Rational>, v: &[Rational]) -> TwoCochain {
        let mut out = vec![RationalElement::zero(()); self.by_rule.len()];
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (rule, i) = self.coords[k];
                out[rule].add_term(alg.basis()[i].clone(), c.clone());
            }
        }
        out
    }
}

pub fn cochain_space(rs: &ReductionSystem<Rational>, alg: &FiniteDimAlgebra<Rational>) -> CochainSpace {
    let mut coords = Vec::new();
    let mut by_rule = Vec::new();
    let mut lookup = HashMap::new();
    for (r, rule) in rs.rules().iter().enumerate() {
        let mut mine = Vec::new();
        for i in alg.parallels(&rule.tip) {
            lookup.insert((r, i), coords.len());
            mine.push(coords.len());
            coords.push((r, i));
        }
        by_rule.push(mine);
    }
    CochainSpace { coords, by_rule, lookup }
}

/// Coordinates `(arrow, parallel basis path)` for 1-cochains.
pub fn one_cochain_coords(alg: &FiniteDimAlgebra<Rational>) -> Vec<(ArrowId, usize)> {
    let q = alg.quiver();
    (0..q.arrow_count())
        .flat_map(|a| alg.parallels(&Path::arrow(q, a)).into_iter().map(move |i| (a, i)))
        .collect()
}

/// `∂¹ψ` evaluated on every tip: for each path `α_m⋯α_1` of `s − φ_s`,
/// the sum over positions of `π(α_m⋯ψ(α_i)⋯α_1)`.
pub fn coboundary(rs: &ReductionSystem<Rational>, psi: &[RationalElement]) -> Result<TwoCochain> {
    let q = rs.quiver();
    rs.rules()
        .iter()
        .map(|rule| {
            let mut acc = derivation(q, psi, &rule.tip, &Rational::one());
            for (p, c) in rule.replacement.terms() {
                acc = acc.sub(&derivation(q, psi, p, c))?;
            }
            rs.reduce(&acc)
        })
        .collect()
}

fn derivation(q: &crate::pathalg::Quiver, psi: &[RationalElement], p: &Path, c: &Rational) -> RationalElement {
    let mut out = RationalElement::zero(());
    for i in 0..p.len() {
        let left = p.slice(q, 0, i);
        let right = p.slice(q, i + 1, p.len());
        let term = psi[p.arrow_ids()[i] as usize].sandwich(&left, &right).scale(c);
        out = out.add(&term).expect("same context");
    }
    out
}

/// `∂¹ψ` by substituting `a ↦ a + εψ(a)` into `s − φ_s`, multiplying out
/// over first-order scalars and reducing; the `ε` part is the answer.
pub fn coboundary_by_substitution(rs: &ReductionSystem<Rational>, psi: &[RationalElement]) -> Result<TwoCochain> {
    let q = rs.quiver();
    let lifted = lift(rs)?;
    let eps = FirstOrder::unknown(0);
    let shifted: Vec<AlgebraElement<FirstOrder>> = (0..q.arrow_count())
        .map(|a| {
            let mut x = AlgebraElement::from_path(Path::arrow(q, a), ());
            for (p, c) in psi[a].terms() {
                x.add_term(p.clone(), FirstOrder::from_rational(c, ()).times(&eps));
            }
            x
        })
        .collect();
    let expand = |p: &Path| -> Result<AlgebraElement<FirstOrder>> {
        let mut acc = AlgebraElement::from_path(Path::idempotent(p.origin()), ());
        for &a in p.arrow_ids().iter().rev() {
            acc = shifted[a as usize].mul(&acc)?;
        }
        Ok(acc)
    };
    rs.rules()
        .iter()
        .map(|rule| {
            let mut acc = expand(&rule.tip)?;
            for (p, c) in rule.replacement.terms() {
                acc = acc.sub(&expand(p)?.scale(&FirstOrder::from_rational(c, ())))?;
            }
            let red = lifted.reduce(&acc)?;
            let mut out = RationalElement::zero(());
            for (p, c) in red.terms() {
                if let Some(v) = c.linear.get(&0) {
                    out.add_term(p.clone(), v.clone());
                }
            }
            Ok(out)
        })
        .collect()
}

fn lift(rs: &ReductionSystem<Rational>) -> Result<ReductionSystem<FirstOrder>> {
    rs.map_rules((), |_, r| r.replacement.map_coeffs((), |c| FirstOrder::from_rational(c, ())))
}

/// Spanning set of `im ∂¹`, one vector per unit 1-cochain.
pub fn coboundary_image(
    rs: &ReductionSystem<Rational>,
    alg: &FiniteDimAlgebra<Rational>,
    cs: &CochainSpace,
) -> Result<Vec<Vec<Rational>>> {
    let arrows = rs.quiver().arrow_count();
    one_cochain_coords(alg)
        .into_par_iter()
        .map(|(a, i)| {
            let mut psi = vec![RationalElement::zero(()); arrows];
            psi[a] = RationalElement::from_path(alg.basis()[i].clone(), ());
            cs.vector(alg, &coboundary(rs, &psi)?)
        })
        .collect()
}

/// `∂⁰φ(α) = π(α·φ(o(α))) − π(φ(t(α))·α)` for a 0-cochain indexed by quiver
/// vertex.
pub fn coboundary_zero(rs: &ReductionSystem<Rational>, phi: &[RationalElement]) -> Result<OneCochain> {
    let q = rs.quiver();
    (0..q.arrow_count())
        .map(|a| {
            let arrow = RationalElement::from_path(Path::arrow(q, a), ());
            let x = arrow.mul(&phi[q.arrow(a).source])?;
            let y = phi[q.arrow(a).target].mul(&arrow)?;
            rs.reduce(&x.sub(&y)?)
        })
        .collect()
}

/// Kernel of the linearised ambiguity conditions: a cochain is a cocycle
/// iff `s → φ_s + φ̃_s ε` resolves every ambiguity to first order.
pub fn cocycle_space(rs: &ReductionSystem<Rational>, cs: &CochainSpace, alg: &FiniteDimAlgebra<Rational>) -> Result<Subspace> {
    let deformed = rs.map_rules((), |r, rule| {
        let mut x = rule.replacement.map_coeffs((), |c| FirstOrder::from_rational(c, ()));
        for &k in cs.of_rule(r) {
            x.add_term(alg.basis()[cs.coords()[k].1].clone(), FirstOrder::unknown(k));
        }
        x
    })?;
    let rows: Vec<Vec<Rational>> = enumerate_ambiguities(&deformed)
        .par_iter()
        .map(|a| {
            let (l, r) = a.resolve(&deformed)?;
            let diff = l.sub(&r)?;
            Ok(diff
                .terms()
                .filter(|(_, c)| !c.linear.is_empty())
                .map(|(_, c)| {
                    let mut row = vec![Rational::zero(); cs.dim()];
                    for (k, v) in &c.linear {
                        row[*k] = v.clone();
                    }
                    row
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    if rows.is_empty() {
        return Ok(Subspace::span(&RationalMatrix::identity(cs.dim()).to_rows(), cs.dim()));
    }
    let kernel = RationalMatrix::from_rows(rows, cs.dim()).kernel_basis();
    Ok(Subspace::span(&kernel, cs.dim()))
}

/// Closed formula for bipartite graphs: `2 + Σ(m−1) + |E| − |V| + |S₂cyc|`,
/// or for a single edge between two vertices `m₁ + m₂ + 1` when neither
/// multiplicity is 1 and otherwise the other multiplicity.
pub fn hh2_formula(p: &BrauerPresentation, rs: &ReductionSystem<Rational>) -> Result<i64> {
    let g = p.graph();
    if p.bipartition().is_none() {
        return Err(Error::NotApplicable("the formula needs a bipartite graph".into()));
    }
    if g.edge_count() == 1 {
        let (m1, m2) = (g.multiplicity(0) as i64, g.multiplicity(1) as i64);
        return Ok(if m1 != 1 && m2 != 1 {
            m1 + m2 + 1
        } else if m1 == 1 {
            m2
        } else {
            m1
        });
    }
    let extra: i64 = (0..g.vertex_count()).map(|v| g.multiplicity(v) as i64 - 1).sum();
    let cyc = two_cycle_set(rs)?.len() as i64;
    Ok(2 + extra + g.edge_count() as i64 - g.vertex_count() as i64 + cyc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CochainValue {
    pub tip: String,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaggedCochain {
    pub tag: String,
    pub values: Vec<CochainValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HH2Report {
    pub cochain_dim: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub hh2_dim: usize,
    pub formula: Option<i64>,
    pub formula_matches: Option<bool>,
    pub basis: Vec<TaggedCochain>,
}

/// Everything needed to talk about 2-cochains of one confluent system.
pub struct Hochschild<'a> {
    pub rs: &'a ReductionSystem<Rational>,
    pub alg: &'a FiniteDimAlgebra<Rational>,
    pub cochains: CochainSpace,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
}

impl<'a> Hochschild<'a> {
    pub fn new(rs: &'a ReductionSystem<Rational>, alg: &'a FiniteDimAlgebra<Rational>) -> Result<Self> {
        let cochains = cochain_space(rs, alg);
        let cocycles = cocycle_space(rs, &cochains, alg)?;
        let coboundaries = Subspace::span(&coboundary_image(rs, alg, &cochains)?, cochains.dim());
        if !cocycles.contains_subspace(&coboundaries) {
            return Err(Error::NotASubspace);
        }
        Ok(Hochschild { rs, alg, cochains, cocycles, coboundaries })
    }

    pub fn hh2_dim(&self) -> usize {
        self.cocycles.dim() - self.coboundaries.dim()
    }

    /// Cocycle basis vectors (in reduced echelon order) that are
    /// independent modulo coboundaries.
    pub fn generic_basis(&self) -> Vec<Vec<Rational>> {
        let mut acc = self.coboundaries.clone();
        let mut out = Vec::new();
        for v in self.cocycles.basis() {
            if !acc.contains(v) {
                acc = acc.sum(&Subspace::span(std::slice::from_ref(v), self.cochains.dim()));
                out.push(v.clone());
            }
        }
        out
    }

    pub fn describe(&self, tag: &str, phi: &[RationalElement]) -> TaggedCochain {
        let q = self.rs.quiver();
        TaggedCochain {
            tag: tag.into(),
            values: self
                .rs
                .rules()
                .iter()
                .zip(phi)
                .filter(|(_, x)| !x.is_zero())
                .map(|(r, x)| CochainValue { tip: r.tip.text(q), element: x.text(q) })
                .collect(),
        }
    }

    pub fn verify(&self, candidates: &[TwoCochain]) -> Result<BasisCheck> {
        let vecs = candidates.iter().map(|c| self.cochains.vector(self.alg, c)).collect::<Result<Vec<_>>>()?;
        Ok(verify_basis(&vecs, &self.cocycles, &self.coboundaries))
    }

    /// Report with standard cocycles when `p` is given and they form a
    /// basis, a generic basis otherwise.
    pub fn report(&self, p: Option<&BrauerPresentation>) -> Result<HH2Report> {
        let mut formula = None;
        let mut basis = None;
        if let Some(p) = p.filter(|p| p.bipartition().is_some()) {
            formula = Some(hh2_formula(p, self.rs)?);
            if let Ok(std) = standard_cocycles(p, self.rs) {
                let values: Vec<TwoCochain> = std.iter().map(|(_, c)| c.clone()).collect();
                if self.verify(&values)?.is_basis() {
                    basis = Some(std.iter().map(|(t, c)| self.describe(t, c)).collect());
                }
            }
        }
        let basis = basis.unwrap_or_else(|| {
            self.generic_basis().iter().map(|v| self.describe("generic", &self.cochains.cochain(self.alg, v))).collect()
        });
        let hh2_dim = self.hh2_dim();
        Ok(HH2Report {
            cochain_dim: self.cochains.dim(),
            cocycle_dim: self.cocycles.dim(),
            coboundary_dim: self.coboundaries.dim(),
            hh2_dim,
            formula,
            formula_matches: formula.map(|f| f == hh2_dim as i64),
            basis,
        })
    }
}

/// Compute the full report for a confluent system.
pub fn hh2(
    rs: &ReductionSystem<Rational>,
    alg: &FiniteDimAlgebra<Rational>,
    p: Option<&BrauerPresentation>,
) -> Result<HH2Report> {
    Hochschild::new(rs, alg)?.report(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisCheck {
    /// Indices of candidates outside the cocycle space.
    pub not_cocycles: Vec<usize>,
    pub independent: bool,
    pub count: usize,
    pub hh2_dim: usize,
}

impl BasisCheck {
    pub fn is_basis(&self) -> bool {
        self.not_cocycles.is_empty() && self.independent && self.count == self.hh2_dim
    }
}

/// Candidates are cocycles, independent modulo coboundaries, and as many as
/// `dim HH²`.
pub fn verify_basis(candidates: &[Vec<Rational>], cocycles: &Subspace, coboundaries: &Subspace) -> BasisCheck {
    let not_cocycles = (0..candidates.len()).filter(|&i| !cocycles.contains(&candidates[i])).collect();
    let dim = cocycles.ambient_dim();
    let together = coboundaries.sum(&Subspace::span(candidates, dim));
    BasisCheck {
        not_cocycles,
        independent: together.dim() == coboundaries.dim() + candidates.len(),
        count: candidates.len(),
        hh2_dim: cocycles.dim() - coboundaries.dim(),
    }
}

/// The standard cocycles of a bipartite, non-local Brauer graph algebra,
/// tagged `A`, `B`, `C` or `D`, over the rules of
/// [`build_reduction_system`](crate::presentation::build_reduction_system).
pub fn standard_cocycles(p: &BrauerPresentation, rs: &ReductionSystem<Rational>) -> Result<Vec<(String, TwoCochain)>> {
    let bp = p
        .bipartition()
        .ok_or_else(|| Error::NotApplicable("standard cocycles need a bipartition".into()))?;
    let g = p.graph();
    if g.edge_count() == 1 {
        return Err(Error::NotApplicable("local Brauer tree algebra".into()));
    }
    let q = rs.quiver();
    let n = rs.len();
    let zero = || vec![RationalElement::zero(()); n];
    let el = |path: Path| RationalElement::from_path(path, ());
    let mut type_a = HashMap::new();
    let mut type_b = HashMap::new();
    for (i, r) in rs.rules().iter().enumerate() {
        match r.kind {
            RuleKind::TypeA { edge } => {
                type_a.insert(edge, i);
            }
            RuleKind::TypeB { half_edge } => {
                type_b.insert(half_edge, i);
            }
            _ => {}
        }
    }
    let mut out = Vec::new();

    let mut a = zero();
    for &i in type_a.values() {
        a[i] = el(Path::idempotent(rs.rule(i).tip.origin()));
    }
    for (&h, &i) in type_b.iter() {
        a[i] = el(Path::arrow(q, p.arrow_of(h).unwrap())).neg();
    }
    out.push(("A".to_string(), a));

    for v in 0..g.vertex_count() {
        let m = g.multiplicity(v) as usize;
        for k in 1..m {
            let mut phi = zero();
            for &h in g.half_edges_at(v) {
                let e = g.edge_of(h);
                let c = p.cycle(h).unwrap().power(k).unwrap();
                if bp.in_part_one(v) {
                    if let Some(&i) = type_a.get(&e) {
                        phi[i] = el(c);
                    }
                } else {
                    let sign = Rational::from_integer(p.sign(e).into());
                    if let Some(&i) = type_a.get(&e) {
                        phi[i] = RationalElement::from_term(c, sign.clone(), ());
                    }
                    let a = p.arrow_of(h).unwrap();
                    let ca = q.sigma_cycle(a).unwrap().power(k).unwrap().concat(&Path::arrow(q, a)).unwrap();
                    phi[type_b[&h]] = RationalElement::from_term(ca, -sign, ());
                }
            }
            out.push((format!("B:{}:{k}", g.vertex_id(v)), phi));
        }
    }

    for e in g.non_tree_edges() {
        let mut phi = zero();
        if let Some(&i) = type_a.get(&e) {
            phi[i] = rs.rule(i).replacement.clone();
        }
        out.push((format!("C:{}", g.edge_name(e)), phi));
    }

    // each unordered 2-cycle {α, β} with α around V₁ and β around V₂
    let tip_rule = |path: &Path| rs.tip_index(path.arrow_ids());
    for (x, y) in two_cycle_set(rs)? {
        let (alpha, beta) = (x, y);
        if !bp.in_part_one(g.vertex_of(p.half_edge_of(alpha))) {
            continue;
        }
        let pa = Path::arrow(q, alpha);
        let pb = Path::arrow(q, beta);
        let ab = pa.concat(&pb).unwrap();
        let ba = pb.concat(&pa).unwrap();
        let hb = p.half_edge_of(beta);
        let w = g.vertex_of(hb);
        let cb = q.sigma_cycle(beta).unwrap().power(g.multiplicity(w) as usize).unwrap();
        let cv = q.sigma_cycle(alpha).unwrap().power(g.multiplicity(g.vertex_of(p.half_edge_of(alpha))) as usize).unwrap();
        let alpha_star = cv.slice(q, 1, cv.len());

        let mut d1 = zero();
        d1[tip_rule(&ab).unwrap()] = el(Path::idempotent(ab.origin()));
        d1[tip_rule(&ba).unwrap()] = el(Path::idempotent(ba.origin()));
        d1[type_b[&hb]] = el(alpha_star);
        let mut d2 = zero();
        d2[tip_rule(&ba).unwrap()] = el(cb);
        let name = format!("{}{}", q.arrow(alpha).name, q.arrow(beta).name);
        out.push((format!("D1:{name}"), d1));
        out.push((format!("D2:{name}"), d2));
    }
    Ok(out)
}

/// Dimensions of `HH⁰`, `HH¹`, `HH²` from the normalised bar complex
/// relative to the vertex idempotents, using only the multiplication table.
/// Independent of any reduction system; meant for small algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BarDims {
    pub hh0: usize,
    pub hh1: usize,
    pub hh2: usize,
}

pub fn bar_complex_dims(alg: &FiniteDimAlgebra<Rational>) -> Result<BarDims> {
    let n = alg.dim();
    let radical: Vec<usize> = (0..n).filter(|&i| !alg.basis()[i].is_idempotent()).collect();
    for &i in &radical {
        for &j in &radical {
            if alg.product(i, j).iter().any(|(k, _)| alg.basis()[*k].is_idempotent()) {
                return Err(Error::NotApplicable("the arrow ideal is not closed under products".into()));
            }
        }
    }
    let b = alg.basis();
    // chains x1 ⊗ … ⊗ xk with x_i · x_{i+1} composable, for k = 0..=3
    let mut chains: Vec<Vec<Vec<usize>>> = vec![(0..alg.quiver().vertex_count()).map(|v| vec![v]).collect()];
    chains.push(radical.iter().map(|&i| vec![i]).collect());
    for k in 2..=3 {
        let next = chains[k - 1]
            .iter()
            .flat_map(|c| {
                radical
                    .iter()
                    .filter(|&&j| b[*c.last().unwrap()].origin() == b[j].terminus())
                    .map(move |&j| {
                        let mut c = c.clone();
                        c.push(j);
                        c
                    })
            })
            .collect();
        chains.push(next);
    }
    // (terminus, origin) of a chain; degree 0 chains are vertices
    let ends = |k: usize, c: &[usize]| -> (usize, usize) {
        if k == 0 {
            (c[0], c[0])
        } else {
            (b[c[0]].terminus(), b[*c.last().unwrap()].origin())
        }
    };
    let mut columns: Vec<HashMap<(Vec<usize>, usize), usize>> = Vec::new();
    for (k, cs) in chains.iter().enumerate().take(3) {
        let mut map = HashMap::new();
        for c in cs {
            let (t, o) = ends(k, c);
            for i in 0..n {
                if b[i].terminus() == t && b[i].origin() == o {
                    let next = map.len();
                    map.insert((c.clone(), i), next);
                }
            }
        }
        columns.push(map);
    }
    let one = Rational::one();
    let rank_of_d = |k: usize| -> usize {
        let rows = chains[k + 1].par_iter().flat_map_iter(|x| {
            let mut acc: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
            let mut push = |out: usize, col: usize, c: Rational| acc.entry(out).or_default().push((col, c));
            let col = &columns[k];
            // x1 · f(x2, …)
            let tail: Vec<usize> = if k == 0 { vec![b[x[0]].origin()] } else { x[1..].to_vec() };
            let head: Vec<usize> = if k == 0 { vec![b[x[0]].terminus()] } else { x[..k].to_vec() };
            let (t, o) = ends(k, &tail);
            for i in 0..n {
                if b[i].terminus() != t || b[i].origin() != o {
                    continue;
                }
                for (out, c) in alg.product(x[0], i) {
                    push(*out, col[&(tail.clone(), i)], c.clone());
                }
            }
            // Σ (−1)^i f(…, x_i x_{i+1}, …)
            for i in 0..k {
                let sign = if (i + 1) % 2 == 0 { one.clone() } else { -one.clone() };
                for (j, c) in alg.product(x[i], x[i + 1]) {
                    let mut y = x[..i].to_vec();
                    y.push(*j);
                    y.extend_from_slice(&x[i + 2..]);
                    let (t, o) = ends(k, &y);
                    for out in 0..n {
                        if b[out].terminus() == t && b[out].origin() == o {
                            push(out, col[&(y.clone(), out)], c * &sign);
                        }
                    }
                }
            }
            // ± f(x1, …, xk) · x_{k+1}
            let sign = if (k + 1).is_multiple_of(2) { one.clone() } else { -one.clone() };
            let (t, o) = ends(k, &head);
            for i in 0..n {
                if b[i].terminus() != t || b[i].origin() != o {
                    continue;
                }
                for (out, c) in alg.product(i, x[k]) {
                    push(*out, col[&(head.clone(), i)], c * &sign);
                }
            }
            acc.into_values().collect::<Vec<_>>()
        });
        crate::exactla::sparse_rank(rows.collect::<Vec<_>>())
    };
    let r0 = rank_of_d(0);
    let r1 = rank_of_d(1);
    let r2 = rank_of_d(2);
    Ok(BarDims {
        hh0: columns[0].len() - r0,
        hh1: columns[1].len() - r1 - r0,
        hh2: columns[2].len() - r2 - r1,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::pathalg::{parse_element, Arrow, Quiver};
    use crate::presentation::build_reduction_system;
    use crate::rewrite::irreducible_basis;
    use crate::ribbon::RibbonGraph;

    fn local(m: usize) -> ReductionSystem<Rational> {
        let q = Arc::new(Quiver::new(vec!["1".into()], vec![Arrow { name: "x".into(), source: 0, target: 0 }]).unwrap());
        let tip = vec!["x"; m + 1].join("*");
        ReductionSystem::from_text(q, &[(&tip, "0")]).unwrap()
    }

    #[test]
    fn local_algebra_dimensions() {
        for m in 1..5 {
            let rs = local(m);
            let alg = irreducible_basis(&rs).unwrap();
            let h = Hochschild::new(&rs, &alg).unwrap();
            assert_eq!(h.cochains.dim(), m + 1);
            assert_eq!(h.cocycles.dim(), m + 1);
            assert_eq!(h.coboundaries.dim(), 1);
            assert_eq!(h.hh2_dim(), m);
        }
    }

    #[test]
    fn both_coboundary_routes_agree() {
        let rs = local(3);
        let q = rs.quiver().clone();
        let psi = vec![parse_element(&q, "2 e(1) - x + 1/3 x*x").unwrap()];
        assert_eq!(coboundary(&rs, &psi).unwrap(), coboundary_by_substitution(&rs, &psi).unwrap());
    }

    #[test]
    fn ex1_standard_cocycles() {
        let g = RibbonGraph::build(
            &[("v1", 1), ("v2", 2), ("w", 1)],
            &[("v1", &["α"]), ("v2", &["β"]), ("w", &["δ", "γ"])],
            &[("α", "δ"), ("β", "γ")],
        )
        .unwrap();
        let bp = g.parse_bipartition("w|v1,v2").unwrap();
        let p = BrauerPresentation::build(&g, Some(&bp), None).unwrap();
        let rs = build_reduction_system(&p).unwrap();
        let alg = irreducible_basis(&rs).unwrap();
        let h = Hochschild::new(&rs, &alg).unwrap();
        assert_eq!(h.hh2_dim(), 2);
        let std = standard_cocycles(&p, &rs).unwrap();
        let tags: Vec<&str> = std.iter().map(|(t, _)| t.as_str()).collect();
        assert_eq!(tags, ["A", "B:v2:1"]);
        let values: Vec<TwoCochain> = std.into_iter().map(|(_, c)| c).collect();
        assert!(h.verify(&values).unwrap().is_basis());
        let rep = h.report(Some(&p)).unwrap();
        assert_eq!((rep.formula, rep.formula_matches), (Some(2), Some(true)));
    }
}
