//! Reduction to normal form, ambiguities, the diamond check and the
//! irreducible-path basis.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use rayon::prelude::*;

use crate::pathalg::{AlgebraElement, ArrowId, Coefficient, Path, Quiver};
use crate::presentation::ReductionSystem;
use crate::ribbon::RibbonGraph;
use crate::{Error, Result};

impl<C: Coefficient> ReductionSystem<C> {
    /// Normal form of `x`, always rewriting the leftmost tip occurrence.
    pub fn reduce(&self, x: &AlgebraElement<C>) -> Result<AlgebraElement<C>> {
        self.reduce_leftmost(x)
    }

    pub fn reduce_path(&self, p: &Path) -> Result<AlgebraElement<C>> {
        self.reduce(&AlgebraElement::from_path(p.clone(), self.context()))
    }

    /// Like [`reduce`](Self::reduce) but each step rewrites a uniformly
    /// random occurrence in a random reducible term.
    pub fn reduce_random<R: Rng>(&self, x: &AlgebraElement<C>, rng: &mut R) -> Result<AlgebraElement<C>> {
        let ctx = self.context();
        let mut pending: Vec<(Path, C)> = x.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
        let mut out = AlgebraElement::zero(ctx);
        let mut steps = 0usize;
        while !pending.is_empty() {
            let (p, c) = pending.swap_remove(rng.gen_range(0..pending.len()));
            let occ = self.occurrences(p.arrow_ids());
            if occ.is_empty() {
                out.add_term(p, c);
                continue;
            }
            steps += 1;
            if steps > self.step_cap() {
                return Err(Error::NonTerminating { steps });
            }
            let (start, r) = occ[rng.gen_range(0..occ.len())];
            for (q, d) in self.rewrite_at(&p, start, r).terms() {
                pending.push((q.clone(), d.times(&c)));
            }
        }
        Ok(out)
    }

    fn reduce_leftmost(&self, x: &AlgebraElement<C>) -> Result<AlgebraElement<C>> {
        let ctx = self.context();
        if x.context() != ctx {
            return Err(Error::ScalarContextMismatch);
        }
        // Largest paths first so that equal terms meet before being rewritten.
        let mut work: BTreeMap<Path, C> = BTreeMap::new();
        for (p, c) in x.terms() {
            work.insert(p.clone(), c.clone());
        }
        let mut out = AlgebraElement::zero(ctx);
        let mut steps = 0usize;
        while let Some((p, c)) = work.pop_last() {
            let Some((start, r)) = self.find_occurrence(p.arrow_ids(), None) else {
                out.add_term(p, c);
                continue;
            };
            steps += 1;
            if steps > self.step_cap() {
                return Err(Error::NonTerminating { steps });
            }
            for (q, d) in self.rewrite_at(&p, start, r).terms() {
                let v = d.times(&c);
                match work.get_mut(q) {
                    Some(e) => {
                        let s = e.plus(&v);
                        if s.vanishes() {
                            work.remove(q);
                        } else {
                            *e = s;
                        }
                    }
                    None => {
                        if !v.vanishes() {
                            work.insert(q.clone(), v);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `left · φ_r · right` where `p = left · tip_r · right` and the tip
    /// starts at written position `start`.
    fn rewrite_at(&self, p: &Path, start: usize, r: usize) -> AlgebraElement<C> {
        let q = self.quiver();
        let rule = self.rule(r);
        let end = start + rule.tip.len();
        let left = p.slice(q, 0, start);
        let right = p.slice(q, end, p.len());
        rule.replacement.sandwich(&left, &right)
    }
}

/// A left 1-ambiguity `u·v·w`: `uv` is the tip of `first`, and a tip of
/// `second` starts inside `v` and ends at the end of `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambiguity {
    pub first: usize,
    pub second: usize,
    pub u: ArrowId,
    pub v: Path,
    pub w: Path,
    /// How many arrows of `v` the second tip uses.
    pub overlap: usize,
}

impl Ambiguity {
    pub fn path(&self, q: &Quiver) -> Path {
        Path::arrow(q, self.u).concat(&self.v).and_then(|uv| uv.concat(&self.w)).expect("ambiguity composes")
    }

    pub fn text(&self, q: &Quiver) -> String {
        format!("{}·{}·{}", q.arrow(self.u).name, self.v.text(q), self.w.text(q))
    }

    /// Resolve `(uv)w` via the first rule and `u(vw)` via the second, each
    /// then reduced to normal form.
    pub fn resolve<C: Coefficient>(&self, rs: &ReductionSystem<C>) -> Result<(AlgebraElement<C>, AlgebraElement<C>)> {
        let q = rs.quiver();
        let first = rs.rule(self.first);
        let left = first.replacement.sandwich(&Path::idempotent(first.tip.terminus()), &self.w);
        let u = Path::arrow(q, self.u);
        let prefix = u.concat(&self.v.slice(q, 0, self.v.len() - self.overlap)).unwrap();
        let right = rs.rule(self.second).replacement.sandwich(&prefix, &Path::idempotent(self.w.origin()));
        Ok((rs.reduce(&left)?, rs.reduce(&right)?))
    }
}

/// Every left 1-ambiguity, ordered by first rule, then second rule, then
/// overlap.
pub fn enumerate_ambiguities<C: Coefficient>(rs: &ReductionSystem<C>) -> Vec<Ambiguity> {
    let q = rs.quiver();
    let mut out = Vec::new();
    for (i, r1) in rs.rules().iter().enumerate() {
        let s1 = r1.tip.arrow_ids();
        let v = &s1[1..];
        for (j, r2) in rs.rules().iter().enumerate() {
            let s2 = r2.tip.arrow_ids();
            for k in 1..=v.len().min(s2.len() - 1) {
                if v[v.len() - k..] != s2[..k] {
                    continue;
                }
                let w = &s2[k..];
                let mut word: Vec<u32> = v.to_vec();
                let mut minimal = true;
                for &a in &w[..w.len() - 1] {
                    word.push(a);
                    if rs.find_tip(&word, None).is_some() {
                        minimal = false;
                        break;
                    }
                }
                if !minimal {
                    continue;
                }
                out.push(Ambiguity {
                    first: i,
                    second: j,
                    u: s1[0] as ArrowId,
                    v: r1.tip.slice(q, 1, s1.len()),
                    w: r2.tip.slice(q, k, s2.len()),
                    overlap: k,
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiamondFailure<C: Coefficient> {
    pub ambiguity: Ambiguity,
    pub left: AlgebraElement<C>,
    pub right: AlgebraElement<C>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiamondReport<C: Coefficient> {
    pub ambiguities: usize,
    pub failure: Option<DiamondFailure<C>>,
}

impl<C: Coefficient> DiamondReport<C> {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn to_json_value(&self, q: &Quiver) -> serde_json::Value {
        let mut v = serde_json::json!({
            "passed": self.passed(),
            "ambiguities": self.ambiguities,
        });
        if let Some(f) = &self.failure {
            v["failure"] = serde_json::json!({
                "ambiguity": f.ambiguity.text(q),
                "left": f.left.text(q),
                "right": f.right.text(q),
            });
        }
        v
    }
}

/// Resolve every ambiguity both ways and stop at the first disagreement.
pub fn check_diamond<C: Coefficient>(rs: &ReductionSystem<C>) -> Result<DiamondReport<C>> {
    let ambs = enumerate_ambiguities(rs);
    let n = ambs.len();
    for a in ambs {
        let (left, right) = a.resolve(rs)?;
        if left != right {
            return Ok(DiamondReport { ambiguities: n, failure: Some(DiamondFailure { ambiguity: a, left, right }) });
        }
    }
    Ok(DiamondReport { ambiguities: n, failure: None })
}

/// All irreducible paths in basis order (length, then arrows, then vertex).
pub fn irreducible_paths<C: Coefficient>(rs: &ReductionSystem<C>) -> Result<Vec<Path>> {
    let q = rs.quiver();
    let mut out: Vec<Path> = (0..q.vertex_count()).map(Path::idempotent).collect();
    let mut layer: Vec<Path> = (0..q.arrow_count()).map(|a| Path::arrow(q, a)).collect();
    let cap = rs.length_cap();
    let mut len = 1;
    while !layer.is_empty() {
        if len > cap {
            return Err(Error::InfiniteDimensional { cap });
        }
        out.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for p in &layer {
            for a in 0..q.arrow_count() {
                let Some(ap) = Path::arrow(q, a).concat(p) else { continue };
                if rs.tip_at(ap.arrow_ids(), 0, None).is_none() {
                    next.push(ap);
                }
            }
        }
        layer = next;
        len += 1;
    }
    out.sort();
    Ok(out)
}

/// A finite-dimensional algebra on the irreducible paths of a confluent
/// reduction system. Products are kept as sparse rows of basis coordinates.
#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra<C: Coefficient> {
    quiver: std::sync::Arc<Quiver>,
    ctx: C::Context,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    table: Vec<Vec<(usize, C)>>,
}

pub type Coords<C> = Vec<(usize, C)>;

/// Enumerate `Irr_S` and tabulate products.
pub fn irreducible_basis<C: Coefficient>(rs: &ReductionSystem<C>) -> Result<FiniteDimAlgebra<C>> {
    let basis = irreducible_paths(rs)?;
    FiniteDimAlgebra::tabulate(rs, basis)
}

impl<C: Coefficient> FiniteDimAlgebra<C> {
    fn tabulate(rs: &ReductionSystem<C>, basis: Vec<Path>) -> Result<Self> {
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = basis.len();
        let ctx = rs.context();
        let table = (0..n * n)
            .into_par_iter()
            .map(|ij| {
                let Some(p) = basis[ij / n].concat(&basis[ij % n]) else { return Ok(Vec::new()) };
                let red = rs.reduce_path(&p)?;
                Ok(red.terms().map(|(q, c)| (index[q], c.clone())).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteDimAlgebra { quiver: rs.quiver().clone(), ctx, basis, index, table })
    }

    pub fn quiver(&self) -> &std::sync::Arc<Quiver> {
        &self.quiver
    }

    pub fn context(&self) -> C::Context {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `b_i · b_j` in basis coordinates.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, C)] {
        &self.table[i * self.dim() + j]
    }

    /// Coordinates of an already reduced element.
    pub fn coords(&self, x: &AlgebraElement<C>) -> Result<Coords<C>> {
        x.terms()
            .map(|(p, c)| {
                self.index_of(p)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| Error::NotApplicable(format!("{} is not a basis path", p.text(&self.quiver))))
            })
            .collect()
    }

    pub fn element(&self, x: &[(usize, C)]) -> AlgebraElement<C> {
        let mut out = AlgebraElement::zero(self.ctx);
        for (i, c) in x {
            out.add_term(self.basis[*i].clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, x: &[(usize, C)], y: &[(usize, C)]) -> Coords<C> {
        let mut acc: BTreeMap<usize, C> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a.times(b);
                if ab.vanishes() {
                    continue;
                }
                for (k, c) in self.product(*i, *j) {
                    let v = ab.times(c);
                    let e = acc.entry(*k).or_insert_with(|| C::zero_in(self.ctx));
                    *e = e.plus(&v);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.vanishes()).collect()
    }

    fn unit(&self, i: usize) -> Coords<C> {
        vec![(i, C::one_in(self.ctx))]
    }

    fn same(&self, x: &[(usize, C)], y: &[(usize, C)]) -> bool {
        let norm = |v: &[(usize, C)]| -> BTreeMap<usize, C> {
            let mut m: BTreeMap<usize, C> = BTreeMap::new();
            for (i, c) in v {
                let e = m.entry(*i).or_insert_with(|| C::zero_in(self.ctx));
                *e = e.plus(c);
            }
            m.into_iter().filter(|(_, c)| !c.vanishes()).collect()
        };
        norm(x) == norm(y)
    }

    /// Whether `(b_i b_j) b_k ≠ b_i (b_j b_k)`.
    pub fn associator_fails(&self, i: usize, j: usize, k: usize) -> bool {
        let (bi, bj, bk) = (self.unit(i), self.unit(j), self.unit(k));
        let l = self.mul(&self.mul(&bi, &bj), &bk);
        let r = self.mul(&bi, &self.mul(&bj, &bk));
        !self.same(&l, &r)
    }

    /// First basis triple violating associativity. Exhaustive when `samples`
    /// is `None`, otherwise that many random triples.
    pub fn check_associative<R: Rng>(&self, samples: Option<(usize, &mut R)>) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        match samples {
            None => (0..n * n * n)
                .into_par_iter()
                .map(|t| (t / (n * n), (t / n) % n, t % n))
                .find_first(|&(i, j, k)| self.associator_fails(i, j, k)),
            Some((count, rng)) => (0..count)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .find(|&(i, j, k)| self.associator_fails(i, j, k)),
        }
    }

    /// `Σ e_v` as coordinates.
    pub fn identity(&self) -> Coords<C> {
        (0..self.quiver.vertex_count()).flat_map(|v| self.unit(self.index[&Path::idempotent(v)])).collect()
    }

    /// Whether `Σ e_v` is a two-sided identity and the `e_v` are orthogonal
    /// idempotents.
    pub fn check_identity(&self) -> bool {
        let one = self.identity();
        let units_ok = (0..self.dim()).all(|i| {
            let b = self.unit(i);
            self.same(&self.mul(&one, &b), &b) && self.same(&self.mul(&b, &one), &b)
        });
        let idem: Vec<usize> = (0..self.quiver.vertex_count()).map(|v| self.index[&Path::idempotent(v)]).collect();
        let orth = idem.iter().all(|&i| {
            idem.iter().all(|&j| {
                let want = if i == j { self.unit(i) } else { Vec::new() };
                self.same(self.product(i, j), &want)
            })
        });
        units_ok && orth
    }

    /// `{"basis": [...], "table": [[i, j, k, "c"], ...]}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        let n = self.dim();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j) {
                    table.push(serde_json::json!([i, j, k, c.render()]));
                }
            }
        }
        serde_json::json!({
            "dimension": n,
            "basis": self.basis.iter().map(|p| p.text(&self.quiver)).collect::<Vec<_>>(),
            "table": table,
        })
    }
}

/// `Σ_v m(v)·val(v)²`.
pub fn dimension_formula(g: &RibbonGraph) -> usize {
    (0..g.vertex_count()).map(|v| g.multiplicity(v) as usize * g.valency(v).pow(2)).sum()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::pathalg::{parse_element, Arrow, Rational};
    use crate::presentation::{build_reduction_system, BrauerPresentation};

    fn ex1_system(part_one: &str) -> ReductionSystem<Rational> {
        let g = RibbonGraph::build(
            &[("v1", 1), ("v2", 2), ("w", 1)],
            &[("v1", &["α"]), ("v2", &["β"]), ("w", &["δ", "γ"])],
            &[("α", "δ"), ("β", "γ")],
        )
        .unwrap();
        let bp = g.parse_bipartition(part_one).unwrap();
        build_reduction_system(&BrauerPresentation::build(&g, Some(&bp), None).unwrap()).unwrap()
    }

    fn two_cycle() -> Arc<Quiver> {
        Arc::new(
            Quiver::new(
                vec!["1".into(), "2".into()],
                vec![Arrow { name: "x".into(), source: 0, target: 1 }, Arrow { name: "y".into(), source: 1, target: 0 }],
            )
            .unwrap(),
        )
    }

    #[test]
    fn reduces_ex1() {
        let rs = ex1_system("w|v1,v2");
        let q = rs.quiver().clone();
        let red = |t: &str| rs.reduce(&parse_element(&q, t).unwrap()).unwrap().text(&q);
        assert_eq!(red("γ*δ"), "α");
        assert_eq!(red("β*β*β"), "0");
        assert_eq!(red("e(1)"), "e(1)");
        assert_eq!(red("δ*γ*δ"), "0");
        assert_eq!(red("γ*δ + 2 α"), "3 α");
    }

    #[test]
    fn ex1_bases() {
        let a = irreducible_basis(&ex1_system("w|v1,v2")).unwrap();
        let names: Vec<String> = a.basis().iter().map(|p| p.text(a.quiver())).collect();
        assert_eq!(names, ["e(1)", "e(2)", "α", "β", "γ", "δ", "β*β"]);
        let b = irreducible_basis(&ex1_system("v1,v2|w")).unwrap();
        let names: Vec<String> = b.basis().iter().map(|p| p.text(b.quiver())).collect();
        assert_eq!(names, ["e(1)", "e(2)", "β", "γ", "δ", "γ*δ", "δ*γ"]);
        for alg in [&a, &b] {
            assert!(alg.check_identity());
            assert_eq!(alg.check_associative::<ChaCha8Rng>(None), None);
        }
    }

    #[test]
    fn broken_overlap() {
        let q = two_cycle();
        let rs = ReductionSystem::from_text(q.clone(), &[("x*y", "e(2)"), ("y*x", "0")]).unwrap();
        let ambs = enumerate_ambiguities(&rs);
        assert!(ambs.iter().any(|a| a.text(&q) == "x·y·x"));
        let rep = check_diamond(&rs).unwrap();
        let f = rep.failure.unwrap();
        assert_eq!(f.ambiguity.text(&q), "x·y·x");
        assert_eq!((f.left.text(&q), f.right.text(&q)), ("x".into(), "0".into()));
    }

    #[test]
    fn self_overlaps_of_a_power() {
        let q = Arc::new(Quiver::new(vec!["1".into()], vec![Arrow { name: "x".into(), source: 0, target: 0 }]).unwrap());
        let rs = ReductionSystem::from_text(q.clone(), &[("x*x*x", "0")]).unwrap();
        let ambs: Vec<String> = enumerate_ambiguities(&rs).iter().map(|a| a.text(&q)).collect();
        assert_eq!(ambs, ["x·x*x·x"]);
        assert!(check_diamond(&rs).unwrap().passed());
        assert_eq!(irreducible_basis(&rs).unwrap().dim(), 3);
    }

    #[test]
    fn free_loop_is_infinite() {
        let q = Arc::new(
            Quiver::new(
                vec!["1".into()],
                vec![Arrow { name: "x".into(), source: 0, target: 0 }, Arrow { name: "y".into(), source: 0, target: 0 }],
            )
            .unwrap(),
        );
        let rs = ReductionSystem::from_text(q, &[("x*x", "0")]).unwrap();
        assert!(matches!(irreducible_basis(&rs), Err(Error::InfiniteDimensional { .. })));
    }

    #[test]
    fn runaway_rules_hit_the_cap() {
        let q1 = Arc::new(
            Quiver::new(
                vec!["1".into()],
                vec![
                    Arrow { name: "a".into(), source: 0, target: 0 },
                    Arrow { name: "b".into(), source: 0, target: 0 },
                ],
            )
            .unwrap(),
        );
        let rs = ReductionSystem::from_text(q1.clone(), &[("a*b", "b*a"), ("b*a", "a*b")]);
        assert!(rs.is_err());
        let rs = ReductionSystem::from_text(q1.clone(), &[("a*b", "b*b*a")]).unwrap().with_step_cap(50);
        let x = parse_element(&q1, "a*a*a*a*a*a*b").unwrap();
        assert!(matches!(rs.reduce(&x), Err(Error::NonTerminating { .. })));
    }

    #[test]
    fn random_strategy_agrees() {
        let rs = ex1_system("w|v1,v2");
        let q = rs.quiver().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = parse_element(&q, "γ*δ*γ*δ - 2 γ*β*β*δ + β*β*β*β").unwrap();
        assert_eq!(rs.reduce_random(&x, &mut rng).unwrap(), rs.reduce(&x).unwrap());
    }

    #[test]
    fn formula() {
        let g = RibbonGraph::build(
            &[("v1", 1), ("v2", 2), ("w", 1)],
            &[("v1", &["α"]), ("v2", &["β"]), ("w", &["δ", "γ"])],
            &[("α", "δ"), ("β", "γ")],
        )
        .unwrap();
        assert_eq!(dimension_formula(&g), 7);
    }
}
