#![allow(dead_code)]

use std::sync::OnceLock;

use bga_core::exactla::Subspace;
use bga_core::fixtures::{self, bipartite_family, fixture};
use bga_core::hochschild::{cochain_space, cocycle_space, CochainSpace};
use bga_core::pathalg::{frac, Path, Rational, RationalElement};
use bga_core::presentation::{BrauerPresentation, ReductionSystem};
use bga_core::rewrite::{irreducible_basis, FiniteDimAlgebra};
use rand::Rng;

pub struct Case {
    pub name: String,
    pub p: BrauerPresentation,
    pub rs: ReductionSystem<Rational>,
    pub alg: FiniteDimAlgebra<Rational>,
    pub cochains: CochainSpace,
    pub cocycles: Subspace,
}

fn case(name: String, p: BrauerPresentation, rs: ReductionSystem<Rational>) -> Case {
    let alg = irreducible_basis(&rs).unwrap();
    let cochains = cochain_space(&rs, &alg);
    let cocycles = cocycle_space(&rs, &cochains, &alg).unwrap();
    Case { name, p, rs, alg, cochains, cocycles }
}

/// Named fixtures plus a few generated graphs with mixed multiplicities.
pub fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        let mut out = Vec::new();
        for name in ["ex1", "dbl", "loc1", "loc2", "loc3", "annulus", "torus", "ann2"] {
            let f = fixture(name).unwrap();
            let (p, rs) = f.system(None).unwrap();
            out.push(case(name.to_string(), p, rs));
        }
        for (name, g) in bipartite_family() {
            if ["cycle4-m1321", "star3-m1321", "path4-m2132", "cycle2-m23"].contains(&name.as_str()) {
                let f = fixtures::Fixture { name: name.clone(), graph: g, rules: None };
                let (p, rs) = f.system(None).unwrap();
                out.push(case(name, p, rs));
            }
        }
        out
    })
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

/// A random path of length below `max_len`, grown one arrow at a time on
/// the left.
pub fn random_path<R: Rng>(rs: &ReductionSystem<Rational>, rng: &mut R, max_len: usize) -> Path {
    let q = rs.quiver();
    let mut p = Path::idempotent(rng.gen_range(0..q.vertex_count()));
    for _ in 0..rng.gen_range(0..max_len) {
        let next: Vec<usize> = (0..q.arrow_count()).filter(|&a| q.arrow(a).source == p.terminus()).collect();
        if next.is_empty() {
            break;
        }
        let a = next[rng.gen_range(0..next.len())];
        p = Path::arrow(q, a).concat(&p).unwrap();
    }
    p
}

/// A random combination of up to four unreduced paths.
pub fn random_element<R: Rng>(rs: &ReductionSystem<Rational>, rng: &mut R, max_len: usize) -> RationalElement {
    let mut x = RationalElement::zero(());
    for _ in 0..rng.gen_range(1..=4) {
        x.add_term(random_path(rs, rng, max_len), small_rational(rng));
    }
    x
}

/// A random combination of basis paths parallel to `p`.
pub fn random_parallel<R: Rng>(alg: &FiniteDimAlgebra<Rational>, p: &Path, rng: &mut R) -> RationalElement {
    let mut x = RationalElement::zero(());
    for i in alg.parallels(p) {
        if rng.gen_bool(0.6) {
            x.add_term(alg.basis()[i].clone(), small_rational(rng));
        }
    }
    x
}

pub fn random_coords<R: Rng>(alg: &FiniteDimAlgebra<Rational>, rng: &mut R) -> Vec<(usize, Rational)> {
    (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(0..alg.dim()), small_rational(rng))).collect()
}

/// One trial of every randomised property on one fixture.
pub fn trial<R: Rng>(c: &Case, rng: &mut R) -> Result<(), String> {
    use bga_core::hochschild::{coboundary, coboundary_by_substitution, coboundary_zero};
    let fail = |what: &str| Err(format!("{}: {what}", c.name));
    let q = c.rs.quiver();

    let x = random_element(&c.rs, rng, 10);
    let y = c.rs.reduce(&x).map_err(|e| e.to_string())?;
    if !y.paths().all(|p| c.rs.is_irreducible(p)) || c.rs.reduce(&y).unwrap() != y {
        return fail("reduction is not idempotent");
    }
    if c.rs.reduce_random(&x, rng).unwrap() != y {
        return fail("reduction depends on the order of rewriting");
    }

    let (a, b, d) = (random_coords(&c.alg, rng), random_coords(&c.alg, rng), random_coords(&c.alg, rng));
    let left = c.alg.mul(&c.alg.mul(&a, &b), &d);
    let right = c.alg.mul(&a, &c.alg.mul(&b, &d));
    if c.alg.element(&left) != c.alg.element(&right) {
        return fail("multiplication is not associative");
    }
    let direct = c.rs.reduce(&c.alg.element(&a).mul(&c.alg.element(&b)).unwrap()).unwrap();
    if c.alg.element(&c.alg.mul(&a, &b)) != direct {
        return fail("table disagrees with reduction");
    }

    let phi: Vec<RationalElement> =
        (0..q.vertex_count()).map(|v| random_parallel(&c.alg, &Path::idempotent(v), rng)).collect();
    let psi = coboundary_zero(&c.rs, &phi).unwrap();
    if !coboundary(&c.rs, &psi).unwrap().iter().all(RationalElement::is_zero) {
        return fail("∂¹∂⁰ ≠ 0");
    }

    let psi: Vec<RationalElement> = (0..q.arrow_count()).map(|a| random_parallel(&c.alg, &Path::arrow(q, a), rng)).collect();
    let d1 = coboundary(&c.rs, &psi).unwrap();
    if d1 != coboundary_by_substitution(&c.rs, &psi).unwrap() {
        return fail("the two coboundary routes disagree");
    }
    if !c.cocycles.contains(&c.cochains.vector(&c.alg, &d1).unwrap()) {
        return fail("a coboundary is not a cocycle");
    }
    Ok(())
}
