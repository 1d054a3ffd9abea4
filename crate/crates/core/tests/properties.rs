//! Randomised properties over the bundled fixtures. Each proptest case
//! draws a seed and runs one trial on every fixture.

mod common;

use bga_core::hochschild::{coboundary, coboundary_by_substitution, coboundary_zero, hh2};
use bga_core::pathalg::{Path, RationalElement};
use bga_core::presentation::{build_reduction_system, BrauerPresentation};
use bga_core::rewrite::irreducible_basis;
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 200, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn reduction_is_idempotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for c in cases() {
            let x = random_element(&c.rs, &mut rng, 10);
            let y = c.rs.reduce(&x).unwrap();
            prop_assert!(y.paths().all(|p| c.rs.is_irreducible(p)), "{}", c.name);
            prop_assert_eq!(c.rs.reduce(&y).unwrap(), y);
        }
    }

    #[test]
    fn reduction_order_is_irrelevant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for c in cases() {
            let x = random_element(&c.rs, &mut rng, 10);
            let a = c.rs.reduce(&x).unwrap();
            let b = c.rs.reduce_random(&x, &mut rng).unwrap();
            prop_assert_eq!(a, b, "{}", c.name);
        }
    }

    #[test]
    fn table_is_associative_and_matches_reduction(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for c in cases() {
            let (x, y, z) = (random_coords(&c.alg, &mut rng), random_coords(&c.alg, &mut rng), random_coords(&c.alg, &mut rng));
            let left = c.alg.mul(&c.alg.mul(&x, &y), &z);
            let right = c.alg.mul(&x, &c.alg.mul(&y, &z));
            prop_assert_eq!(c.alg.element(&left), c.alg.element(&right), "{}", c.name);
            let direct = c.rs.reduce(&c.alg.element(&x).mul(&c.alg.element(&y)).unwrap()).unwrap();
            prop_assert_eq!(c.alg.element(&c.alg.mul(&x, &y)), direct, "{}", c.name);
        }
    }

    #[test]
    fn coboundary_of_coboundary_vanishes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for c in cases() {
            let q = c.rs.quiver();
            let phi: Vec<RationalElement> =
                (0..q.vertex_count()).map(|v| random_parallel(&c.alg, &Path::idempotent(v), &mut rng)).collect();
            let psi = coboundary_zero(&c.rs, &phi).unwrap();
            prop_assert!(coboundary(&c.rs, &psi).unwrap().iter().all(RationalElement::is_zero), "{}", c.name);
            prop_assert!(coboundary_by_substitution(&c.rs, &psi).unwrap().iter().all(RationalElement::is_zero));
        }
    }

    #[test]
    fn coboundaries_are_cocycles(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for c in cases() {
            let q = c.rs.quiver();
            let psi: Vec<RationalElement> =
                (0..q.arrow_count()).map(|a| random_parallel(&c.alg, &Path::arrow(q, a), &mut rng)).collect();
            let d = coboundary(&c.rs, &psi).unwrap();
            prop_assert_eq!(&d, &coboundary_by_substitution(&c.rs, &psi).unwrap(), "{}", c.name);
            let v = c.cochains.vector(&c.alg, &d).unwrap();
            prop_assert!(c.cocycles.contains(&v), "{}", c.name);
        }
    }
}

#[test]
fn small_tables_are_associative_exhaustively() {
    for c in cases().iter().filter(|c| c.alg.dim() <= 16) {
        assert_eq!(c.alg.check_associative::<ChaCha8Rng>(None), None, "{}", c.name);
        assert!(c.alg.check_identity(), "{}", c.name);
    }
}

#[test]
fn relations_lie_in_the_ideal() {
    for c in cases().iter().filter(|c| c.p.bipartition().is_some()) {
        for r in c.p.relations() {
            assert!(c.rs.reduce(&r.element).unwrap().is_zero(), "{}: {:?}", c.name, r.kind);
        }
    }
}

#[test]
fn hh2_is_invariant_under_swapping_the_bipartition() {
    let mut graphs = bga_core::fixtures::bipartite_family();
    for name in ["ex1", "dbl", "loc1", "loc2", "loc3"] {
        graphs.push((name.into(), bga_core::fixtures::fixture(name).unwrap().graph));
    }
    for (name, g) in graphs {
        let bp = g.bipartition().unwrap();
        let dims: Vec<(usize, usize)> = [bp.clone(), bp.swapped()]
            .iter()
            .map(|bp| {
                let p = BrauerPresentation::build(&g, Some(bp), None).unwrap();
                let rs = build_reduction_system(&p).unwrap();
                let alg = irreducible_basis(&rs).unwrap();
                (alg.dim(), hh2(&rs, &alg, Some(&p)).unwrap().hh2_dim)
            })
            .collect();
        assert_eq!(dims[0], dims[1], "{name}");
    }
}
