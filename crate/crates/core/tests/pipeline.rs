//! End-to-end runs over the named fixtures and the error paths between
//! modules.

use bga_core::deform::{deform, requested_cochain, DeformParams, DeformRequest, Parameter};
use bga_core::fixtures::{self, fixture, NAMES};
use bga_core::hochschild::{bar_complex_dims, hh2, Hochschild};
use std::sync::Arc;

use bga_core::presentation::{build_reduction_system, two_cycle_set, BrauerPresentation, ReductionSystem};
use bga_core::rewrite::{check_diamond, irreducible_basis};
use bga_core::exactla::RationalMatrix;
use bga_core::pathalg::{Arrow, Quiver, Rational};
use bga_core::rewrite::FiniteDimAlgebra;
use bga_core::Error;

#[test]
fn every_named_fixture_runs_through() {
    for name in NAMES {
        let (p, rs) = fixture(name).unwrap().system(None).unwrap();
        assert!(check_diamond(&rs).unwrap().passed(), "{name}");
        let alg = irreducible_basis(&rs).unwrap();
        let rep = hh2(&rs, &alg, Some(&p)).unwrap();
        assert_eq!(rep.basis.len(), rep.hh2_dim, "{name}");
        if let Some(m) = rep.formula_matches {
            assert!(m, "{name}");
        }
    }
}

/// Centre as the kernel of `z ↦ (z·b − b·z)_b`.
fn centre_dim(alg: &FiniteDimAlgebra<Rational>) -> usize {
    let n = alg.dim();
    let mut rows = Vec::new();
    for b in 0..n {
        for out in 0..n {
            let row: Vec<Rational> = (0..n)
                .map(|z| {
                    let coeff = |v: &[(usize, Rational)]| v.iter().filter(|(k, _)| *k == out).map(|(_, c)| c.clone()).sum::<Rational>();
                    coeff(alg.product(z, b)) - coeff(alg.product(b, z))
                })
                .collect();
            rows.push(row);
        }
    }
    n - RationalMatrix::from_rows(rows, n).rank()
}

#[test]
fn bar_complex_agrees_with_other_routes() {
    for (name, h0) in [("loc1", 2), ("loc2", 3), ("ex1", 4), ("annulus", 4)] {
        let (_, rs) = fixture(name).unwrap().system(None).unwrap();
        let alg = irreducible_basis(&rs).unwrap();
        let bar = bar_complex_dims(&alg).unwrap();
        assert_eq!(bar.hh0, h0, "{name}");
        assert_eq!(bar.hh0, centre_dim(&alg), "{name}");
        assert_eq!(bar.hh2, Hochschild::new(&rs, &alg).unwrap().hh2_dim(), "{name}");
    }
}

#[test]
fn non_bipartite_graphs_need_their_own_rules() {
    let g = fixtures::annulus();
    assert!(matches!(g.bipartition(), Err(Error::NonBipartite { .. })));
    let p = BrauerPresentation::build(&g, None, None).unwrap();
    assert!(matches!(build_reduction_system(&p), Err(Error::NotApplicable(_))));
}

#[test]
fn two_cycles_need_a_confluent_system() {
    let q = Arc::new(
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![Arrow { name: "x".into(), source: 1, target: 0 }, Arrow { name: "y".into(), source: 0, target: 1 }],
        )
        .unwrap(),
    );
    let planted = ReductionSystem::from_text(q, &[("x*y", "e(1)"), ("y*x", "0")]).unwrap();
    assert!(matches!(two_cycle_set(&planted), Err(Error::RequiresConfluentSystem)));
    let (_, rs) = fixture("dbl").unwrap().system(None).unwrap();
    assert_eq!(two_cycle_set(&rs).unwrap().len(), 4);
}

#[test]
fn deformation_requests() {
    let (p, rs) = fixture("dbl").unwrap().system(None).unwrap();
    let req: DeformRequest = serde_json::from_str(r#"{"type": "D2", "params": {"scale": "2"}, "t": "formal:3"}"#).unwrap();
    let c = requested_cochain(&req, Some(&p), &rs).unwrap();
    assert_eq!(c.iter().filter(|x| !x.is_zero()).count(), 1);
    assert!(deform(&rs, &c, &Parameter::parse("formal:3").unwrap()).is_ok());

    let bad = DeformRequest { kind: "B".into(), ..Default::default() };
    assert!(matches!(requested_cochain(&bad, Some(&p), &rs), Err(Error::NotApplicable(_))));
    assert!(serde_json::from_str::<DeformRequest>(r#"{"type": "A", "colour": 1}"#).is_err());

    let tip = rs.rule(0).tip.text(rs.quiver());
    let custom = DeformRequest {
        kind: "custom".into(),
        params: DeformParams {
            cochain: Some(vec![bga_core::deform::CustomValue { tip: tip.clone(), element: tip }]),
            ..Default::default()
        },
        t: None,
    };
    let c = requested_cochain(&custom, Some(&p), &rs).unwrap();
    assert!(matches!(deform(&rs, &c, &Parameter::Formal(2)), Err(Error::NonParallelCochain(_))));
}
