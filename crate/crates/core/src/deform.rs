//! Deformed reduction systems `s → φ_s + φ̃_s t`, their formal check, the
//! algebra at a fixed `t`, and a semisimplicity test.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactla::RationalMatrix;
use crate::hochschild::{standard_cocycles, TwoCochain};
use crate::pathalg::{parse_element, parse_rational, Coefficient, Rational, RationalElement, TruncPoly};
use crate::presentation::{BrauerPresentation, ReductionSystem};
use crate::rewrite::{enumerate_ambiguities, irreducible_basis, FiniteDimAlgebra};
use crate::{Error, Result};

pub const DEFAULT_DEGREE: usize = 4;

/// Above this dimension associativity is sampled rather than exhaustive.
pub const EXHAUSTIVE_ASSOCIATIVITY: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parameter {
    /// Work in `ℚ[t]/(t^D)`.
    Formal(usize),
    /// Substitute a rational value for `t`.
    At(Rational),
}

impl Parameter {
    /// `formal:D` or a rational such as `1` or `-2/3`.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(d) = text.strip_prefix("formal:") {
            let d: usize = d.parse().map_err(|_| Error::Parse(format!("bad truncation degree {d:?}")))?;
            if d == 0 {
                return Err(Error::Parse("truncation degree must be positive".into()));
            }
            return Ok(Parameter::Formal(d));
        }
        parse_rational(text).map(Parameter::At).ok_or_else(|| Error::Parse(format!("bad value of t: {text:?}")))
    }
}

#[derive(Clone, Debug)]
pub enum DeformedSystem {
    Formal(ReductionSystem<TruncPoly>),
    At(Rational, ReductionSystem<Rational>),
}

fn check_cochain(rs: &ReductionSystem<Rational>, c: &[RationalElement]) -> Result<()> {
    if c.len() != rs.len() {
        return Err(Error::NonParallelCochain(format!("{} values for {} tips", c.len(), rs.len())));
    }
    let q = rs.quiver();
    for (r, x) in rs.rules().iter().zip(c) {
        for p in x.paths() {
            if !p.is_parallel_to(&r.tip) || !rs.is_irreducible(p) {
                return Err(Error::NonParallelCochain(format!("{} on tip {}", p.text(q), r.tip.text(q))));
            }
        }
    }
    Ok(())
}

/// Replace every `φ_s` by `φ_s + φ̃_s t`.
pub fn deform(rs: &ReductionSystem<Rational>, c: &[RationalElement], t: &Parameter) -> Result<DeformedSystem> {
    check_cochain(rs, c)?;
    match t {
        Parameter::Formal(d) => {
            let d = *d;
            let sys = rs.map_rules(d, |i, r| {
                let mut x = r.replacement.map_coeffs(d, |v| TruncPoly::from_rational(v, d));
                for (p, v) in c[i].terms() {
                    x.add_term(p.clone(), TruncPoly::from_rational(v, d).times(&TruncPoly::t(d)));
                }
                x
            })?;
            Ok(DeformedSystem::Formal(sys))
        }
        Parameter::At(value) => {
            let sys = rs.map_rules((), |i, r| r.replacement.add(&c[i].scale(value)).expect("rational"))?;
            Ok(DeformedSystem::At(value.clone(), sys))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalFailure {
    pub ambiguity: String,
    pub left: String,
    pub right: String,
    /// Lowest power of `t` where the two sides differ.
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalReport {
    pub degree: usize,
    pub ambiguities: usize,
    pub passed: bool,
    pub failure: Option<FormalFailure>,
}

/// Resolve every ambiguity of the deformed system over `ℚ[t]/(t^D)`.
pub fn verify_formal(sys: &ReductionSystem<TruncPoly>) -> Result<FormalReport> {
    let q = sys.quiver();
    let ambs = enumerate_ambiguities(sys);
    let n = ambs.len();
    for a in ambs {
        let (l, r) = a.resolve(sys)?;
        let diff = l.sub(&r)?;
        if let Some(order) = diff.terms().filter_map(|(_, c)| c.order()).min() {
            return Ok(FormalReport {
                degree: sys.context(),
                ambiguities: n,
                passed: false,
                failure: Some(FormalFailure { ambiguity: a.text(q), left: l.text(q), right: r.text(q), order }),
            });
        }
    }
    Ok(FormalReport { degree: sys.context(), ambiguities: n, passed: true, failure: None })
}

/// The algebra of a deformed system at a fixed `t`, after an associativity
/// check of its table.
pub fn deformed_algebra(sys: &ReductionSystem<Rational>) -> Result<FiniteDimAlgebra<Rational>> {
    let alg = irreducible_basis(sys)?;
    let bad = if alg.dim() <= EXHAUSTIVE_ASSOCIATIVITY {
        alg.check_associative::<ChaCha8Rng>(None)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        alg.check_associative(Some((500, &mut rng)))
    };
    if let Some((i, j, k)) = bad {
        let name = |x: usize| alg.basis()[x].text(alg.quiver());
        return Err(Error::NonAssociative(format!("({}·{})·{}", name(i), name(j), name(k))));
    }
    Ok(alg)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimplicityReport {
    pub dimension: usize,
    pub radical_dim: usize,
    /// `Σ m(v)·val(v)²` when the graph is known.
    pub predicted_dimension: Option<usize>,
    pub semisimple: bool,
}

/// Radical as the kernel of the trace form `(a, b) ↦ tr(L_{ab})`.
pub fn semisimplicity(alg: &FiniteDimAlgebra<Rational>, predicted: Option<usize>) -> SemisimplicityReport {
    let n = alg.dim();
    let traces: Vec<Rational> = (0..n)
        .map(|l| {
            (0..n)
                .flat_map(|k| alg.product(l, k).iter().filter(move |(o, _)| *o == k).map(|(_, c)| c.clone()))
                .fold(Rational::from_integer(0.into()), |a, b| a + b)
        })
        .collect();
    let gram: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    alg.product(i, j)
                        .iter()
                        .fold(Rational::from_integer(0.into()), |a, (l, c)| a + c * &traces[*l])
                })
                .collect()
        })
        .collect();
    let radical_dim = n - RationalMatrix::from_rows(gram, n).rank();
    SemisimplicityReport { dimension: n, radical_dim, predicted_dimension: predicted, semisimple: radical_dim == 0 }
}

/// `{"type": "A|B|C|D1|D2|custom", "params": {...}, "t": "formal:4" | "1"}`.
#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DeformRequest {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default)]
    pub params: DeformParams,
    #[serde(default)]
    pub t: Option<String>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DeformParams {
    /// Vertex id for type B.
    pub vertex: Option<String>,
    /// Power for type B, default 1.
    pub i: Option<usize>,
    /// Edge name for type C.
    pub edge: Option<String>,
    /// Arrow names `αβ` of the 2-cycle for type D.
    pub pair: Option<String>,
    /// Overall scalar, default 1.
    pub scale: Option<String>,
    /// Full cochain for `custom`: tip text to element text.
    pub cochain: Option<Vec<CustomValue>>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CustomValue {
    pub tip: String,
    pub element: String,
}

/// Pick the requested cochain: a standard cocycle (first match for omitted
/// parameters) or a custom document.
pub fn requested_cochain(
    req: &DeformRequest,
    p: Option<&BrauerPresentation>,
    rs: &ReductionSystem<Rational>,
) -> Result<TwoCochain> {
    let scale = match &req.params.scale {
        Some(s) => parse_rational(s).ok_or_else(|| Error::Parse(format!("bad scale {s:?}")))?,
        None => Rational::from_integer(1.into()),
    };
    let q = rs.quiver();
    let chosen = if req.kind == "custom" {
        let values = req
            .params
            .cochain
            .as_ref()
            .ok_or_else(|| Error::Schema("custom deformation needs params.cochain".into()))?;
        let mut c = vec![RationalElement::zero(()); rs.len()];
        for v in values {
            let tip = crate::pathalg::parse_path(q, &v.tip)?;
            let r = rs
                .tip_index(tip.arrow_ids())
                .ok_or_else(|| Error::NonParallelCochain(format!("{} is not a tip", v.tip)))?;
            c[r] = c[r].add(&parse_element(q, &v.element)?)?;
        }
        c
    } else {
        let p = p.ok_or_else(|| Error::NotApplicable("standard cocycles need a bipartite graph".into()))?;
        let std = standard_cocycles(p, rs)?;
        let want = match req.kind.as_str() {
            "A" => "A".to_string(),
            "B" => match &req.params.vertex {
                Some(v) => format!("B:{v}:{}", req.params.i.unwrap_or(1)),
                None => "B:".into(),
            },
            "C" => match &req.params.edge {
                Some(e) => format!("C:{e}"),
                None => "C:".into(),
            },
            "D1" | "D2" => format!("{}:{}", req.kind, req.params.pair.clone().unwrap_or_default()),
            other => return Err(Error::Schema(format!("unknown deformation type {other:?}"))),
        };
        let exact = std.iter().find(|(t, _)| *t == want);
        let found = exact.or_else(|| std.iter().find(|(t, _)| t.starts_with(&want) && want.ends_with(':')));
        found
            .map(|(_, c)| c.clone())
            .ok_or_else(|| Error::NotApplicable(format!("no standard cocycle {want}")))?
    };
    Ok(chosen.iter().map(|x| x.scale(&scale)).collect())
}

/// Sum of cochains, value by value.
pub fn add_cochains(a: &[RationalElement], b: &[RationalElement]) -> TwoCochain {
    a.iter().zip(b).map(|(x, y)| x.add(y).expect("rational")).collect()
}
