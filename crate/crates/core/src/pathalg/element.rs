use std::collections::BTreeMap;

use num_traits::Zero;

use super::quiver::{Path, Quiver};
use super::scalar::{parse_rational, Coefficient, Rational};
use crate::Error;

/// A finite linear combination of paths. Zero coefficients are never stored
/// and terms iterate in path order, so equal elements compare and print
/// identically regardless of how they were built.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<C: Coefficient> {
    ctx: C::Context,
    terms: BTreeMap<Path, C>,
}

pub type RationalElement = AlgebraElement<Rational>;

impl<C: Coefficient> AlgebraElement<C> {
    pub fn zero(ctx: C::Context) -> Self {
        AlgebraElement { ctx, terms: BTreeMap::new() }
    }

    pub fn from_path(p: Path, ctx: C::Context) -> Self {
        Self::from_term(p, C::one_in(ctx), ctx)
    }

    pub fn from_term(p: Path, c: C, ctx: C::Context) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(p, c);
        out
    }

    pub fn context(&self) -> C::Context {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &C)> {
        self.terms.iter()
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn coeff(&self, p: &Path) -> Option<&C> {
        self.terms.get(p)
    }

    pub fn into_terms(self) -> BTreeMap<Path, C> {
        self.terms
    }

    /// Add `c·p` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, p: Path, c: C) {
        debug_assert_eq!(c.context(), self.ctx);
        if c.vanishes() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(existing) => {
                let sum = existing.plus(&c);
                if sum.vanishes() {
                    self.terms.remove(&p);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ScalarContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c.negated())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero(self.ctx);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.times(s));
        }
        out
    }

    /// Product in the free path algebra: non-composable pairs vanish.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let mut out = Self::zero(self.ctx);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                if let Some(pq) = p.concat(q) {
                    out.add_term(pq, a.times(b));
                }
            }
        }
        Ok(out)
    }

    /// `p · self · q` for single paths, the shape every rewrite step takes.
    pub fn sandwich(&self, left: &Path, right: &Path) -> Self {
        let mut out = Self::zero(self.ctx);
        for (m, c) in &self.terms {
            if let Some(lm) = left.concat(m) {
                if let Some(lmr) = lm.concat(right) {
                    out.add_term(lmr, c.clone());
                }
            }
        }
        out
    }

    /// Whether every term runs from `origin` to `terminus`.
    pub fn is_parallel_to(&self, p: &Path) -> bool {
        self.terms.keys().all(|q| q.is_parallel_to(p))
    }

    pub fn map_coeffs<D: Coefficient>(&self, ctx: D::Context, f: impl Fn(&C) -> D) -> AlgebraElement<D> {
        let mut out = AlgebraElement::zero(ctx);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c));
        }
        out
    }

    pub fn text(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let rendered = c.render();
            let (negative, magnitude) = match rendered.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, rendered),
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if magnitude != "1" {
                out.push_str(&magnitude);
                out.push(' ');
            }
            out.push_str(&p.text(q));
        }
        out
    }
}

impl AlgebraElement<Rational> {
    pub fn from_path_rational(p: Path) -> Self {
        Self::from_path(p, ())
    }
}

/// Parse `"γ*δ"` or `"e(1)"`.
pub fn parse_path(q: &Quiver, text: &str) -> Result<Path, Error> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix("e(").and_then(|t| t.strip_suffix(')')) {
        let v = q
            .vertex_index(inner)
            .ok_or_else(|| Error::Parse(format!("unknown vertex {inner:?}")))?;
        return Ok(Path::idempotent(v));
    }
    if text.is_empty() {
        return Err(Error::Parse("empty path".into()));
    }
    let mut arrows = Vec::new();
    for name in text.split('*') {
        let name = name.trim();
        let a = q
            .arrow_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown arrow {name:?}")))?;
        arrows.push(a);
    }
    Path::from_arrows(q, &arrows).ok_or_else(|| Error::Parse(format!("path {text:?} is not composable")))
}

/// Parse `"c1 p1 + c2 p2 - p3"`; a bare `0` is the zero element.
pub fn parse_element(q: &Quiver, text: &str) -> Result<RationalElement, Error> {
    let text = text.trim();
    let mut out = RationalElement::zero(());
    if text == "0" {
        return Ok(out);
    }
    // split on " + " / " - " at the top level; a leading '-' negates the first term
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut sign = false;
    let mut rest = text;
    if let Some(r) = rest.strip_prefix('-') {
        sign = true;
        rest = r.trim_start();
    }
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let next = match (plus, minus) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        match next {
            Some(i) => {
                chunks.push((sign, rest[..i].to_string()));
                sign = &rest[i..i + 3] == " - ";
                rest = &rest[i + 3..];
            }
            None => {
                chunks.push((sign, rest.to_string()));
                break;
            }
        }
    }
    for (negative, chunk) in chunks {
        let chunk = chunk.trim();
        let (coeff, path_text) = match chunk.split_once(char::is_whitespace) {
            Some((c, p)) => {
                let c = parse_rational(c).ok_or_else(|| Error::Parse(format!("bad coefficient in {chunk:?}")))?;
                (c, p.trim())
            }
            None => (Rational::from_integer(1.into()), chunk),
        };
        if coeff.is_zero() {
            continue;
        }
        let p = parse_path(q, path_text)?;
        out.add_term(p, if negative { -coeff } else { coeff });
    }
    Ok(out)
}
