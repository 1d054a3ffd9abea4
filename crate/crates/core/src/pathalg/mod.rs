//! Quivers, paths and exact linear combinations of paths.
//!
//! Paths are written right to left: in `γ*δ` the walk takes `δ` first.

mod element;
mod quiver;
mod scalar;

pub use element::{parse_element, parse_path, AlgebraElement, RationalElement};
pub use quiver::{Arrow, ArrowId, Path, PathDisplay, Quiver, VertexId};
pub use scalar::{frac, parse_rational, rat, Coefficient, FirstOrder, Rational, TruncPoly};
