//! Free associative algebra over the rational function field, plus oriented
//! rewrite systems that normal-order words in the quantum-group generators
//! `(a, b, c, d)` and the plane generators `(x, y, ξ, η)`.

mod basis;
mod ideal;
mod ncpoly;
pub mod parse;
mod rewrite;

pub use basis::{change_of_basis, invert_linear_map, LinearMap};
pub use ideal::{canonical_form, ideal_defects, in_ideal, quotient_dimension};
pub use ncpoly::{GenSymbol, NCPoly, Word};
pub use parse::{parse_expression, ParseError};
pub use rewrite::{diamond_check, normal_order, RewriteRule, RewriteSystem, DEFAULT_STEP_CAP};
