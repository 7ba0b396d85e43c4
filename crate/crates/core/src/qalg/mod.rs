//! Exact rational arithmetic and polynomial algebra.
//!
//! Everything downstream (curve models, dual families, period-map fibers,
//! lattices) is built on the types here: arbitrary-precision rationals,
//! dense univariate polynomials, homogeneous binary forms, canonical
//! rational functions, and dense bivariate polynomials with fraction-free
//! elimination. All values are immutable and all operations are pure.

pub mod binform;
pub mod bipoly;
pub mod error;
pub mod factor;
pub mod poly;
pub mod rat;
pub mod ratfn;
pub mod roots;

pub use binform::BinForm;
pub use bipoly::{gcd_bivariate, resultant_bivariate, squarefree1, BiPoly, Var};
pub use error::QalgError;
pub use poly::{
    disc_cubic, eval_proj_poly, poly_gcd, resultant, root_multiplicity, squarefree_decomposition,
    squarefree_part, UniPoly,
};
pub use rat::{format_rat, int, parse_proj, parse_rat, rat, rat_pow, Int, ParseRatError, ProjRat, Rat};
pub use ratfn::{compose_mobius, level_set, ratfn_degree, ratfn_eval, RatFn};
pub use roots::rational_roots;
