//! Exact-arithmetic toolkit for bielliptic genus-3 curves and the elliptic
//! surfaces they define.
//!
//! Given the normalized plane model `(z^2 + S(x,y))^2 = T(x,y)` of a
//! bielliptic curve of genus 3, this crate computes, entirely over Q:
//!
//! - the dual curve and the one-parameter dual family of bielliptic curves
//!   cut out of the symmetric square ([`curve`], [`family`]);
//! - the two degree-6 j-invariant maps on the parameter line and their
//!   ramification structure ([`family`]);
//! - period-map fibers, nodes of the image curve `a -> (j_F(a), j_K(a))`
//!   (counterexamples to global Torelli), image membership, and image
//!   self-duality ([`torelli`]);
//! - the rank-14 integral lattice of the elliptic surface, its printed
//!   intersection matrix, the glue-vector overlattices relating it to the
//!   Prym abelian-surface lattice, and the reconstruction correspondences
//!   in both directions ([`hodge_lattice`]).
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod curve;
pub mod family;
pub mod hodge_lattice;
pub mod qalg;
pub mod torelli;

pub use qalg::{BinForm, BiPoly, ProjRat, QalgError, Rat, RatFn, UniPoly};
