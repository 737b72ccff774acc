//! Exact-arithmetic toolkit for plane curve singularities.
//!
//! Everything here is computed over the rationals with arbitrary precision;
//! there is no floating point anywhere. The main entry points are:
//!
//! - [`poly`]: bivariate polynomials over Q — parsing, shears, derivatives.
//! - [`ypoly`]: polynomials viewed as univariate in `y` — Sylvester resultants
//!   (fraction-free Bareiss), discriminants, approximate roots, intersection
//!   numbers.
//! - [`polygon`]: rational Newton polygons in canonical elementary form, with
//!   Minkowski sums and classification (convenient / special / integral).
//! - [`semigroup`]: Puiseux characteristics and branch semigroups — validity,
//!   the Zariski recursion in both directions, Bresinsky's criterion, Merle's
//!   formula.
//! - [`transform`]: the reduction and abrasion operators on convenient
//!   polygons.
//! - [`criteria`]: the three combinatorial tests deciding whether a polygon is
//!   the jacobian Newton polygon of a branch, with witness recovery.
//! - [`jacobian`]: the end-to-end pipeline from a defining polynomial to its
//!   jacobian Newton polygon, polar invariants and irreducibility verdict.
//! - [`contact`]: truncated fractional power series with cyclotomic
//!   coefficients, contact orders, Kuo-Lu trees and the tree-side polygon.

pub mod contact;
pub mod criteria;
pub mod error;
pub mod jacobian;
pub mod poly;
pub mod polygon;
pub mod rat;
pub mod semigroup;
pub mod transform;
pub mod ypoly;

pub use contact::{
    build_tree, contact_order, parse_roots_file, tree_polygon, ChildRef, Contact, ContactTree,
    CycloNum, FracSeries, Trunc,
};
pub use criteria::{
    abrasion_criterion, gamma_criterion, gamma_sequence, recover_characteristic,
    reduction_criterion, CriterionVerdict, GammaSeq,
};
pub use error::Error;
pub use jacobian::{
    jacobian_polygon, polar_invariants, polygon_for_shear, test_irreducible,
    IrreducibilityVerdict, NjpOptions, NjpResult, PolarInvariants,
};
pub use poly::{is_squarefree, parse_poly, Axis, BiPoly, VarPair};
pub use polygon::{polygon_from_support, polygon_of_poly, ElementaryTerm, Polygon, PolygonClass};
pub use rat::BigRat;
pub use semigroup::{
    bresinsky_check, char_to_semigroup, enumerate_characteristics, merle_polygon, parse_sequence,
    property1_gcd, semigroup_to_char, validate_characteristic, BresinskyReport, CharSeq, SgpGens,
};
pub use transform::{abrade, iterate, reduce, PolygonOp};
pub use ypoly::{approximate_root, discriminant_surface, intersection_number, resultant_y, YPoly};
