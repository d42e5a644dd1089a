//! Exact computations with toric varieties.
//!
//! Lattices and cones, fans, presentations of affine toric varieties,
//! divisors with their Riemann–Roch bases, two-dimensional resolution of
//! singularities, and toric evaluation codes over finite fields. All
//! arithmetic is exact.

pub mod affine;
pub mod codes;
pub mod cones;
pub mod error;
pub mod fans;
pub mod lattice;
pub mod monomial;
pub mod polytopes;
pub mod resolution;

pub use error::{Error, Result};
pub use lattice::{
    dual_lattice, hermite_normal_form, integer_kernel_basis, primitive, smith_normal_form,
    DualLatticeData, IntMatrix, IntVector, Lattice, RationalVector,
};
pub use cones::{
    check_conjecture_G, dual_cone, faces, hilbert_basis, in_cone, in_dual_cone, is_regular,
    is_strongly_convex, normal_form_2d, Cone, HalfspaceRep, SemigroupGens,
};
pub use affine::{
    create_torus, toric_ideal, toric_ideal_up_to, toric_points, torus_embedding, AffineToricVariety,
    Binomial, BinomialIdeal, MonomialMap,
};
pub use fans::{
    fan_automorphism_group, gluing_map, is_fan_morphism, validate_fan, Fan, FanAutomorphismGroup, FanMorphism,
    Star,
};
pub use polytopes::{
    divisor_from_support, divisor_polytope, fan_from_polytope, is_cartier, is_strictly_upper_convex,
    polytope_from_support, riemann_roch, riemann_roch_monomials, support_from_divisor, support_from_polytope,
    Halfspace, LatticePolytope, SupportFunction, TDivisor,
};
pub use codes::{
    check_distance_conjecture, goppa_toric_code, hansen_bound, toric_code, torus_points, GaloisField, HansenBound,
    HansenCase, LinearCode, ToricCode,
};
pub use resolution::{desing_affine_toric_variety, refine_to_regular, resolution_map, Patch, Refinement2D, ResolutionMap};
