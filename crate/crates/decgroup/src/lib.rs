//! Decomposition groups of zero-dimensional ideals over the rationals.
//!
//! Given a polynomial system with finitely many common zeros, the
//! decomposition group `Dec(I)` is the set of variable permutations that
//! map the ideal `I` onto itself. This crate computes it exactly:
//!
//! 1. a reduced Gröbner basis of the ideal ([`groebner`]),
//! 2. the multiplication matrices of the finite-dimensional quotient ring
//!    and their characteristic polynomials ([`quotient`], [`matrix`]),
//! 3. the partition of the variables by equal characteristic polynomials,
//! 4. per-block tagged characteristic polynomials whose symmetric groups
//!    multiply into a candidate group, and
//! 5. a definitional membership check confirming each candidate element
//!    ([`dec`]).
//!
//! The direct route from an explicit finite zero set is also provided, as
//! is the main application: transporting a triangular set along group
//! elements to obtain new triangular sets over the same zero set
//! ([`triangular`]).
//!
//! Start with the runnable examples (`cargo run --example dec_pipeline`)
//! or the `decgroup` binary (`decgroup dec system.txt --order lex`).
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! and every value is immutable after construction, so shared inputs can be
//! used from multiple threads freely.

pub mod cli;
pub mod dec;
pub mod error;
pub mod groebner;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod quotient;
pub mod rational;
pub mod triangular;

pub use dec::{
    apply_perm_polys, dec_from_points, dec_group, dec_group_from_basis, dec_oracle_member,
    partition_from_points, partition_variables, sym_group, DecOptions, DecResult,
    PointsDecResult, RadicalPolicy, Strategy, VariablePartition,
};
pub use error::{Error, Result};
pub use groebner::{
    buchberger, buchberger_with, ideal_of_points, is_zero_dimensional, normal_form,
    quotient_basis, radical_membership, radicalize, Budget, GroebnerBasis, QuotientBasis,
};
pub use matrix::{char_poly_rat, char_poly_sym, min_poly, PolyMatrix, RatMatrix};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use parse::{format_poly, format_system, parse_points, parse_system, ParseError};
pub use perm::{parse_cycles, PermGroup, Permutation};
pub use poly::Polynomial;
pub use quotient::{block_char_poly, mult_matrices, variable_char_polys, QuotientStructure};
pub use rational::Rat;
pub use triangular::{
    is_regular, is_triangular, orbit_triangular, resultant, verify_containment, OrbitElement,
    TriangularSet,
};
