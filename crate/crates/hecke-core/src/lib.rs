//! Exact computation of the irreducible characters of the type-A
//! Iwahori-Hecke algebra.
//!
//! The library computes character values chi^lambda_mu(q) two independent
//! ways and cross-validates them:
//!
//! - [`characters::dual_mn`]: a dual Murnaghan-Nakayama recursion that peels
//!   the largest part of the upper partition, summing over bounded
//!   sub-compositions of mu and brick tabloids;
//! - [`characters::frobenius_oracle`]: the Frobenius inner-product formula
//!   q^n/(q-1)^{l(mu)} <q_mu(x;q^{-1}), s_lambda>.
//!
//! Supporting machinery:
//! - [`arith`]: exact rationals, polynomials and rational functions in one
//!   formal variable;
//! - [`combinatorics`]: partitions, bounded sub-compositions, brick tabloids;
//! - [`symfunc`]: symmetric functions in the power-sum basis, the one-row
//!   Hall-Littlewood family, elementary and Schur functions;
//! - [`vertex`]: the vertex operators S_n and S*_n as linear operators on
//!   power-sum expansions.

pub mod arith;
pub mod characters;
pub mod combinatorics;
pub mod symfunc;
pub mod vertex;

pub use arith::{Int, Poly, Rat, RatFunc, ToIntPolyError};
pub use characters::{
    c_coefficient, character_table, dual_mn, dual_mn_grouped, e_expansion_check,
    frobenius_oracle, CharCache, CharTable, Method,
};
pub use combinatorics::{
    brick_tabloids, brick_tabloids_of_type, partitions_of, sub_compositions,
    subtract_to_partition, union_parts, z_of, z_of_t, BrickTabloid, Partition, SubComposition,
};
pub use symfunc::{elementary_e, omega_char, q_one_row, q_product, schur, PExpansion};
pub use vertex::{adjoint_check, apply_s, apply_s_star, diff_p};
