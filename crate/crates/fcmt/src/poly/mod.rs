//! Exact polynomial algebra over number fields: matrix factorizations,
//! Fitting ideals and ranks at minimal primes.

mod branch;
mod field;
mod groebner;
mod mf;
mod polynomial;

pub use branch::{
    branch_parametrizations, rank_at_branch, rank_over_rational_functions, rank_vector, split_type,
    BranchParam, BranchStrings,
};
pub use field::{FieldElement, NumberField};
pub(crate) use field::rational_root;
pub use groebner::{groebner_basis, ideal_contains, ideal_equal, reduce};
pub use mf::{
    a2_polynomial, block_diagonal, d2_polynomial, d3_polynomial, determinant, family_members,
    fitting_ideal, ideal_basis, is_reduced, mat_mul, matrix_strings, mf_family, minors, parse_matrix,
    verify_mf, CyclicLetter, MatrixFactorization, MfSpec, PolyMatrix,
};
pub use polynomial::{Monomial, Polynomial, VARIABLES};
