//! Pair modules over `ℚ → ℚ(∛2)` inside `L = ℚ(∛2, ω)`, decided by
//! idempotents of their endomorphism algebras.

mod decompose;
mod module;
mod tower;
mod upoly;

pub use decompose::{
    check_decomposition, decompose, displayed_rank4_decomposition, verify_decomposition, Decomposition,
    DecompositionCheck, Summand, RANDOM_TRIALS,
};
pub use module::{
    build_rank3_module, build_rank4_module, endomorphism_algebra, twisted_rank4_module, Convention, EndomorphismAlgebra, Matrix,
    PairModule,
};
pub use tower::{TowerAlgebra, TowerChecks};
