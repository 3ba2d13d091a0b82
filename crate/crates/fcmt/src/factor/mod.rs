//! Block monoids, factorizations, sets of lengths and elasticity.

mod blocks;
mod elasticity;
mod factorizations;

pub use blocks::{block_monoid, BlockSpec};
pub use elasticity::{
    elasticity_element, elasticity_monoid, elasticity_witness, is_factorial, is_half_factorial,
    reduce_for_transfer, ElasticityWitness,
};
pub use factorizations::{
    factorizations, factorizations_with_cap, length_set, prime_atom_count, Factorization,
    LengthSet, DEFAULT_FACTORIZATION_CAP,
};
