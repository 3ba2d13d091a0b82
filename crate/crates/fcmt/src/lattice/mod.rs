//! Integer lattices and affine monoids `ker(A) ∩ ℕᵗ ⊕ ℕᵘ`.

pub mod hilbert;
pub mod krull;
pub mod matrix;
pub mod normal_form;
pub mod presentation;

pub use hilbert::{hilbert_basis, is_atom, solve_homogeneous};
pub use krull::{
    class_group, class_group_with_budget, divisor_theory_check, prime_divisor_classes,
    zbasis_in_monoid_check, AbelianGroupInvariants, ClassGroup, CoordinateVerdict, Justification,
    DEFAULT_ATOM_BUDGET,
};
pub use matrix::IntMatrix;
pub use normal_form::{
    hermite_normal_form, kernel_lattice_basis, lattice_hnf, smith_normal_form, HermiteForm,
    SmithForm,
};
pub use presentation::{canonical_cmp, sort_canonical, MonoidElement, MonoidPresentation};
